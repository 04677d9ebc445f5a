// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <tinysol/ast.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tinysol
{
enum class ParseErrorCode : std::uint8_t
{
    Syntax,
    DuplicateProcedure,
    ReservedFormal,
    DuplicateFormal,
    BalanceLhs,
    UnknownAddress,
    NonConstant,
    Io,
};

const char* error_code_name(ParseErrorCode code) noexcept;

struct SourcePos
{
    std::size_t line = 0;    ///< 1-based; 0 when unknown
    std::size_t column = 0;  ///< 1-based

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

class ParseError : public std::runtime_error
{
public:
    ParseError(ParseErrorCode code, SourcePos pos, std::string message, std::string file = {});

    ParseErrorCode code() const noexcept { return code_; }
    SourcePos pos() const noexcept { return pos_; }
    const std::string& file() const noexcept { return file_; }
    const std::string& message() const noexcept { return message_; }

    /// `file:line:col: error[code]: message`
    std::string diagnostic() const;

private:
    ParseErrorCode code_;
    SourcePos pos_;
    std::string message_;
    std::string file_;
};

struct ParseOptions
{
    /// Remove sugared nodes from the result. Off only for tests of the sugar itself.
    bool desugar = true;
};

/// Names visible as constants inside a procedure body: its formals plus
/// `sender` and `value`. In key positions (assignment lhs, operand of `?e`
/// and `e?`) a bare identifier outside this set is a string key.
using NameSet = std::set<std::string, std::less<>>;

NameSet procedure_scope(const std::vector<std::string>& formals);

/// Parses one `contract #Name { proc(x, y) { ... } ... }` definition and
/// checks the well-formedness rules: distinct procedure and formal names,
/// no `sender`/`value` formal, no literal `balance` on the left of `:=`.
Contract parse_contract(std::string_view source, const ParseOptions& options = {},
    std::string_view file = {});

Stmt::Ptr parse_stmt(std::string_view source, const NameSet& scope = procedure_scope({}),
    const ParseOptions& options = {});

Expr::Ptr parse_expr(std::string_view source, const NameSet& scope = procedure_scope({}));

/// Re-runs the well-formedness checks of parse_contract on a built AST.
void validate(const Contract& contract);

/// Replaces `e0.f(args)` by `e0.f(args) : 0`, `e1 ! e2` by
/// `e1.fskip() : e2` and `if e then S` by `if e then S else skip`.
Stmt::Ptr desugar(const Stmt::Ptr& stmt);
Contract desugar(const Contract& contract);

bool is_desugared(const Stmt& stmt);

std::string print_expr(const Expr& e, const NameSet& scope = procedure_scope({}));
std::string print_stmt(const Stmt& s, const NameSet& scope = procedure_scope({}),
    int indent = 0);
std::string print_contract(const Contract& c);

bool is_identifier(std::string_view s) noexcept;
bool is_keyword(std::string_view s) noexcept;

}  // namespace tinysol

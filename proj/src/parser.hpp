// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Lexer and recursive-descent parser shared by contract and scenario files.

#include <tinysol/syntax.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace tinysol::detail
{
enum class TokenKind : std::uint8_t
{
    Ident,
    Account,
    ContractAddr,
    Int,
    String,
    Punct,
    End,
};

struct Token
{
    TokenKind kind = TokenKind::End;
    std::string text;  ///< identifier / address name / digits / decoded string / punctuation
    SourcePos pos;
};

std::vector<Token> tokenize(std::string_view source, const std::string& file);

class Parser
{
public:
    Parser(std::string_view source, std::string file);

    const Token& peek(std::size_t ahead = 0) const;
    const Token& advance();
    bool at_end() const { return peek().kind == TokenKind::End; }

    bool is_punct(std::string_view p, std::size_t ahead = 0) const;
    bool is_word(std::string_view w, std::size_t ahead = 0) const;
    bool accept_punct(std::string_view p);
    bool accept_word(std::string_view w);
    const Token& expect_punct(std::string_view p);
    void expect_word(std::string_view w);
    std::string expect_ident(std::string_view what);
    Address expect_address(std::string_view what);
    std::string expect_string(std::string_view what);

    [[noreturn]] void fail(ParseErrorCode code, SourcePos pos, std::string message) const;
    [[noreturn]] void unexpected(std::string_view wanted) const;

    Expr::Ptr expression(const NameSet& scope);
    Stmt::Ptr statement(const NameSet& scope);
    /// Statements separated by `;` up to (not including) the closing `}`.
    Stmt::Ptr statement_list(const NameSet& scope);
    Contract contract();

    const std::string& file() const { return file_; }

private:
    Expr::Ptr or_expr(const NameSet& scope);
    Expr::Ptr and_expr(const NameSet& scope);
    Expr::Ptr not_expr(const NameSet& scope);
    Expr::Ptr cmp_expr(const NameSet& scope);
    Expr::Ptr add_expr(const NameSet& scope);
    Expr::Ptr mul_expr(const NameSet& scope);
    Expr::Ptr unary(const NameSet& scope);
    Expr::Ptr postfix(const NameSet& scope);
    Expr::Ptr primary(const NameSet& scope);
    Procedure procedure();

    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
    std::string file_;
};

/// Bare identifier in key position denotes a string key unless it is in scope.
Expr::Ptr as_key(const Expr::Ptr& e, const NameSet& scope);

}  // namespace tinysol::detail

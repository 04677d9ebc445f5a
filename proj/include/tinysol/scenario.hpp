// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <tinysol/ast.hpp>
#include <tinysol/syntax.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tinysol
{
/// `caller →amount callee : proc(args)`. Callers are accounts.
struct Transaction
{
    Address caller;
    Address callee;
    std::string proc;
    std::vector<Value> args;
    BigInt amount = 0;

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// `@A -> #C.f(2, @B) : 3`
std::string to_string(const Transaction& tx);

/// Transactions in order; the order is the semantics.
using Blockchain = std::vector<Transaction>;

struct AccountDecl
{
    Address address;
    BigInt balance;
    SourcePos pos;
};

struct ContractDecl
{
    Contract contract;             ///< already renamed to the declared address
    std::optional<BigInt> balance;
    std::vector<std::pair<Value, Value>> seeds;
    std::string source;            ///< path as written in the scenario
    SourcePos pos;
};

/// Closed expression checked against the final state.
struct Expectation
{
    Expr::Ptr expr;
    std::string text;
    SourcePos pos;
};

struct Scenario
{
    std::string name;
    std::vector<AccountDecl> accounts;
    std::vector<ContractDecl> contracts;
    Blockchain transactions;
    std::vector<Expectation> expects;
};

/// Returns the text of a contract file named in a `from` clause.
using SourceLoader = std::function<std::string(const std::string& path)>;

/// Grammar:
///
///     scenario [name]
///     accounts { @A: 5, @B: 0 }
///     contract #C from "wallet.tns" [balance N] [{ key: value, ... }]
///     tx @A -> #C.f(args) [: amount]
///     expect <expression>
///
/// Transaction arguments and seeded keys are closed constant expressions
/// (`hash(7)` is fine, `?k` is not). Throws ParseError; transactions naming an
/// undeclared contract fail with ParseErrorCode::UnknownAddress.
Scenario parse_scenario(std::string_view source, const SourceLoader& loader,
    std::string_view file = {});

/// Reads a scenario file; `from` paths resolve against its directory.
Scenario load_scenario(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace tinysol

// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <tinysol/ast.hpp>

#include <map>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace tinysol
{
/// Fixed map from addresses to contracts. Every account address implicitly
/// holds the single procedure `fskip() { skip }`.
class Registry
{
public:
    Registry() = default;
    explicit Registry(std::vector<Contract> contracts);

    /// Throws std::invalid_argument on a duplicate or non-contract address.
    void add(Contract contract);

    /// Procedure `proc` of the contract at `a`, or nullptr.
    const Procedure* find(const Address& a, std::string_view proc) const;

    const Contract* contract(const Address& a) const;

    /// Accounts are always known; contracts only once added.
    bool knows(const Address& a) const { return a.is_account() || contracts_.contains(a); }

    const std::map<Address, Contract>& contracts() const noexcept { return contracts_; }

    static const Procedure& account_procedure();

private:
    std::map<Address, Contract> contracts_;
};

}  // namespace tinysol

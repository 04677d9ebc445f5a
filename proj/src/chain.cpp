// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <tinysol/chain.hpp>

#include <set>

namespace tinysol
{
const char* rule_name(TxRule r) noexcept
{
    return r == TxRule::Tx1 ? "Tx1" : "Tx2";
}

const char* genesis_error_name(GenesisErrorCode c) noexcept
{
    switch (c)
    {
    case GenesisErrorCode::DuplicateAddress:
        return "duplicate-address";
    case GenesisErrorCode::NegativeGenesisBalance:
        return "negative-genesis-balance";
    case GenesisErrorCode::BalanceConflict:
        return "balance-conflict";
    }
    return "unknown";
}

GenesisError::GenesisError(GenesisErrorCode code, SourcePos pos, const std::string& message)
  : std::runtime_error{message}, code_{code}, pos_{pos}
{}

std::map<Address, BigInt> balance_deltas(const State& before, const State& after)
{
    std::set<Address> addrs;
    for (const auto& a : before.addresses())
        addrs.insert(a);
    for (const auto& a : after.addresses())
        addrs.insert(a);
    std::map<Address, BigInt> out;
    for (const auto& a : addrs)
    {
        BigInt d = after.balance(a) - before.balance(a);
        if (d != 0)
            out.emplace(a, std::move(d));
    }
    return out;
}

namespace
{
void check_invariants(const State& before, const State& after, std::size_t index)
{
    std::vector<Address> addrs = before.addresses();
    for (const auto& a : after.addresses())
        addrs.push_back(a);
    if (total_supply(before, addrs) != total_supply(after, addrs))
        throw InvariantViolation{
            "transaction " + std::to_string(index) + " changed the total supply"};
    if (!well_formed(after))
        throw InvariantViolation{
            "transaction " + std::to_string(index) + " produced an ill-formed state"};
}
}  // namespace

TxResult apply_tx(const Registry& registry, const State& s, const Transaction& tx,
    const ChainOptions& options, std::size_t index)
{
    Receipt receipt{index, tx, TxRule::Tx1, std::nullopt, 0, {}};
    Fuel fuel{options.fuel};

    Outcome<State> out = [&]() -> Outcome<State> {
        if (options.strict_callee && !tx.callee.is_contract())
            return EvalFailure{Cause::UnknownProcedure,
                "transaction callee " + to_string(tx.callee) + " is not a contract"};
        return call_procedure(
            registry, s, tx.caller, tx.callee, tx.proc, tx.args, tx.amount, fuel, options.trace);
    }();
    receipt.fuel_used = options.fuel - fuel.remaining;

    if (!out)
    {
        receipt.rule = TxRule::Tx2;
        receipt.failure = out.failure();
        return {s, std::move(receipt)};
    }
    check_invariants(s, *out, index);
    receipt.deltas = balance_deltas(s, *out);
    return {std::move(out).value(), std::move(receipt)};
}

ChainResult apply_chain(const Registry& registry, const State& s,
    std::span<const Transaction> chain, const ChainOptions& options)
{
    ChainResult result{s, {}};
    result.receipts.reserve(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i)
    {
        auto step = apply_tx(registry, result.final_state, chain[i], options, i);
        result.final_state = std::move(step.state);
        result.receipts.push_back(std::move(step.receipt));
    }
    return result;
}

World genesis(const Scenario& scenario)
{
    World w;
    std::set<Address> seen;
    auto declare = [&](const Address& a, const BigInt& balance, SourcePos pos) {
        if (!seen.insert(a).second)
            throw GenesisError{GenesisErrorCode::DuplicateAddress, pos,
                "address " + to_string(a) + " is declared twice"};
        if (balance < 0)
            throw GenesisError{GenesisErrorCode::NegativeGenesisBalance, pos,
                "address " + to_string(a) + " has negative balance " + balance.str()};
    };

    for (const auto& acct : scenario.accounts)
    {
        declare(acct.address, acct.balance, acct.pos);
        w.state = w.state.set(acct.address, balance_key, Value{acct.balance});
    }
    for (const auto& decl : scenario.contracts)
    {
        const BigInt balance = decl.balance.value_or(0);
        declare(decl.contract.address, balance, decl.pos);
        Store store{{balance_key, Value{balance}}};
        for (const auto& [k, v] : decl.seeds)
        {
            if (k == balance_key)
                throw GenesisError{GenesisErrorCode::BalanceConflict, decl.pos,
                    "contract " + to_string(decl.contract.address) +
                        " seeds \"balance\"; use the 'balance' clause"};
            store.insert_or_assign(k, v);
        }
        w.state = w.state.with_store(decl.contract.address, std::move(store));
        w.registry.add(decl.contract);
    }
    return w;
}

}  // namespace tinysol

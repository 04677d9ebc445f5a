// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <tinysol/interp.hpp>
#include <tinysol/registry.hpp>
#include <tinysol/scenario.hpp>
#include <tinysol/state.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace tinysol
{
inline constexpr std::uint64_t default_fuel = 100000;

enum class TxRule : std::uint8_t
{
    Tx1,  ///< body evaluated, post-state kept
    Tx2,  ///< undefined outcome, state unchanged
};

const char* rule_name(TxRule r) noexcept;

struct ChainOptions
{
    std::uint64_t fuel = default_fuel;  ///< per transaction
    const TraceSink* trace = nullptr;
    bool strict_callee = false;         ///< reject transactions to accounts
};

struct Receipt
{
    std::size_t index = 0;
    Transaction tx;
    TxRule rule = TxRule::Tx1;
    std::optional<EvalFailure> failure;
    std::uint64_t fuel_used = 0;
    std::map<Address, BigInt> deltas;  ///< nonzero balance changes only

    friend bool operator==(const Receipt&, const Receipt&) = default;
};

struct TxResult
{
    State state;
    Receipt receipt;
};

struct ChainResult
{
    State final_state;
    std::vector<Receipt> receipts;
};

/// Raised when a transaction breaks conservation or well-formedness.
/// A correct interpreter never throws it.
class InvariantViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Total: on any failure the result state is the input state.
TxResult apply_tx(const Registry& registry, const State& s, const Transaction& tx,
    const ChainOptions& options = {}, std::size_t index = 0);

/// Left fold of apply_tx.
ChainResult apply_chain(const Registry& registry, const State& s,
    std::span<const Transaction> chain, const ChainOptions& options = {});

std::map<Address, BigInt> balance_deltas(const State& before, const State& after);

enum class GenesisErrorCode : std::uint8_t
{
    DuplicateAddress,
    NegativeGenesisBalance,
    BalanceConflict,
};

const char* genesis_error_name(GenesisErrorCode c) noexcept;

class GenesisError : public std::runtime_error
{
public:
    GenesisError(GenesisErrorCode code, SourcePos pos, const std::string& message);

    GenesisErrorCode code() const noexcept { return code_; }
    SourcePos pos() const noexcept { return pos_; }

private:
    GenesisErrorCode code_;
    SourcePos pos_;
};

struct World
{
    State state;
    Registry registry;
};

/// Initial state and registry of a scenario.
World genesis(const Scenario& scenario);

}  // namespace tinysol

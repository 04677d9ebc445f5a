// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <tinysol/value.hpp>

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tinysol
{
/// Key-value store of one address. Always binds "balance".
using Store = std::map<Value, Value>;

inline const Value balance_key{std::string{"balance"}};

/// The unit of a state update: `a.k`.
struct QualifiedKey
{
    Address address;
    Value key;

    friend auto operator<=>(const QualifiedKey&, const QualifiedKey&) = default;
    friend bool operator==(const QualifiedKey&, const QualifiedKey&) = default;
};

/// Finite substitution from qualified keys to values.
using StateUpdate = std::map<QualifiedKey, Value>;

class InsufficientFunds : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Total map from addresses to stores.
///
/// A State is an immutable value: every operation returns a new State and
/// leaves its argument untouched, so a caller can keep the pre-state of a
/// transaction and return it on rollback. Stores are shared between states
/// until written. Addresses absent from the table read as `{balance: 0}`.
class State
{
public:
    State() = default;

    /// The stored binding, or nullopt for an unbound key.
    std::optional<Value> get(const Address& a, const Value& key) const;

    BigInt balance(const Address& a) const;

    const Store& store(const Address& a) const;

    /// Whether the address is materialized in the table (for dumps).
    bool contains(const Address& a) const { return stores_.contains(a); }

    std::vector<Address> addresses() const;

    /// σ{a.k ↦ v}
    State set(const Address& a, const Value& key, Value v) const;

    /// Replaces the whole store of `a`. A missing "balance" is bound to 0.
    State with_store(const Address& a, Store store) const;

    /// Equality of the total maps: an absent address equals `{balance: 0}`.
    friend bool operator==(const State& x, const State& y);

private:
    std::map<Address, std::shared_ptr<const Store>> stores_;
};

std::optional<Value> get(const State& s, const Address& a, const Value& key);

/// σπ: bindings of π override, everything else is unchanged.
State apply_update(const State& s, const StateUpdate& update);

/// σ + a:n
State credit(const State& s, const Address& a, const BigInt& n);

/// σ − a:n. Throws InsufficientFunds if n exceeds the balance of `a`.
State debit(const State& s, const Address& a, const BigInt& n);

BigInt total_supply(const State& s, std::span<const Address> addrs);

/// Sum over every address materialized in `s`.
BigInt total_supply(const State& s);

/// Accounts bind only "balance"; every balance is a non-negative integer.
bool well_formed(const State& s);

struct StateRecord
{
    Address address;
    Value key;
    Value value;

    friend bool operator==(const StateRecord&, const StateRecord&) = default;
};

/// One record per qualified key, addresses and keys in canonical order.
std::vector<StateRecord> export_records(const State& s);

/// `@A.balance = 5`, or `#C[(1, 2)] = v` for keys that are not names.
std::string to_string(const StateRecord& r);

/// Deterministic text dump, one `@A.balance = 5` line per binding.
std::string dump(const State& s);

}  // namespace tinysol

// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <tinysol/state.hpp>

#include <cctype>
#include <set>

namespace tinysol
{
namespace
{
bool plain_name(const std::string& s)
{
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front())))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

const Store& empty_store()
{
    static const Store store{{balance_key, Value{0}}};
    return store;
}
}  // namespace

std::optional<Value> State::get(const Address& a, const Value& key) const
{
    const Store& s = store(a);
    if (auto it = s.find(key); it != s.end())
        return it->second;
    return std::nullopt;
}

BigInt State::balance(const Address& a) const
{
    const auto v = get(a, balance_key);
    return v && v->is_int() ? v->as_int() : BigInt{0};
}

const Store& State::store(const Address& a) const
{
    if (auto it = stores_.find(a); it != stores_.end())
        return *it->second;
    return empty_store();
}

std::vector<Address> State::addresses() const
{
    std::vector<Address> out;
    out.reserve(stores_.size());
    for (const auto& [a, _] : stores_)
        out.push_back(a);
    return out;
}

State State::set(const Address& a, const Value& key, Value v) const
{
    Store s = store(a);
    s.insert_or_assign(key, std::move(v));
    State out = *this;
    out.stores_[a] = std::make_shared<const Store>(std::move(s));
    return out;
}

State State::with_store(const Address& a, Store store) const
{
    store.try_emplace(balance_key, Value{0});
    State out = *this;
    out.stores_[a] = std::make_shared<const Store>(std::move(store));
    return out;
}

bool operator==(const State& x, const State& y)
{
    std::set<Address> all;
    for (const auto& [a, _] : x.stores_)
        all.insert(a);
    for (const auto& [a, _] : y.stores_)
        all.insert(a);
    for (const auto& a : all)
    {
        const Store& sx = x.store(a);
        const Store& sy = y.store(a);
        if (&sx != &sy && sx != sy)
            return false;
    }
    return true;
}

std::optional<Value> get(const State& s, const Address& a, const Value& key)
{
    return s.get(a, key);
}

State apply_update(const State& s, const StateUpdate& update)
{
    std::map<Address, Store> touched;
    for (const auto& [qk, v] : update)
    {
        auto [it, fresh] = touched.try_emplace(qk.address);
        if (fresh)
            it->second = s.store(qk.address);
        it->second.insert_or_assign(qk.key, v);
    }
    State out = s;
    for (auto& [a, store] : touched)
        out = out.with_store(a, std::move(store));
    return out;
}

State credit(const State& s, const Address& a, const BigInt& n)
{
    return s.set(a, balance_key, Value{s.balance(a) + n});
}

State debit(const State& s, const Address& a, const BigInt& n)
{
    const BigInt current = s.balance(a);
    if (n > current)
        throw InsufficientFunds{"debit of " + n.str() + " from " + to_string(a) +
                                " exceeds its balance " + current.str()};
    return s.set(a, balance_key, Value{current - n});
}

BigInt total_supply(const State& s, std::span<const Address> addrs)
{
    std::set<Address> unique{addrs.begin(), addrs.end()};
    BigInt sum = 0;
    for (const auto& a : unique)
        sum += s.balance(a);
    return sum;
}

BigInt total_supply(const State& s)
{
    const auto addrs = s.addresses();
    return total_supply(s, addrs);
}

bool well_formed(const State& s)
{
    for (const auto& a : s.addresses())
    {
        const Store& store = s.store(a);
        auto it = store.find(balance_key);
        if (it == store.end() || !it->second.is_int() || it->second.as_int() < 0)
            return false;
        if (a.is_account() && store.size() != 1)
            return false;
    }
    return true;
}

std::vector<StateRecord> export_records(const State& s)
{
    std::vector<StateRecord> out;
    for (const auto& a : s.addresses())
        for (const auto& [k, v] : s.store(a))
            out.push_back({a, k, v});
    return out;
}

std::string to_string(const StateRecord& r)
{
    std::string out = to_string(r.address);
    if (r.key.is_str() && plain_name(r.key.as_str()))
        out += "." + r.key.as_str();
    else
        out += "[" + to_string(r.key) + "]";
    return out + " = " + to_string(r.value);
}

std::string dump(const State& s)
{
    std::string out;
    for (const auto& r : export_records(s))
        out += to_string(r) + "\n";
    return out;
}

}  // namespace tinysol

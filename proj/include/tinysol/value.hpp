// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace tinysol
{
using BigInt = boost::multiprecision::cpp_int;

enum class AddressKind : std::uint8_t
{
    Account,   ///< written `@name`
    Contract,  ///< written `#name`
};

struct Address
{
    AddressKind kind = AddressKind::Account;
    std::string name;

    static Address account(std::string name) { return {AddressKind::Account, std::move(name)}; }
    static Address contract(std::string name) { return {AddressKind::Contract, std::move(name)}; }

    bool is_account() const noexcept { return kind == AddressKind::Account; }
    bool is_contract() const noexcept { return kind == AddressKind::Contract; }

    /// Accounts sort before contracts, then by name.
    friend auto operator<=>(const Address&, const Address&) = default;
    friend bool operator==(const Address&, const Address&) = default;
};

std::string to_string(const Address& a);

class Value;

struct Pair;

/// Runtime value. Also the type of store keys.
///
/// Equality is total: values of different variants compare unequal. The
/// ordering is canonical (variant tag first, then componentwise) and is used
/// for deterministic maps and printing only.
class Value
{
public:
    enum class Tag : std::uint8_t
    {
        Int,
        Bool,
        Str,
        Addr,
        Pair,
    };

    Value() : data_{BigInt{0}} {}
    Value(BigInt v) : data_{std::move(v)} {}
    Value(int v) : data_{BigInt{v}} {}
    Value(long v) : data_{BigInt{v}} {}
    Value(long long v) : data_{BigInt{v}} {}
    Value(bool v) : data_{v} {}
    Value(std::string v) : data_{std::move(v)} {}
    Value(const char* v) : data_{std::string{v}} {}
    Value(Address v) : data_{std::move(v)} {}
    Value(Value first, Value second);

    Tag tag() const noexcept { return static_cast<Tag>(data_.index()); }

    bool is_int() const noexcept { return tag() == Tag::Int; }
    bool is_bool() const noexcept { return tag() == Tag::Bool; }
    bool is_str() const noexcept { return tag() == Tag::Str; }
    bool is_addr() const noexcept { return tag() == Tag::Addr; }
    bool is_pair() const noexcept { return tag() == Tag::Pair; }

    const BigInt& as_int() const { return std::get<BigInt>(data_); }
    bool as_bool() const { return std::get<bool>(data_); }
    const std::string& as_str() const { return std::get<std::string>(data_); }
    const Address& as_addr() const { return std::get<Address>(data_); }
    const Value& first() const;
    const Value& second() const;

    friend bool operator==(const Value& a, const Value& b);
    friend std::strong_ordering operator<=>(const Value& a, const Value& b);

private:
    std::variant<BigInt, bool, std::string, Address, std::shared_ptr<const Pair>> data_;
};

struct Pair
{
    Value first;
    Value second;
};

const char* tag_name(Value::Tag t) noexcept;

/// Source-syntax rendering: `42`, `-3`, `true`, `"text"`, `@A`, `#C`, `(v, w)`.
std::string to_string(const Value& v);

/// Quotes and escapes a string the way the lexer reads it back.
std::string quote(std::string_view s);

/// Tagged, length-prefixed byte serialization. Distinct values map to
/// distinct byte strings; this is the input of `hash`.
std::string canonical_bytes(const Value& v);

}  // namespace tinysol

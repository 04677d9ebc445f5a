// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <tinysol/ast.hpp>
#include <tinysol/registry.hpp>
#include <tinysol/state.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tinysol
{
/// Why an evaluation is undefined. Every cause means the same thing to a
/// transaction (it rolls back); the distinction is for diagnostics.
enum class Cause : std::uint8_t
{
    Throw,
    UnboundConst,
    UndefinedKeyRead,
    BadLhs,
    TypeMismatch,
    UnknownProcedure,
    ArityMismatch,
    NegativeAmount,
    InsufficientFunds,
    BalanceAssign,
    FuelExhausted,
};

const char* cause_name(Cause c) noexcept;

struct EvalFailure
{
    Cause cause;
    std::string detail;

    friend bool operator==(const EvalFailure&, const EvalFailure&) = default;
};

/// Either a result or the undefined outcome.
template <typename T>
class Outcome
{
public:
    Outcome(T v) : data_{std::in_place_index<0>, std::move(v)} {}
    Outcome(EvalFailure f) : data_{std::in_place_index<1>, std::move(f)} {}

    bool ok() const noexcept { return data_.index() == 0; }
    explicit operator bool() const noexcept { return ok(); }

    const T& value() const& { return std::get<0>(data_); }
    T& value() & { return std::get<0>(data_); }
    T&& value() && { return std::get<0>(std::move(data_)); }

    const EvalFailure& failure() const { return std::get<1>(data_); }
    Cause cause() const { return failure().cause; }

    const T* operator->() const { return &value(); }
    const T& operator*() const& { return value(); }

private:
    std::variant<T, EvalFailure> data_;
};

/// Constant names bound during one procedure activation.
using Env = std::map<std::string, Value, std::less<>>;

/// {sender ↦ caller, value ↦ amount, x1 ↦ v1, ...}. Sizes must match.
Env make_call_env(const Address& sender, const BigInt& amount,
    const std::vector<std::string>& formals, const std::vector<Value>& args);

/// Step budget. One unit is consumed per statement node executed, so each
/// loop iteration and each procedure body costs at least one.
struct Fuel
{
    std::uint64_t remaining = 0;
};

struct TraceEvent
{
    std::string rule;     ///< skip, throw, assign, seq, if, while, call, return, fail
    Address at;           ///< address the rule runs in
    std::size_t depth;    ///< procedure activation depth, 0 for a bare statement
    std::string detail;
};

using TraceSink = std::function<void(const TraceEvent&)>;

/// Expression semantics. Pure: never changes the state.
Outcome<Value> eval_expr(const State& s, const Env& env, const Address& at, const Expr& e);

/// Applies a built-in operator to evaluated operands.
Outcome<Value> apply_operator(Operator op, const std::vector<Value>& args);

/// Statement semantics. Sugared nodes are accepted and mean their expansion.
///
/// The evaluator keeps its own continuation stack, so re-entrant call depth
/// is limited by fuel, not by the native stack.
Outcome<State> exec_stmt(const Registry& registry, const State& s, const Env& env,
    const Address& at, const Stmt& stmt, Fuel& fuel, const TraceSink* trace = nullptr);

/// Transfers `amount` from caller to callee and runs `callee.proc(args)`.
/// Shared by the call statement and by transactions.
Outcome<State> call_procedure(const Registry& registry, const State& s, const Address& caller,
    const Address& callee, std::string_view proc, const std::vector<Value>& args,
    const BigInt& amount, Fuel& fuel, const TraceSink* trace = nullptr);

/// SHA-256 of canonical_bytes(v) as a lowercase hex string value.
Value hash(const Value& v);

}  // namespace tinysol

// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <tinysol/value.hpp>

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace tinysol
{
enum class Operator : std::uint8_t
{
    Add,
    Sub,
    Mul,
    Div,
    Mod,
    Neg,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
    Not,
    Concat,
    Hash,
    Fst,
    Snd,
    MakePair,
};

const char* operator_symbol(Operator op) noexcept;
std::size_t operator_arity(Operator op) noexcept;

/// Expression tree. Nodes are immutable and shared.
struct Expr
{
    using Ptr = std::shared_ptr<const Expr>;

    struct Lit
    {
        Value value;
    };
    /// Constant name resolved in the environment (formals, `sender`, `value`).
    struct Const
    {
        std::string name;
    };
    struct Addr
    {
        Address address;
    };
    struct Apply
    {
        Operator op;
        std::vector<Ptr> args;
    };
    /// `?e`: value bound to key e in the current store.
    struct Lookup
    {
        Ptr key;
    };
    /// `e?`: whether key e is bound in the current store.
    struct Bound
    {
        Ptr key;
    };
    /// `#C :: e`: evaluate e with #C as the current address.
    struct Context
    {
        Address address;
        Ptr body;
    };

    std::variant<Lit, Const, Addr, Apply, Lookup, Bound, Context> node;
};

bool operator==(const Expr& a, const Expr& b);

struct Stmt
{
    using Ptr = std::shared_ptr<const Stmt>;

    struct Skip
    {};
    struct Throw
    {};
    struct Assign
    {
        Expr::Ptr lhs;
        Expr::Ptr rhs;
    };
    struct Seq
    {
        Ptr first;
        Ptr second;
    };
    /// A null else_branch is the `if e then S` sugar.
    struct If
    {
        Expr::Ptr cond;
        Ptr then_branch;
        Ptr else_branch;
    };
    struct While
    {
        Expr::Ptr cond;
        Ptr body;
    };
    /// A null amount is the no-transfer sugar (amount 0).
    struct Call
    {
        Expr::Ptr target;
        std::string proc;
        std::vector<Expr::Ptr> args;
        Expr::Ptr amount;
    };
    /// `target ! amount`, sugar for `target.fskip() : amount`.
    struct Transfer
    {
        Expr::Ptr target;
        Expr::Ptr amount;
    };

    std::variant<Skip, Throw, Assign, Seq, If, While, Call, Transfer> node;
};

bool operator==(const Stmt& a, const Stmt& b);

/// Deep structural equality on possibly-null pointers.
bool same(const Expr::Ptr& a, const Expr::Ptr& b);
bool same(const Stmt::Ptr& a, const Stmt::Ptr& b);

inline constexpr const char* skip_procedure_name = "fskip";

struct Procedure
{
    std::string name;
    std::vector<std::string> formals;
    Stmt::Ptr body;
};

bool operator==(const Procedure& a, const Procedure& b);

struct Contract
{
    Address address;
    std::vector<Procedure> procedures;

    const Procedure* find(std::string_view name) const noexcept;
};

bool operator==(const Contract& a, const Contract& b);

/// Node constructors.
namespace ast
{
Expr::Ptr lit(Value v);
Expr::Ptr name(std::string n);
Expr::Ptr addr(Address a);
Expr::Ptr apply(Operator op, std::vector<Expr::Ptr> args);
Expr::Ptr lookup(Expr::Ptr key);
Expr::Ptr bound(Expr::Ptr key);
Expr::Ptr context(Address a, Expr::Ptr body);

Stmt::Ptr skip();
Stmt::Ptr throw_();
Stmt::Ptr assign(Expr::Ptr lhs, Expr::Ptr rhs);
Stmt::Ptr seq(Stmt::Ptr first, Stmt::Ptr second);
Stmt::Ptr if_(Expr::Ptr cond, Stmt::Ptr then_branch, Stmt::Ptr else_branch = nullptr);
Stmt::Ptr while_(Expr::Ptr cond, Stmt::Ptr body);
Stmt::Ptr call(Expr::Ptr target, std::string proc, std::vector<Expr::Ptr> args,
    Expr::Ptr amount = nullptr);
Stmt::Ptr transfer(Expr::Ptr target, Expr::Ptr amount);
}  // namespace ast

}  // namespace tinysol

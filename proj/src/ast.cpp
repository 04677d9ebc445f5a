// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <tinysol/ast.hpp>

#include <algorithm>

namespace tinysol
{
const char* operator_symbol(Operator op) noexcept
{
    switch (op)
    {
    case Operator::Add:
        return "+";
    case Operator::Sub:
        return "-";
    case Operator::Mul:
        return "*";
    case Operator::Div:
        return "/";
    case Operator::Mod:
        return "%";
    case Operator::Neg:
        return "-";
    case Operator::Eq:
        return "==";
    case Operator::Ne:
        return "!=";
    case Operator::Lt:
        return "<";
    case Operator::Le:
        return "<=";
    case Operator::Gt:
        return ">";
    case Operator::Ge:
        return ">=";
    case Operator::And:
        return "&&";
    case Operator::Or:
        return "||";
    case Operator::Not:
        return "not";
    case Operator::Concat:
        return "^";
    case Operator::Hash:
        return "hash";
    case Operator::Fst:
        return "fst";
    case Operator::Snd:
        return "snd";
    case Operator::MakePair:
        return ",";
    }
    return "?";
}

std::size_t operator_arity(Operator op) noexcept
{
    switch (op)
    {
    case Operator::Neg:
    case Operator::Not:
    case Operator::Hash:
    case Operator::Fst:
    case Operator::Snd:
        return 1;
    default:
        return 2;
    }
}

namespace
{
bool same_args(const std::vector<Expr::Ptr>& a, const std::vector<Expr::Ptr>& b)
{
    return std::equal(a.begin(), a.end(), b.begin(), b.end(),
        [](const Expr::Ptr& x, const Expr::Ptr& y) { return same(x, y); });
}

struct ExprEq
{
    bool operator()(const Expr::Lit& a, const Expr::Lit& b) const { return a.value == b.value; }
    bool operator()(const Expr::Const& a, const Expr::Const& b) const { return a.name == b.name; }
    bool operator()(const Expr::Addr& a, const Expr::Addr& b) const
    {
        return a.address == b.address;
    }
    bool operator()(const Expr::Apply& a, const Expr::Apply& b) const
    {
        return a.op == b.op && same_args(a.args, b.args);
    }
    bool operator()(const Expr::Lookup& a, const Expr::Lookup& b) const
    {
        return same(a.key, b.key);
    }
    bool operator()(const Expr::Bound& a, const Expr::Bound& b) const
    {
        return same(a.key, b.key);
    }
    bool operator()(const Expr::Context& a, const Expr::Context& b) const
    {
        return a.address == b.address && same(a.body, b.body);
    }
    template <typename A, typename B>
    bool operator()(const A&, const B&) const
    {
        return false;
    }
};

struct StmtEq
{
    bool operator()(const Stmt::Skip&, const Stmt::Skip&) const { return true; }
    bool operator()(const Stmt::Throw&, const Stmt::Throw&) const { return true; }
    bool operator()(const Stmt::Assign& a, const Stmt::Assign& b) const
    {
        return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
    }
    bool operator()(const Stmt::Seq& a, const Stmt::Seq& b) const
    {
        return same(a.first, b.first) && same(a.second, b.second);
    }
    bool operator()(const Stmt::If& a, const Stmt::If& b) const
    {
        return same(a.cond, b.cond) && same(a.then_branch, b.then_branch) &&
               same(a.else_branch, b.else_branch);
    }
    bool operator()(const Stmt::While& a, const Stmt::While& b) const
    {
        return same(a.cond, b.cond) && same(a.body, b.body);
    }
    bool operator()(const Stmt::Call& a, const Stmt::Call& b) const
    {
        return same(a.target, b.target) && a.proc == b.proc && same_args(a.args, b.args) &&
               same(a.amount, b.amount);
    }
    bool operator()(const Stmt::Transfer& a, const Stmt::Transfer& b) const
    {
        return same(a.target, b.target) && same(a.amount, b.amount);
    }
    template <typename A, typename B>
    bool operator()(const A&, const B&) const
    {
        return false;
    }
};
}  // namespace

bool operator==(const Expr& a, const Expr& b)
{
    return std::visit(ExprEq{}, a.node, b.node);
}

bool operator==(const Stmt& a, const Stmt& b)
{
    return std::visit(StmtEq{}, a.node, b.node);
}

bool same(const Expr::Ptr& a, const Expr::Ptr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

bool same(const Stmt::Ptr& a, const Stmt::Ptr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

bool operator==(const Procedure& a, const Procedure& b)
{
    return a.name == b.name && a.formals == b.formals && same(a.body, b.body);
}

const Procedure* Contract::find(std::string_view name) const noexcept
{
    for (const auto& p : procedures)
        if (p.name == name)
            return &p;
    return nullptr;
}

bool operator==(const Contract& a, const Contract& b)
{
    return a.address == b.address && a.procedures == b.procedures;
}

namespace ast
{
Expr::Ptr lit(Value v)
{
    return std::make_shared<const Expr>(Expr{Expr::Lit{std::move(v)}});
}
Expr::Ptr name(std::string n)
{
    return std::make_shared<const Expr>(Expr{Expr::Const{std::move(n)}});
}
Expr::Ptr addr(Address a)
{
    return std::make_shared<const Expr>(Expr{Expr::Addr{std::move(a)}});
}
Expr::Ptr apply(Operator op, std::vector<Expr::Ptr> args)
{
    return std::make_shared<const Expr>(Expr{Expr::Apply{op, std::move(args)}});
}
Expr::Ptr lookup(Expr::Ptr key)
{
    return std::make_shared<const Expr>(Expr{Expr::Lookup{std::move(key)}});
}
Expr::Ptr bound(Expr::Ptr key)
{
    return std::make_shared<const Expr>(Expr{Expr::Bound{std::move(key)}});
}
Expr::Ptr context(Address a, Expr::Ptr body)
{
    return std::make_shared<const Expr>(Expr{Expr::Context{std::move(a), std::move(body)}});
}

Stmt::Ptr skip()
{
    static const auto node = std::make_shared<const Stmt>(Stmt{Stmt::Skip{}});
    return node;
}
Stmt::Ptr throw_()
{
    static const auto node = std::make_shared<const Stmt>(Stmt{Stmt::Throw{}});
    return node;
}
Stmt::Ptr assign(Expr::Ptr lhs, Expr::Ptr rhs)
{
    return std::make_shared<const Stmt>(Stmt{Stmt::Assign{std::move(lhs), std::move(rhs)}});
}
Stmt::Ptr seq(Stmt::Ptr first, Stmt::Ptr second)
{
    return std::make_shared<const Stmt>(Stmt{Stmt::Seq{std::move(first), std::move(second)}});
}
Stmt::Ptr if_(Expr::Ptr cond, Stmt::Ptr then_branch, Stmt::Ptr else_branch)
{
    return std::make_shared<const Stmt>(
        Stmt{Stmt::If{std::move(cond), std::move(then_branch), std::move(else_branch)}});
}
Stmt::Ptr while_(Expr::Ptr cond, Stmt::Ptr body)
{
    return std::make_shared<const Stmt>(Stmt{Stmt::While{std::move(cond), std::move(body)}});
}
Stmt::Ptr call(Expr::Ptr target, std::string proc, std::vector<Expr::Ptr> args, Expr::Ptr amount)
{
    return std::make_shared<const Stmt>(Stmt{Stmt::Call{
        std::move(target), std::move(proc), std::move(args), std::move(amount)}});
}
Stmt::Ptr transfer(Expr::Ptr target, Expr::Ptr amount)
{
    return std::make_shared<const Stmt>(
        Stmt{Stmt::Transfer{std::move(target), std::move(amount)}});
}
}  // namespace ast

}  // namespace tinysol

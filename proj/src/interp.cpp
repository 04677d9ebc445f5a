// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <tinysol/interp.hpp>

#include <openssl/evp.h>

#include <array>
#include <memory>
#include <optional>

namespace tinysol
{
const char* cause_name(Cause c) noexcept
{
    switch (c)
    {
    case Cause::Throw:
        return "Throw";
    case Cause::UnboundConst:
        return "UnboundConst";
    case Cause::UndefinedKeyRead:
        return "UndefinedKeyRead";
    case Cause::BadLhs:
        return "BadLhs";
    case Cause::TypeMismatch:
        return "TypeMismatch";
    case Cause::UnknownProcedure:
        return "UnknownProcedure";
    case Cause::ArityMismatch:
        return "ArityMismatch";
    case Cause::NegativeAmount:
        return "NegativeAmount";
    case Cause::InsufficientFunds:
        return "InsufficientFunds";
    case Cause::BalanceAssign:
        return "BalanceAssign";
    case Cause::FuelExhausted:
        return "FuelExhausted";
    }
    return "?";
}

Env make_call_env(const Address& sender, const BigInt& amount,
    const std::vector<std::string>& formals, const std::vector<Value>& args)
{
    Env env;
    env.emplace("sender", Value{sender});
    env.emplace("value", Value{amount});
    for (std::size_t i = 0; i < formals.size() && i < args.size(); ++i)
        env.insert_or_assign(formals[i], args[i]);
    return env;
}

Value hash(const Value& v)
{
    const std::string bytes = canonical_bytes(v);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i)
    {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return Value{std::move(out)};
}

namespace
{
EvalFailure mismatch(Operator op, const std::vector<Value>& args)
{
    std::string detail = std::string{"operator '"} + operator_symbol(op) + "' on (";
    for (std::size_t i = 0; i < args.size(); ++i)
        detail += (i ? ", " : "") + std::string{tag_name(args[i].tag())};
    return {Cause::TypeMismatch, detail + ")"};
}

bool all_int(const std::vector<Value>& args)
{
    for (const auto& a : args)
        if (!a.is_int())
            return false;
    return true;
}
}  // namespace

Outcome<Value> apply_operator(Operator op, const std::vector<Value>& args)
{
    if (args.size() != operator_arity(op))
        return EvalFailure{Cause::TypeMismatch, std::string{"wrong operand count for '"} +
                                                    operator_symbol(op) + "'"};
    switch (op)
    {
    case Operator::Add:
    case Operator::Sub:
    case Operator::Mul:
    case Operator::Div:
    case Operator::Mod: {
        if (!all_int(args))
            return mismatch(op, args);
        const BigInt& x = args[0].as_int();
        const BigInt& y = args[1].as_int();
        switch (op)
        {
        case Operator::Add:
            return Value{BigInt{x + y}};
        case Operator::Sub:
            return Value{BigInt{x - y}};
        case Operator::Mul:
            return Value{BigInt{x * y}};
        default:
            break;
        }
        if (y == 0)
            return EvalFailure{Cause::TypeMismatch, "division by zero"};
        // cpp_int truncates toward zero; the remainder takes the dividend's sign.
        return op == Operator::Div ? Value{BigInt{x / y}} : Value{BigInt{x % y}};
    }
    case Operator::Neg:
        if (!args[0].is_int())
            return mismatch(op, args);
        return Value{BigInt{-args[0].as_int()}};
    case Operator::Eq:
        return Value{args[0] == args[1]};
    case Operator::Ne:
        return Value{!(args[0] == args[1])};
    case Operator::Lt:
    case Operator::Le:
    case Operator::Gt:
    case Operator::Ge: {
        const bool ints = args[0].is_int() && args[1].is_int();
        const bool strs = args[0].is_str() && args[1].is_str();
        if (!ints && !strs)
            return mismatch(op, args);
        const auto c = args[0] <=> args[1];
        switch (op)
        {
        case Operator::Lt:
            return Value{c < 0};
        case Operator::Le:
            return Value{c <= 0};
        case Operator::Gt:
            return Value{c > 0};
        default:
            return Value{c >= 0};
        }
    }
    case Operator::And:
    case Operator::Or:
        if (!args[0].is_bool() || !args[1].is_bool())
            return mismatch(op, args);
        return Value{op == Operator::And ? (args[0].as_bool() && args[1].as_bool()) :
                                           (args[0].as_bool() || args[1].as_bool())};
    case Operator::Not:
        if (!args[0].is_bool())
            return mismatch(op, args);
        return Value{!args[0].as_bool()};
    case Operator::Concat:
        if (!args[0].is_str() || !args[1].is_str())
            return mismatch(op, args);
        return Value{args[0].as_str() + args[1].as_str()};
    case Operator::Hash:
        return hash(args[0]);
    case Operator::Fst:
    case Operator::Snd:
        if (!args[0].is_pair())
            return mismatch(op, args);
        return op == Operator::Fst ? args[0].first() : args[0].second();
    case Operator::MakePair:
        return Value{args[0], args[1]};
    }
    return mismatch(op, args);
}

Outcome<Value> eval_expr(const State& s, const Env& env, const Address& at, const Expr& e)
{
    return std::visit(
        [&](const auto& n) -> Outcome<Value> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::Lit>)
                return n.value;
            else if constexpr (std::is_same_v<T, Expr::Const>)
            {
                if (auto it = env.find(n.name); it != env.end())
                    return it->second;
                return EvalFailure{Cause::UnboundConst, "unbound constant '" + n.name + "'"};
            }
            else if constexpr (std::is_same_v<T, Expr::Addr>)
                return Value{n.address};
            else if constexpr (std::is_same_v<T, Expr::Apply>)
            {
                std::vector<Value> args;
                args.reserve(n.args.size());
                for (const auto& a : n.args)
                {
                    auto v = eval_expr(s, env, at, *a);
                    if (!v)
                        return v;
                    args.push_back(std::move(v).value());
                }
                return apply_operator(n.op, args);
            }
            else if constexpr (std::is_same_v<T, Expr::Lookup>)
            {
                auto k = eval_expr(s, env, at, *n.key);
                if (!k)
                    return k;
                if (auto v = s.get(at, *k))
                    return *std::move(v);
                return EvalFailure{Cause::UndefinedKeyRead,
                    "key " + to_string(*k) + " is unbound in " + to_string(at)};
            }
            else if constexpr (std::is_same_v<T, Expr::Bound>)
            {
                auto k = eval_expr(s, env, at, *n.key);
                if (!k)
                    return k;
                return Value{s.get(at, *k).has_value()};
            }
            else
                return eval_expr(s, env, n.address, *n.body);
        },
        e.node);
}

Registry::Registry(std::vector<Contract> contracts)
{
    for (auto& c : contracts)
        add(std::move(c));
}

void Registry::add(Contract contract)
{
    if (!contract.address.is_contract())
        throw std::invalid_argument{"registry entries need contract addresses, got " +
                                    to_string(contract.address)};
    const Address a = contract.address;
    if (!contracts_.emplace(a, std::move(contract)).second)
        throw std::invalid_argument{"contract " + to_string(a) + " registered twice"};
}

const Procedure* Registry::find(const Address& a, std::string_view proc) const
{
    if (a.is_account())
        return proc == skip_procedure_name ? &account_procedure() : nullptr;
    const Contract* c = contract(a);
    return c ? c->find(proc) : nullptr;
}

const Contract* Registry::contract(const Address& a) const
{
    if (auto it = contracts_.find(a); it != contracts_.end())
        return &it->second;
    return nullptr;
}

const Procedure& Registry::account_procedure()
{
    static const Procedure fskip{skip_procedure_name, {}, ast::skip()};
    return fskip;
}

namespace
{
struct PreparedCall
{
    State state;
    const Procedure* proc;
    std::shared_ptr<const Env> env;
};

std::string format_args(const std::vector<Value>& args)
{
    std::string out = "(";
    for (std::size_t i = 0; i < args.size(); ++i)
        out += (i ? ", " : "") + to_string(args[i]);
    return out + ")";
}

// Premises of the call rule, checked in order: target is an address, the
// amount is an integer 0 <= n <= caller balance, the callee has the
// procedure, and the actuals match its formals.
Outcome<PreparedCall> prepare_call(const Registry& registry, const State& s,
    const Address& caller, const Value& target, std::string_view proc,
    const std::vector<Value>& args, const Value& amount)
{
    if (!target.is_addr())
        return EvalFailure{Cause::TypeMismatch,
            "call target is a " + std::string{tag_name(target.tag())} + ", not an address"};
    if (!amount.is_int())
        return EvalFailure{Cause::TypeMismatch,
            "call amount is a " + std::string{tag_name(amount.tag())} + ", not an integer"};
    const Address& callee = target.as_addr();
    const BigInt& n = amount.as_int();
    if (n < 0)
        return EvalFailure{Cause::NegativeAmount, "negative amount " + n.str()};
    if (n > s.balance(caller))
        return EvalFailure{Cause::InsufficientFunds, to_string(caller) + " has " +
                                                         s.balance(caller).str() + ", needs " +
                                                         n.str()};
    const Procedure* p = registry.find(callee, proc);
    if (p == nullptr)
        return EvalFailure{Cause::UnknownProcedure,
            to_string(callee) + " has no procedure '" + std::string{proc} + "'"};
    if (p->formals.size() != args.size())
        return EvalFailure{Cause::ArityMismatch,
            to_string(callee) + "." + p->name + " takes " + std::to_string(p->formals.size()) +
                " arguments, got " + std::to_string(args.size())};
    State next = credit(debit(s, caller, n), callee, n);
    return PreparedCall{std::move(next), p,
        std::make_shared<const Env>(make_call_env(caller, n, p->formals, args))};
}

struct Frame
{
    const Stmt* stmt;  ///< nullptr marks the end of a procedure activation
    std::shared_ptr<const Env> env;
    Address at;
    std::size_t depth;
    std::string proc;
};

class Machine
{
public:
    Machine(const Registry& registry, Fuel& fuel, const TraceSink* trace)
      : registry_{registry}, fuel_{fuel}, trace_{trace && *trace ? trace : nullptr}
    {}

    Outcome<State> run(State s, std::vector<Frame> stack);

    void emit(std::string rule, const Address& at, std::size_t depth, std::string detail) const
    {
        if (trace_)
            (*trace_)(TraceEvent{std::move(rule), at, depth, std::move(detail)});
    }

    Outcome<State> fail(const Frame& f, EvalFailure failure) const
    {
        emit("fail", f.at, f.depth,
            std::string{cause_name(failure.cause)} + ": " + failure.detail);
        return failure;
    }

    // Pushes the callee activation and returns the post-transfer state.
    // Failures are returned untraced.
    Outcome<State> enter(const State& s, const Frame& from, const Address& caller,
        const Value& target, std::string_view proc, const std::vector<Value>& args,
        const Value& amount, std::vector<Frame>& stack) const
    {
        auto prepared = prepare_call(registry_, s, caller, target, proc, args, amount);
        if (!prepared)
            return prepared.failure();
        const Address& callee = target.as_addr();
        const std::size_t depth = from.depth + 1;
        if (trace_)
        {
            std::string detail = to_string(caller) + " -> " + to_string(callee) + "." +
                                 std::string{proc} + format_args(args) + " : " +
                                 to_string(amount);
            if (amount.as_int() != 0 && caller != callee)
                detail += " [" + to_string(caller) + " -" + amount.as_int().str() + ", " +
                          to_string(callee) + " +" + amount.as_int().str() + "]";
            emit("call", callee, depth, std::move(detail));
        }
        stack.push_back(Frame{nullptr, nullptr, callee, depth, std::string{proc}});
        stack.push_back(Frame{prepared->proc->body.get(), prepared->env, callee, depth, {}});
        return std::move(prepared).value().state;
    }

private:
    const Registry& registry_;
    Fuel& fuel_;
    const TraceSink* trace_;
};

Outcome<State> Machine::run(State s, std::vector<Frame> stack)
{
    while (!stack.empty())
    {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.stmt == nullptr)
        {
            emit("return", f.at, f.depth, to_string(f.at) + "." + f.proc);
            continue;
        }
        if (fuel_.remaining == 0)
            return fail(f, {Cause::FuelExhausted, "out of fuel"});
        --fuel_.remaining;

        const Env& env = *f.env;
        const auto eval = [&](const Expr& e) { return eval_expr(s, env, f.at, e); };

        std::optional<EvalFailure> failure;
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Stmt::Skip>)
                    emit("skip", f.at, f.depth, {});
                else if constexpr (std::is_same_v<T, Stmt::Throw>)
                    failure = EvalFailure{Cause::Throw, "throw"};
                else if constexpr (std::is_same_v<T, Stmt::Assign>)
                {
                    auto k = eval(*n.lhs);
                    if (!k)
                        return void(failure = k.failure());
                    auto v = eval(*n.rhs);
                    if (!v)
                        return void(failure = v.failure());
                    if (*k == balance_key)
                        return void(failure = EvalFailure{
                                        Cause::BalanceAssign, "assignment to 'balance'"});
                    if (f.at.is_account())
                        return void(failure = EvalFailure{Cause::BadLhs,
                                        "account " + to_string(f.at) + " has no store"});
                    emit("assign", f.at, f.depth, to_string(*k) + " := " + to_string(*v));
                    s = s.set(f.at, *k, *v);
                }
                else if constexpr (std::is_same_v<T, Stmt::Seq>)
                {
                    emit("seq", f.at, f.depth, {});
                    stack.push_back(Frame{n.second.get(), f.env, f.at, f.depth, {}});
                    stack.push_back(Frame{n.first.get(), f.env, f.at, f.depth, {}});
                }
                else if constexpr (std::is_same_v<T, Stmt::If>)
                {
                    auto g = eval(*n.cond);
                    if (!g)
                        return void(failure = g.failure());
                    if (!g->is_bool())
                        return void(failure = EvalFailure{Cause::TypeMismatch,
                                        "guard is a " + std::string{tag_name(g->tag())}});
                    emit("if", f.at, f.depth, g->as_bool() ? "guard true" : "guard false");
                    static const Stmt::Ptr implicit_else = ast::skip();
                    const Stmt* next = g->as_bool() ? n.then_branch.get()
                                       : n.else_branch ? n.else_branch.get()
                                                       : implicit_else.get();
                    stack.push_back(Frame{next, f.env, f.at, f.depth, {}});
                }
                else if constexpr (std::is_same_v<T, Stmt::While>)
                {
                    auto g = eval(*n.cond);
                    if (!g)
                        return void(failure = g.failure());
                    if (!g->is_bool())
                        return void(failure = EvalFailure{Cause::TypeMismatch,
                                        "guard is a " + std::string{tag_name(g->tag())}});
                    emit("while", f.at, f.depth, g->as_bool() ? "guard true" : "guard false");
                    if (g->as_bool())
                    {
                        stack.push_back(f);
                        stack.push_back(Frame{n.body.get(), f.env, f.at, f.depth, {}});
                    }
                }
                else if constexpr (std::is_same_v<T, Stmt::Call> ||
                                   std::is_same_v<T, Stmt::Transfer>)
                {
                    auto target = eval(*n.target);
                    if (!target)
                        return void(failure = target.failure());
                    std::vector<Value> args;
                    std::string_view proc = skip_procedure_name;
                    if constexpr (std::is_same_v<T, Stmt::Call>)
                    {
                        proc = n.proc;
                        for (const auto& a : n.args)
                        {
                            auto v = eval(*a);
                            if (!v)
                                return void(failure = v.failure());
                            args.push_back(std::move(v).value());
                        }
                    }
                    Value amount{0};
                    if (n.amount)
                    {
                        auto v = eval(*n.amount);
                        if (!v)
                            return void(failure = v.failure());
                        amount = std::move(v).value();
                    }
                    auto next = enter(s, f, f.at, *target, proc, args, amount, stack);
                    if (!next)
                        return void(failure = next.failure());
                    s = std::move(next).value();
                }
            },
            f.stmt->node);

        if (failure)
            return fail(f, std::move(*failure));
    }
    return s;
}
}  // namespace

Outcome<State> exec_stmt(const Registry& registry, const State& s, const Env& env,
    const Address& at, const Stmt& stmt, Fuel& fuel, const TraceSink* trace)
{
    Machine m{registry, fuel, trace};
    std::vector<Frame> stack;
    stack.push_back(Frame{&stmt, std::make_shared<const Env>(env), at, 0, {}});
    return m.run(s, std::move(stack));
}

Outcome<State> call_procedure(const Registry& registry, const State& s, const Address& caller,
    const Address& callee, std::string_view proc, const std::vector<Value>& args,
    const BigInt& amount, Fuel& fuel, const TraceSink* trace)
{
    Machine m{registry, fuel, trace};
    std::vector<Frame> stack;
    const Frame origin{nullptr, nullptr, caller, 0, {}};
    auto next = m.enter(s, origin, caller, Value{callee}, proc, args, Value{amount}, stack);
    if (!next)
        return m.fail(origin, next.failure());
    return m.run(std::move(next).value(), std::move(stack));
}

}  // namespace tinysol

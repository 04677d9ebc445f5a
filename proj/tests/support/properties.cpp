// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "properties.hpp"

#include "generators.hpp"
#include "reference.hpp"

#include <tinysol/syntax.hpp>

namespace tinysol::props
{
namespace
{
constexpr std::uint64_t fuel_budget = 3000;

const gen::Shape looping{true, true, false, true, 3};
const gen::Shape loop_free{false, false, false, true, 4};

bool identical(const State& a, const State& b)
{
    return export_records(a) == export_records(b);
}

std::string show(const Stmt& s)
{
    return print_stmt(s, procedure_scope({"x"}));
}

Env random_env(gen::Gen& g)
{
    return make_call_env(g.pick(gen::Gen::accounts()), BigInt{g.range(0, 3)}, {"x"},
        {Value{g.range(-2, 8)}});
}

template <typename Check>
Result run(const char* name, int cases, std::uint64_t seed, Check check)
{
    Result r{name, 0, 0, {}};
    gen::Gen g{seed};
    for (int i = 0; i < cases; ++i)
    {
        ++r.cases;
        std::string why;
        if (!check(g, why))
        {
            if (r.failures++ == 0)
                r.counterexample = "case " + std::to_string(i) + ": " + why;
        }
    }
    return r;
}

BigInt supply(const State& s)
{
    return total_supply(s, gen::Gen::addresses());
}
}  // namespace

Result conservation_exec_stmt(int cases, std::uint64_t seed)
{
    return run("conservation under exec_stmt", cases, seed, [](gen::Gen& g, std::string& why) {
        const Registry reg = g.registry(looping);
        const State s = g.state();
        const Stmt::Ptr stmt = g.stmt(looping, {"x", "sender", "value"});
        Fuel fuel{fuel_budget};
        auto out = exec_stmt(reg, s, random_env(g), g.pick(gen::Gen::contracts()), *stmt, fuel);
        if (out && supply(*out) != supply(s))
        {
            why = show(*stmt);
            return false;
        }
        return true;
    });
}

Result conservation_apply_tx(int cases, std::uint64_t seed)
{
    return run("conservation under apply_tx", cases, seed, [](gen::Gen& g, std::string& why) {
        const Registry reg = g.registry(looping);
        const State s = g.state();
        const Transaction tx = g.transaction();
        try
        {
            auto r = apply_tx(reg, s, tx, {fuel_budget});
            if (supply(r.state) == supply(s))
                return true;
        }
        catch (const InvariantViolation& e)
        {
            why = e.what();
        }
        why += " " + to_string(tx);
        return false;
    });
}

Result conservation_apply_chain(int cases, std::uint64_t seed)
{
    return run("conservation under apply_chain", cases, seed, [](gen::Gen& g, std::string& why) {
        const Registry reg = g.registry(looping);
        const State s = g.state();
        const Blockchain b = g.chain(6);
        try
        {
            auto r = apply_chain(reg, s, b, {fuel_budget});
            if (supply(r.final_state) == supply(s))
                return true;
        }
        catch (const InvariantViolation& e)
        {
            why = e.what();
        }
        why += " chain of " + std::to_string(b.size());
        return false;
    });
}

Result tx2_atomicity(int cases, std::uint64_t seed)
{
    return run("failing transactions leave the state identical", cases, seed,
        [](gen::Gen& g, std::string& why) {
            const Registry reg = g.registry(looping);
            const State s = g.state();
            const Transaction tx = g.transaction(g.chance(0.3));
            auto r = apply_tx(reg, s, tx, {fuel_budget});
            if (r.receipt.rule == TxRule::Tx2 &&
                (!identical(r.state, s) || !r.receipt.deltas.empty() || !r.receipt.failure))
            {
                why = to_string(tx);
                return false;
            }
            if (r.receipt.rule == TxRule::Tx1 && r.receipt.failure)
            {
                why = "Tx1 receipt with a failure: " + to_string(tx);
                return false;
            }
            return true;
        });
}

Result fuel_monotonicity(int cases, std::uint64_t seed)
{
    return run("more fuel never changes a finished result", cases, seed,
        [](gen::Gen& g, std::string& why) {
            const Registry reg = g.registry(looping);
            const State s = g.state();
            const Stmt::Ptr stmt = g.stmt(looping, {"x", "sender", "value"});
            const Env env = random_env(g);
            const Address at = g.pick(gen::Gen::contracts());
            const std::uint64_t small = g.range(1, 60);
            const std::uint64_t large = small + g.range(1, 3000);
            Fuel f1{small}, f2{large};
            auto a = exec_stmt(reg, s, env, at, *stmt, f1);
            auto b = exec_stmt(reg, s, env, at, *stmt, f2);
            const bool a_done = a || a.cause() != Cause::FuelExhausted;
            const bool b_done = b || b.cause() != Cause::FuelExhausted;
            bool ok = true;
            if (a_done)
            {
                // Finished within the small budget: same outcome, same consumption.
                ok = b_done && a.ok() == b.ok() && (small - f1.remaining) == (large - f2.remaining);
                if (ok && a)
                    ok = identical(*a, *b);
                if (ok && !a)
                    ok = a.failure() == b.failure();
            }
            else
                ok = (large - f2.remaining) >= small;
            if (!ok)
                why = show(*stmt) + " with fuel " + std::to_string(small) + " vs " +
                      std::to_string(large);
            return ok;
        });
}

Result expression_purity(int cases, std::uint64_t seed)
{
    return run("expressions neither change nor depend on unrelated state", cases, seed,
        [](gen::Gen& g, std::string& why) {
            const State s = g.state();
            const State before = s;
            const Env env = random_env(g);
            const Expr::Ptr e = g.expr(3, {"x", "sender", "value"});
            const Address at = g.pick(gen::Gen::addresses());
            auto v1 = eval_expr(s, env, at, *e);
            auto v2 = eval_expr(s, env, at, *e);
            // Keys no generated expression can name.
            const State noisy = s.set(Address::contract("Unused"), Value{"noise"}, Value{1});
            auto v3 = eval_expr(noisy, env, at, *e);
            auto same = [](const Outcome<Value>& x, const Outcome<Value>& y) {
                return x.ok() == y.ok() && (x ? *x == *y : x.failure() == y.failure());
            };
            if (!identical(s, before) || !same(v1, v2) || !same(v1, v3))
            {
                why = print_expr(*e);
                return false;
            }
            return true;
        });
}

Result desugaring_soundness(int cases, std::uint64_t seed)
{
    return run("sugared and desugared statements agree", cases, seed,
        [](gen::Gen& g, std::string& why) {
            gen::Shape sugar = looping;
            sugar.sugar = true;
            const Registry reg = g.registry(looping);
            const State s = g.state();
            const Stmt::Ptr stmt = g.stmt(sugar, {"x", "sender", "value"});
            const Stmt::Ptr plain = desugar(stmt);
            const Env env = random_env(g);
            const Address at = g.pick(gen::Gen::contracts());
            Fuel f1{fuel_budget}, f2{fuel_budget};
            auto a = exec_stmt(reg, s, env, at, *stmt, f1);
            auto b = exec_stmt(reg, s, env, at, *plain, f2);
            bool ok = is_desugared(*plain) && a.ok() == b.ok() && f1.remaining == f2.remaining;
            if (ok)
                ok = a ? identical(*a, *b) : a.cause() == b.cause();
            if (!ok)
                why = show(*stmt);
            return ok;
        });
}

Result determinism(int cases, std::uint64_t seed)
{
    return run("runs are deterministic, traces included", cases, seed,
        [](gen::Gen& g, std::string& why) {
            const Registry reg = g.registry(looping);
            const State s = g.state();
            const Blockchain b = g.chain(4);
            std::vector<std::string> t1, t2;
            const TraceSink k1 = [&](const TraceEvent& e) {
                t1.push_back(e.rule + to_string(e.at) + std::to_string(e.depth) + e.detail);
            };
            const TraceSink k2 = [&](const TraceEvent& e) {
                t2.push_back(e.rule + to_string(e.at) + std::to_string(e.depth) + e.detail);
            };
            auto r1 = apply_chain(reg, s, b, {fuel_budget, &k1});
            auto r2 = apply_chain(reg, s, b, {fuel_budget, &k2});
            if (!identical(r1.final_state, r2.final_state) || r1.receipts != r2.receipts ||
                t1 != t2)
            {
                why = "chain of " + std::to_string(b.size());
                return false;
            }
            return true;
        });
}

Result account_domain_preservation(int cases, std::uint64_t seed)
{
    return run("accounts keep only a non-negative balance", cases, seed,
        [](gen::Gen& g, std::string& why) {
            const Registry reg = g.registry(looping);
            const State s = g.state();
            const Stmt::Ptr stmt = g.stmt(looping, {"x", "sender", "value"});
            // Run at an account too: assignments there must fail.
            const Address at = g.pick(gen::Gen::addresses());
            Fuel fuel{fuel_budget};
            auto out = exec_stmt(reg, s, random_env(g), at, *stmt, fuel);
            if (out && !well_formed(*out))
            {
                why = show(*stmt) + " at " + to_string(at);
                return false;
            }
            auto r = apply_chain(reg, s, g.chain(4), {fuel_budget});
            if (!well_formed(r.final_state))
            {
                why = "chain";
                return false;
            }
            return true;
        });
}

Result oracle_equivalence(int cases, std::uint64_t seed)
{
    return run("exec_stmt agrees with the reference evaluator", cases, seed,
        [](gen::Gen& g, std::string& why) {
            const State s = g.state();
            const Stmt::Ptr stmt = g.stmt(loop_free, {"x", "sender", "value"});
            const Env env = random_env(g);
            const Address at = g.chance(0.9) ? g.pick(gen::Gen::contracts())
                                             : g.pick(gen::Gen::accounts());
            Fuel fuel{fuel_budget};
            auto mine = exec_stmt(Registry{}, s, env, at, *stmt, fuel);
            auto theirs = ref::exec(ref::from_state(s), env, at, *stmt);
            const bool ok = mine.ok() == theirs.has_value() && (!mine || ref::same(*theirs, *mine));
            if (!ok)
                why = show(*stmt) + " at " + to_string(at);
            return ok;
        });
}

Result update_oracle(int cases, std::uint64_t seed)
{
    return run("apply_update agrees with a naive substitution", cases, seed,
        [](gen::Gen& g, std::string& why) {
            const State s = g.state();
            StateUpdate pi;
            for (int i = g.range(0, 5); i > 0; --i)
                pi[QualifiedKey{g.pick(gen::Gen::contracts()), g.key()}] = g.value(1);
            const State out = apply_update(s, pi);
            if (!ref::same(ref::update(ref::from_state(s), pi), out))
            {
                why = "update of " + std::to_string(pi.size()) + " keys";
                return false;
            }
            // Frame condition: untouched addresses keep their store.
            for (const auto& a : gen::Gen::addresses())
            {
                bool touched = false;
                for (const auto& [qk, v] : pi)
                    touched = touched || qk.address == a;
                if (!touched && out.store(a) != s.store(a))
                {
                    why = "frame broken at " + to_string(a);
                    return false;
                }
            }
            return true;
        });
}

Result fold_associativity(int cases, std::uint64_t seed)
{
    return run("chains fold left and split anywhere", cases, seed,
        [](gen::Gen& g, std::string& why) {
            const Registry reg = g.registry(looping);
            const State s = g.state();
            const Blockchain b = g.chain(6);
            const std::size_t cut = b.size() ? g.range(0, int(b.size())) : 0;
            const std::span<const Transaction> all{b};
            const auto whole = apply_chain(reg, s, all, {fuel_budget}).final_state;
            const auto left = apply_chain(reg, s, all.first(cut), {fuel_budget}).final_state;
            const auto split =
                apply_chain(reg, left, all.subspan(cut), {fuel_budget}).final_state;
            bool ok = identical(whole, split);
            if (ok && !b.empty())
            {
                const auto head = apply_tx(reg, s, b.front(), {fuel_budget}).state;
                ok = identical(whole, apply_chain(reg, head, all.subspan(1), {fuel_budget})
                                          .final_state);
            }
            ok = ok && identical(apply_chain(reg, s, {}, {fuel_budget}).final_state, s);
            if (!ok)
                why = "chain of " + std::to_string(b.size()) + " cut at " + std::to_string(cut);
            return ok;
        });
}

Result failed_tx_identity(int cases, std::uint64_t seed)
{
    return run("inserting a failing transaction changes nothing", cases, seed,
        [](gen::Gen& g, std::string& why) {
            const Registry reg = g.registry(looping);
            const State s = g.state();
            Blockchain b = g.chain(5);
            const auto before = apply_chain(reg, s, b, {fuel_budget}).final_state;
            // Overdraws any generated balance, so [Tx2] wherever it lands.
            Blockchain with = b;
            with.insert(with.begin() + (b.empty() ? 0 : g.range(0, int(b.size()))),
                g.transaction(true));
            const auto after = apply_chain(reg, s, with, {fuel_budget});
            if (!identical(before, after.final_state))
            {
                why = "chain of " + std::to_string(b.size());
                return false;
            }
            return true;
        });
}

Result print_parse_roundtrip(int cases, std::uint64_t seed)
{
    return run("printing then parsing gives the same statement", cases, seed,
        [](gen::Gen& g, std::string& why) {
            gen::Shape shape = looping;
            shape.sugar = g.chance(0.5);
            shape.balance_lhs = false;
            const Stmt::Ptr stmt = g.stmt(shape, {"x", "sender", "value"});
            const NameSet scope = procedure_scope({"x"});
            const std::string text = print_stmt(*stmt, scope);
            try
            {
                const Stmt::Ptr back = parse_stmt(text, scope, {false});
                if (same(stmt, back))
                    return true;
                why = "reparsed differently: " + text;
            }
            catch (const ParseError& e)
            {
                why = e.diagnostic() + " in: " + text;
            }
            return false;
        });
}

const std::vector<Named>& gate_properties()
{
    static const std::vector<Named> all{
        {"conservation under exec_stmt", conservation_exec_stmt},
        {"conservation under apply_tx", conservation_apply_tx},
        {"conservation under apply_chain", conservation_apply_chain},
        {"failing transactions are identities", tx2_atomicity},
        {"fuel monotonicity", fuel_monotonicity},
        {"expression purity", expression_purity},
        {"desugaring soundness", desugaring_soundness},
        {"determinism", determinism},
        {"account-domain preservation", account_domain_preservation},
        {"reference evaluator equivalence", oracle_equivalence},
    };
    return all;
}

}  // namespace tinysol::props

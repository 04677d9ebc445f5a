// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <tinysol/chain.hpp>
#include <tinysol/interp.hpp>

#include <random>
#include <vector>

namespace tinysol::gen
{
struct Shape
{
    bool loops = false;
    bool calls = false;
    bool sugar = false;  ///< emit if-without-else, call-without-amount, transfers
    bool balance_lhs = true;
    int depth = 3;
};

class Gen
{
public:
    explicit Gen(std::uint64_t seed) : rng_{seed} {}

    int range(int lo, int hi) { return std::uniform_int_distribution<int>{lo, hi}(rng_); }
    bool chance(double p) { return std::bernoulli_distribution{p}(rng_); }
    template <typename T>
    const T& pick(const std::vector<T>& xs) { return xs[range(0, int(xs.size()) - 1)]; }

    static const std::vector<Address>& accounts();
    static const std::vector<Address>& contracts();
    static std::vector<Address> addresses();

    Value value(int depth = 2);
    Value key();
    /// Literal as the parser would build it: addresses and pairs are not Lit nodes.
    static Expr::Ptr value_expr(const Value& v);
    Expr::Ptr key_expr(const std::vector<std::string>& consts);
    Expr::Ptr expr(int depth, const std::vector<std::string>& consts);
    Expr::Ptr int_expr(int depth, const std::vector<std::string>& consts);
    Expr::Ptr bool_expr(int depth, const std::vector<std::string>& consts);
    Stmt::Ptr stmt(const Shape& shape, const std::vector<std::string>& consts);

    /// Every pool address materialized with a small balance and a few keys.
    State state();

    /// Contracts over the pool with procedures f(x), g() and fskip().
    Registry registry(const Shape& body_shape);

    Transaction transaction(bool failing_hint = false);
    Blockchain chain(int max_len);

private:
    std::mt19937_64 rng_;
};

}  // namespace tinysol::gen

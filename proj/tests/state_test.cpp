// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <tinysol/state.hpp>

#include <gtest/gtest.h>

using namespace tinysol;

namespace
{
const Address A = Address::contract("A");
const Address B = Address::contract("B");
const Address P = Address::account("P");

State example_state()
{
    State s;
    s = s.with_store(A, Store{{Value{"k0"}, Value{0}}, {Value{"k1"}, Value{1}}});
    s = s.with_store(B, Store{{balance_key, Value{4}}, {Value{"k0"}, Value{9}}});
    return s;
}
}  // namespace

TEST(state, update_overrides_one_key)
{
    const State s = example_state();
    const State out = apply_update(s, {{QualifiedKey{A, Value{"k0"}}, Value{2}}});
    EXPECT_EQ(out.store(A),
        (Store{{balance_key, Value{0}}, {Value{"k0"}, Value{2}}, {Value{"k1"}, Value{1}}}));
    EXPECT_EQ(out.store(B), s.store(B));
}

TEST(state, update_adds_a_new_key)
{
    const State s = example_state();
    const State out = apply_update(s, {{QualifiedKey{A, Value{"k2"}}, Value{3}}});
    EXPECT_EQ(out.store(A), (Store{{balance_key, Value{0}}, {Value{"k0"}, Value{0}},
                                {Value{"k1"}, Value{1}}, {Value{"k2"}, Value{3}}}));
    EXPECT_EQ(out.store(B), s.store(B));
}

TEST(state, states_are_persistent)
{
    const State s = example_state();
    const State t = s.set(A, Value{"k0"}, Value{7});
    EXPECT_EQ(s.get(A, Value{"k0"}), Value{0});
    EXPECT_EQ(t.get(A, Value{"k0"}), Value{7});
    EXPECT_EQ(&s.store(B), &t.store(B));
}

TEST(state, absent_addresses_read_as_empty_stores)
{
    const State s;
    EXPECT_EQ(s.balance(P), 0);
    EXPECT_EQ(s.get(P, balance_key), Value{0});
    EXPECT_EQ(s.get(P, Value{"k"}), std::nullopt);
    EXPECT_FALSE(s.contains(P));
    EXPECT_EQ(s, s.set(P, balance_key, Value{0}));
    EXPECT_NE(s, s.set(P, balance_key, Value{1}));
}

TEST(state, credit_and_debit)
{
    State s = credit(State{}, P, 5);
    EXPECT_EQ(s.balance(P), 5);
    s = debit(s, P, 3);
    EXPECT_EQ(s.balance(P), 2);
    EXPECT_THROW(debit(s, P, 3), InsufficientFunds);
    EXPECT_EQ(total_supply(credit(s, A, 4)), 6);
}

TEST(state, well_formedness)
{
    EXPECT_TRUE(well_formed(example_state()));
    EXPECT_FALSE(well_formed(State{}.set(P, Value{"k"}, Value{1})));
    EXPECT_FALSE(well_formed(State{}.set(A, balance_key, Value{-1})));
    EXPECT_FALSE(well_formed(State{}.set(A, balance_key, Value{"x"})));
}

TEST(state, dump_is_canonical)
{
    State s = example_state().set(P, balance_key, Value{3});
    s = s.set(A, Value{Value{1}, Value{2}}, Value{true});
    s = s.set(A, Value{Address::account("Q")}, Value{"v"});
    EXPECT_EQ(dump(s),
        "@P.balance = 3\n"
        "#A.balance = 0\n"
        "#A.k0 = 0\n"
        "#A.k1 = 1\n"
        "#A[@Q] = \"v\"\n"
        "#A[(1, 2)] = true\n"
        "#B.balance = 4\n"
        "#B.k0 = 9\n");
}

// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <tinysol/interp.hpp>
#include <tinysol/value.hpp>

#include <gtest/gtest.h>

#include "reference.hpp"

using namespace tinysol;

TEST(value, renders_in_source_syntax)
{
    EXPECT_EQ(to_string(Value{42}), "42");
    EXPECT_EQ(to_string(Value{-3}), "-3");
    EXPECT_EQ(to_string(Value{true}), "true");
    EXPECT_EQ(to_string(Value{"a\"b"}), "\"a\\\"b\"");
    EXPECT_EQ(to_string(Value{Address::account("A")}), "@A");
    EXPECT_EQ(to_string(Value{Address::contract("C")}), "#C");
    EXPECT_EQ(to_string(Value{Value{1}, Value{Address::account("A")}}), "(1, @A)");
}

TEST(value, equality_is_total_across_variants)
{
    EXPECT_EQ(Value{1}, Value{1});
    EXPECT_NE(Value{1}, Value{true});
    EXPECT_NE(Value{"1"}, Value{1});
    EXPECT_NE(Value{Address::account("A")}, Value{Address::contract("A")});
    EXPECT_EQ((Value{Value{1}, Value{"x"}}), (Value{Value{1}, Value{"x"}}));
    EXPECT_NE((Value{Value{1}, Value{"x"}}), (Value{Value{"x"}, Value{1}}));
}

TEST(value, ordering_is_by_tag_then_content)
{
    EXPECT_LT(Value{100}, Value{false});
    EXPECT_LT(Value{false}, Value{"a"});
    EXPECT_LT(Value{"z"}, Value{Address::account("A")});
    EXPECT_LT(Value{Address::account("Z")}, Value{Address::contract("A")});
    EXPECT_LT(Value{-1}, Value{0});
    EXPECT_LT(Value{"ab"}, Value{"b"});
}

TEST(value, big_integers_do_not_overflow)
{
    BigInt big{"123456789012345678901234567890"};
    auto r = apply_operator(Operator::Mul, {Value{big}, Value{big}});
    ASSERT_TRUE(r);
    EXPECT_EQ(r->as_int(), big * big);
}

TEST(value, canonical_bytes_are_tagged_and_length_prefixed)
{
    EXPECT_EQ(canonical_bytes(Value{7}), "I1:7");
    EXPECT_EQ(canonical_bytes(Value{-3}), "I2:-3");
    EXPECT_EQ(canonical_bytes(Value{true}), "B1");
    EXPECT_EQ(canonical_bytes(Value{"hello"}), "S5:hello");
    EXPECT_EQ(canonical_bytes(Value{Address::contract("C")}), "Ac1:C");
    EXPECT_EQ(canonical_bytes(Value{Value{1}, Value{Address::account("A")}}), "PI1:1Aa1:A");
    // No collisions between a string and the integer it spells.
    EXPECT_NE(canonical_bytes(Value{"7"}), canonical_bytes(Value{7}));
}

// Digests computed with Python's hashlib over the byte strings above.
TEST(value, hash_matches_frozen_sha256)
{
    const std::pair<Value, const char*> cases[] = {
        {Value{7}, "b23cccc0c33cb82ce1e428149cbb5421d0eb2b81d0ed458530c45d93b01f6c0d"},
        {Value{4}, "f403304b2c6ec1ec95808652cd437f872f4fbe50d83316969c190f4522586fd8"},
        {Value{"hello"}, "c951f2abd096f335328e569c74847f56842a0f6391c258bd417312141bfdfe0c"},
        {Value{true}, "5b950e77941d01cdf246d00b1ece546bc95234b77d98b44c9187e2733afa696a"},
        {Value{Address::contract("C")},
            "5549ce978194aab3afe70d4b7557e75247ccaf791be4da1781a8df9b523df6bb"},
        {Value{Value{1}, Value{Address::account("A")}},
            "68abdb9ec2d034d7302b57f4ba7207ada5859bc3a6381ca5457d594ce8bce5c8"},
        {Value{-3}, "38d4574c47a5fb366b13aaeaab60a1fa071c878b1080c18ae22b6b9d90b59db1"},
        {Value{""}, "ddb96cc8b84783be42425ddae4eeab1e528dd7cd18fd7ccc9eba246f76ecbf84"},
    };
    for (const auto& [v, digest] : cases)
    {
        EXPECT_EQ(hash(v), Value{digest}) << to_string(v);
        EXPECT_EQ(ref::sha256_hex_of(v), digest) << to_string(v);
    }
}

// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hyperswitch/params.hpp"

using namespace hsw;

TEST_SUITE("params") {

TEST_CASE("derived fields at n=6 d=2 k=3") {
    Params p = derive_params(6, 2, 3);
    CHECK(p.n == 6);
    CHECK(p.d == 2);
    CHECK(p.k == 3);
    CHECK(p.M == 4);
    CHECK(p.r == 9);
    CHECK(p.c == Rational(1, 19));
    CHECK(p.m == 0);
    CHECK(p.red_edges == 0);
    CHECK(p.red_prefix_len == 0);
    CHECK(p.seq_len() == 12);
    CHECK(p.green_edges() == 4);
    CHECK(p.green_len() == 12);
    CHECK(p.loop_limit_fourth() == BigInt(24));
}

TEST_CASE("derived fields at n=102 d=4 k=3") {
    Params p = derive_params(102, 4, 3);
    CHECK(p.M == 136);
    CHECK(p.m == 7);
    CHECK(p.red_edges == 63);
    CHECK(p.red_prefix_len == 189);
    CHECK(p.green_len() == 219);
}

TEST_CASE("derived fields at n=152 d=6 k=3") {
    Params p = derive_params(152, 6, 3);
    CHECK(p.M == 304);
    CHECK(p.m == 16);
    CHECK(p.red_edges == 144);
    CHECK(p.red_prefix_len == 432);
}

TEST_CASE("derived fields at n=19 d=3 k=3") {
    Params p = derive_params(19, 3, 3);
    CHECK(p.M == 19);
    CHECK(p.m == 1);
    CHECK(p.red_edges == 9);
    CHECK(p.red_prefix_len == 27);
}

TEST_CASE("k=4 uses r=17") {
    Params p = derive_params(102, 100, 4);
    CHECK(p.r == 17);
    CHECK(p.c == Rational(1, 35));
    CHECK(p.M == 2550);
    CHECK(p.m == 72);
    CHECK(p.red_edges == 1224);
}

TEST_CASE("loop budget comparisons are exact") {
    Params p = derive_params(6, 2, 3);
    // Budget fourth power is 24: 2^4 = 16 passes, 3^4 = 81 does not.
    CHECK(p.loops_within_limit(0));
    CHECK(p.loops_within_limit(2));
    CHECK_FALSE(p.loops_within_limit(3));
}

TEST_CASE("invalid instances are rejected") {
    CHECK_THROWS_AS(derive_params(6, 2, 2), EdgeSizeError);
    CHECK_THROWS_AS(derive_params(2, 3, 3), VertexCountError);
    CHECK_THROWS_AS(derive_params(6, 0, 3), DegreeError);
    CHECK_THROWS_AS(derive_params(100, 4, 3), DivisibilityError);
}

TEST_CASE("override_red_prefix plants a synthetic prefix") {
    Params p = derive_params(4, 3, 3);
    CHECK(p.red_edges == 0);
    Params q = override_red_prefix(p, 1);
    CHECK(q.red_edges == 1);
    CHECK(q.red_prefix_len == 3);
    CHECK(q.M == p.M);
    CHECK(q.m == p.m);
    CHECK(q.green_edges() == 3);
    CHECK(q.green_len() == 9);
    CHECK_THROWS_AS(override_red_prefix(p, -1), std::invalid_argument);
    CHECK_THROWS_AS(override_red_prefix(p, 4), std::invalid_argument);
}

}  // TEST_SUITE

// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hyperswitch/numeric.hpp"

using namespace hsw;

TEST_SUITE("numeric") {

TEST_CASE("loop limit comparisons on both sides of the threshold") {
    // n=6, d=2: the fourth power of the budget is 24.
    CHECK(leq_loop_limit(0, 6, 2));
    CHECK(leq_loop_limit(2, 6, 2));   // 16 <= 24
    CHECK_FALSE(leq_loop_limit(3, 6, 2));  // 81 > 24
    CHECK_FALSE(geq_loop_limit(2, 6, 2));
    CHECK(geq_loop_limit(3, 6, 2));
    CHECK(leq_loop_limit(-5, 6, 2));
    CHECK_FALSE(geq_loop_limit(-5, 6, 2));
}

TEST_CASE("loop limit is tight at an exact fourth power") {
    // n=16, d=4: budget fourth power is 16*16 = 256 = 4^4.
    CHECK(leq_loop_limit(4, 16, 4));
    CHECK(geq_loop_limit(4, 16, 4));
    CHECK_FALSE(leq_loop_limit(5, 16, 4));
    CHECK_FALSE(geq_loop_limit(3, 16, 4));
}

TEST_CASE("loop limit survives large inputs without overflow") {
    // n=4000, d=4000: nd^2 = 6.4e10; a = nd/k style values fit in 128 bits.
    CHECK(leq_loop_limit(500, 4000, 4000));      // 6.25e10 <= 6.4e10
    CHECK_FALSE(leq_loop_limit(503, 4000, 4000));  // ~6.40e10 + epsilon
}

TEST_CASE("phi band comparison is exact in rationals") {
    // n=6, d=2: |x| <= n^{3/4} d iff x^4 <= n^3 d^4 = 3456.
    CHECK(within_phi_band(Rational(7), 6, 2));       // 2401 <= 3456
    CHECK_FALSE(within_phi_band(Rational(8), 6, 2)); // 4096 > 3456
    CHECK(within_phi_band(Rational(-7), 6, 2));
    CHECK(within_phi_band(Rational(15, 2), 6, 2));   // 50625/16 ~ 3164
    CHECK_FALSE(within_phi_band(Rational(31, 4), 6, 2));  // ~3607.5
    CHECK(within_phi_band(Rational(0), 6, 2));
}

TEST_CASE("pow4") {
    CHECK(pow4(BigInt(3)) == BigInt(81));
    CHECK(pow4(BigInt(-3)) == BigInt(81));
    CHECK(pow4(BigInt(0)) == BigInt(0));
}

}  // TEST_SUITE

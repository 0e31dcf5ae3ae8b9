// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hyperswitch/numeric.hpp"

namespace hsw {

struct EdgeSizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct VertexCountError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegreeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivisibilityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Instance parameters for the d-regular k-uniform models on n vertices.
//
// A sequence has n*d entries cut into M = nd/k consecutive edges. The first
// red_edges = r*m edges (red_prefix_len = k*r*m entries) form the red prefix
// used to host an embedded uniform m-edge graph; the rest is green. The loop
// budget L = n^{1/4} d^{1/2} is irrational and is only ever compared through
// its fourth power n*d^2.
struct Params {
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::int64_t M = 0;                // nd/k
    std::int64_t r = 0;                // 2^k + 1
    Rational c;                        // 1/(2r+1), exact
    std::int64_t m = 0;                // floor(c*M)
    std::int64_t red_edges = 0;        // r*m
    std::int64_t red_prefix_len = 0;   // k*r*m

    std::int64_t seq_len() const { return n * d; }
    std::int64_t green_edges() const { return M - red_edges; }
    std::int64_t green_len() const { return seq_len() - red_prefix_len; }
    BigInt loop_limit_fourth() const { return BigInt(n) * d * d; }

    bool loops_within_limit(std::int64_t lambda) const { return leq_loop_limit(lambda, n, d); }
};

// Validates n >= k >= 3, d >= 1, k | nd and derives all dependent fields.
Params derive_params(std::int64_t n, std::int64_t d, std::int64_t k);

// Copy of p with the red prefix forced to the first red_edges edges. At
// enumerable sizes the derived m is zero and the red prefix empty; the swap
// and conditioning machinery is exercised there by planting a small
// artificial prefix. Leaves r, c and m untouched (they describe the derived
// instance, not the override).
Params override_red_prefix(const Params& p, std::int64_t red_edges);

}  // namespace hsw

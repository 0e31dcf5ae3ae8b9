// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hyperswitch/params.hpp"

#include <cassert>

namespace hsw {

Params derive_params(std::int64_t n, std::int64_t d, std::int64_t k) {
    if (k < 3) {
        throw EdgeSizeError("edge size k must be at least 3, got " + std::to_string(k));
    }
    if (k > 40) {
        // 2^k+1 and the red fraction would be astronomically small anyway.
        throw EdgeSizeError("edge size k too large (max 40), got " + std::to_string(k));
    }
    if (n < k) {
        throw VertexCountError("need n >= k, got n=" + std::to_string(n) +
                               " k=" + std::to_string(k));
    }
    if (d < 1) {
        throw DegreeError("degree d must be at least 1, got " + std::to_string(d));
    }
    if (n > (std::int64_t{1} << 40) || d > (std::int64_t{1} << 40)) {
        throw std::overflow_error("n or d out of supported range");
    }
    if ((n * d) % k != 0) {
        throw DivisibilityError("k must divide n*d: n=" + std::to_string(n) +
                                " d=" + std::to_string(d) + " k=" + std::to_string(k));
    }

    Params p;
    p.k = k;
    p.n = n;
    p.d = d;
    p.M = n * d / k;
    p.r = (std::int64_t{1} << k) + 1;
    p.c = Rational(1, 2 * p.r + 1);
    p.m = p.M / (2 * p.r + 1);  // floor(c*M), exact: c = 1/(2r+1)
    p.red_edges = p.r * p.m;
    p.red_prefix_len = k * p.red_edges;

    // r*m <= rM/(2r+1) < M/2, so the red prefix never reaches half the sequence.
    assert(2 * p.red_edges < p.M);
    assert(p.red_prefix_len < p.seq_len());

    return p;
}

Params override_red_prefix(const Params& p, std::int64_t red_edges) {
    if (red_edges < 0 || red_edges >= p.M) {
        throw std::invalid_argument("red prefix override must leave at least one green edge");
    }
    Params out = p;
    out.red_edges = red_edges;
    out.red_prefix_len = p.k * red_edges;
    return out;
}

}  // namespace hsw

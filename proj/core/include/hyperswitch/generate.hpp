// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "hyperswitch/params.hpp"
#include "hyperswitch/rng.hpp"
#include "hyperswitch/sequence.hpp"

namespace hsw {

// Per-vertex residual weights d - deg(v) in a Fenwick tree, supporting
// O(log n) weighted draws and O(log n) decrements. Weights are integers,
// so draws are exact.
class ResidualSampler {
  public:
    ResidualSampler(std::int64_t n, std::int64_t d);

    std::int64_t total() const { return total_; }
    std::int64_t weight(std::uint32_t v) const;

    // Vertex v with probability weight(v)/total(). Does not consume.
    std::uint32_t pick(Rng& rng) const;
    // Find the vertex owning offset u in the prefix-sum order, 0 <= u < total.
    std::uint32_t locate(std::int64_t u) const;

    void decrement(std::uint32_t v);

  private:
    std::int64_t n_;
    std::int64_t total_;
    std::vector<std::int64_t> tree_;  // 1-based Fenwick array
};

struct GenState {
    std::int64_t t = 0;                  // entries revealed so far
    std::vector<std::int64_t> deg;       // degree counts so far
    std::int64_t max_deg = 0;
};

// n*d i.i.d. uniform entries; not degree-constrained.
Sequence sample_iid(const Params& p, Rng& rng);

// Uniform element of the degree-constrained sequence space via an exact
// Fisher-Yates shuffle of the multiset with d copies of each vertex.
Sequence sample_regular(const Params& p, Rng& rng);

// Uniform element drawn entry by entry with the conditional distribution
// P(v) = (d - deg(v)) / (nd - t). Distributionally identical to
// sample_regular; kept separate so the equivalence is testable.
Sequence sample_regular_sequential(const Params& p, Rng& rng);

// The conditional next-entry distribution as exact rationals over [0, n).
// Entries sum to 1 whenever t < nd.
std::vector<Rational> step_distribution(const GenState& st, const Params& p);

}  // namespace hsw

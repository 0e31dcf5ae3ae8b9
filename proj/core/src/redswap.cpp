// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hyperswitch/redswap.hpp"

#include <algorithm>
#include <cassert>

namespace hsw {

std::pair<Sequence, SwapRecord> swap_red_loops(const Sequence& seq, const EdgeClassification& cls,
                                               Rng& rng) {
    const std::int64_t t = static_cast<std::int64_t>(cls.red_loop_indices.size());
    const std::int64_t g = static_cast<std::int64_t>(cls.green_proper_indices.size());
    if (t > g) {
        throw InsufficientGreenProper("cannot place " + std::to_string(t) + " red loops into " +
                                      std::to_string(g) + " green proper edges");
    }

    Sequence out = seq;
    SwapRecord rec;
    if (t == 0) return {out, rec};

    // Uniform t-subset of the green proper edges via a partial shuffle,
    // then ascending pairing with the red loops.
    std::vector<std::int64_t> pool = cls.green_proper_indices;
    for (std::int64_t i = 0; i < t; ++i) {
        std::uint64_t j = i + rng.below(static_cast<std::uint64_t>(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(t);
    std::sort(pool.begin(), pool.end());

    const std::int64_t k = seq.params.k;
    for (std::int64_t i = 0; i < t; ++i) {
        const std::int64_t a = cls.red_loop_indices[i];
        const std::int64_t b = pool[i];
        assert(a < seq.params.red_edges && b >= seq.params.red_edges);
        std::swap_ranges(out.entries.begin() + a * k, out.entries.begin() + (a + 1) * k,
                         out.entries.begin() + b * k);
        rec.pairs.push_back({a, b});
    }
    return {out, rec};
}

}  // namespace hsw

// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperswitch/rng.hpp"
#include "hyperswitch/sequence.hpp"

namespace hsw {

struct InsufficientGreenProper : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SwapPair {
    std::int64_t red_loop_index = 0;
    std::int64_t green_target_index = 0;
};

struct SwapRecord {
    std::vector<SwapPair> pairs;
};

// Exchanges every red loop edge with a green proper edge, blockwise and
// verbatim, leaving the edge multiset of the sequence unchanged. The green
// targets are a uniformly random subset of the green proper edges, paired
// with the red loops in ascending order on both sides. The caller is
// expected to pass a sequence with no duplicate edges and only simple
// loops; cls must be classify_edges(seq).
//
// Throws InsufficientGreenProper when the green proper edges cannot host
// every red loop (never at validated desk-scale parameters).
std::pair<Sequence, SwapRecord> swap_red_loops(const Sequence& seq, const EdgeClassification& cls,
                                               Rng& rng);

}  // namespace hsw

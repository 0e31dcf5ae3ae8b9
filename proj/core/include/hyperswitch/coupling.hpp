// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Joint generation of an i.i.d. sequence X and a degree-constrained
// sequence Y on one random stream, arranged so that during the red prefix
// Y copies X whenever a fair selector bit comes up 1 and a degree margin
// condition holds. Red X-edges whose selectors are all 1 then reappear
// verbatim in Y, which is what embeds a uniform m-edge graph.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperswitch/generate.hpp"
#include "hyperswitch/graph.hpp"
#include "hyperswitch/params.hpp"
#include "hyperswitch/rng.hpp"
#include "hyperswitch/sequence.hpp"

namespace hsw {

// The margin condition at state st: 2(d - deg(v))/(nd - t) - 1/n >= 0 for
// every v, equivalently 2n(d - max_deg) >= nd - t. O(1) given max_deg.
bool mix_condition_holds(const GenState& st, const Params& p);

// The auxiliary distribution 2(d - deg(v))/(nd - t) - 1/n as exact
// rationals. Throws std::domain_error when the margin condition fails
// (some weight would be negative).
std::vector<Rational> aux_distribution(const GenState& st, const Params& p);

struct CoupledRun {
    Sequence x;                        // i.i.d. entries
    Sequence y;                        // degree-constrained entries
    std::vector<std::uint8_t> selectors;
    std::vector<std::int64_t> w_indices;  // red edges whose k selectors are all 1
    bool event_a = false;
    bool event_b = false;
    // Last step index t < red_prefix_len such that the margin condition held
    // at every step up to and including t; -1 if it failed at step 0 or the
    // red prefix is empty.
    std::int64_t condition_held_through = -1;
};

// Draw order per step t: X entry, selector bit, then the Y entry if one
// must be sampled (skipped when Y copies X). Past the red prefix Y is
// drawn directly from the conditional distribution (d - deg)/(nd - t).
//
// event_a: X has no duplicate edges, loop count within budget, and at
//          least m + L fully-selected red edges.
// event_b: margin condition held at every step of the red prefix.
CoupledRun coupled_generate(const Params& p, Rng& rng);

// The embedded uniform m-edge graph. Under event_a: the first m proper
// fully-selected red X-edges. Otherwise: an independent uniform m-subset
// of all k-subsets of [n], sampled without rejection.
SimpleGraph extract_hnm(const CoupledRun& run, Rng& rng);

struct EmbedCheck {
    bool embedded = false;
    std::optional<std::vector<std::uint32_t>> missing_edge;  // sorted, 0-based
};

// Does every edge of g occur, as a set, among the red edges of seq?
EmbedCheck check_embedding(const SimpleGraph& g, const Sequence& seq);

}  // namespace hsw

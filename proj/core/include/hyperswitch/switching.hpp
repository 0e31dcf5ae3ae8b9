// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Loop-removing switchings.
//
// A forward switching takes a green loop edge f (one vertex v doubled), an
// ordered pair (e1, e2) of distinct green proper edges and one position in
// each. The entry at y_pos of e1 trades places with the left copy of v and
// the entry at z_pos of e2 with the right copy. The move is admissible when
// the three rewritten edges are proper, pairwise distinct as sets, and
// distinct from every untouched edge: then the loop count drops by exactly
// one, green degrees are preserved entrywise, and the red prefix is
// untouched.
//
// A backward switching is the inverse: a vertex v, an ordered pair of
// distinct green proper edges containing v, a third green proper edge e3
// and two positions in it whose entries trade places with the copies of v.
// Backward moves are counted as ordered tuples divided by two, because
// (v, e1, e2, e3, p_y, p_z) and (v, e2, e1, e3, p_z, p_y) perform the same
// exchange. Forward and backward totals then agree exactly over any fully
// enumerated sequence space, level by level.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperswitch/numeric.hpp"
#include "hyperswitch/rng.hpp"
#include "hyperswitch/sequence.hpp"

namespace hsw {

struct RejectBudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Switching {
    std::int64_t loop_edge = 0;
    std::int64_t e1 = 0;
    std::int64_t e2 = 0;
    std::int32_t y_pos = 0;  // position within e1
    std::int32_t z_pos = 0;  // position within e2
};

struct BackSwitching {
    std::uint32_t v = 0;
    std::int64_t e1 = 0;
    std::int64_t e2 = 0;
    std::int64_t e3 = 0;
    std::int32_t p_y = 0;  // position within e3 traded into e1
    std::int32_t p_z = 0;  // position within e3 traded into e2
};

// False on structurally invalid input (loop_edge not a simple green loop,
// e1 == e2, an edge not green proper, position out of range) as well as on
// outcome failures.
bool is_admissible_forward(const Sequence& seq, const Switching& sw);
bool is_admissible_backward(const Sequence& seq, const BackSwitching& bs);

// Number of admissible forward switchings. Expects a sequence with no
// duplicate edges, only simple loops, all of them green.
std::int64_t count_forward(const Sequence& seq);

// Admissible ordered backward tuples; always even.
std::int64_t count_backward_ordered(const Sequence& seq);

// count_backward_ordered / 2.
std::int64_t count_backward(const Sequence& seq);

// Both counts (forward, backward) over one shared edge index; cls must be
// classify_edges(seq). Cheaper than two separate calls in enumeration loops.
std::pair<std::int64_t, std::int64_t> count_forward_backward(const Sequence& seq,
                                                             const EdgeClassification& cls);

// Hard combinatorial ceilings, exact integers.
BigInt forward_upper_bound(const Params& p, std::int64_t lambda);   // k^2 λ (M - rm)^2
BigInt backward_upper_bound(const Params& p, std::int64_t phi);     // C(k,2) φ (M - rm)

void apply_forward_inplace(Sequence& seq, const Switching& sw);
Sequence apply_forward(const Sequence& seq, const Switching& sw);
void apply_backward_inplace(Sequence& seq, const BackSwitching& bs);
Sequence apply_backward(const Sequence& seq, const BackSwitching& bs);

// The backward move that undoes sw; evaluate on the sequence *before*
// apply_forward(seq, sw).
BackSwitching inverse_of(const Sequence& seq, const Switching& sw);

// Uniform over admissible forward switchings, by rejection from the uniform
// proposal over loop x ordered-distinct-green-proper-pair x positions.
// Throws RejectBudgetExhausted after max_rejects failed proposals.
Switching sample_forward(const Sequence& seq, Rng& rng, std::int64_t max_rejects = 1000000);

struct EliminationTrace {
    std::vector<Switching> steps;
};

// Applies uniformly sampled forward switchings until no loop remains.
// Expects a sequence with no duplicate edges, only simple green loops, and
// loop count within the budget; exactly lambda steps are recorded.
std::pair<Sequence, EliminationTrace> eliminate_loops(const Sequence& seq, Rng& rng,
                                                      std::int64_t max_rejects = 1000000);

}  // namespace hsw

// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact ground truth for small instances: exhaustive enumeration of the
// d-regular k-graphs on [n] and of the sequence space, preimage counting,
// and an exact loose-Hamilton-cycle decider. Everything here is brute force
// with explicit search budgets; these routines exist to check the sampled
// machinery, never to be fast.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hyperswitch/graph.hpp"
#include "hyperswitch/numeric.hpp"
#include "hyperswitch/params.hpp"
#include "hyperswitch/sequence.hpp"

namespace hsw {

// A search or enumeration would exceed its node budget.
struct OracleBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationResult {
    std::vector<SimpleGraph> instances;  // canonical, sorted, duplicate-free
    std::int64_t count() const { return static_cast<std::int64_t>(instances.size()); }
};

// All simple d-regular k-graphs on labeled [n], by backtracking that always
// completes the lowest vertex of deficient degree. The budget counts edge
// placement attempts.
EnumerationResult enumerate_regular(std::int64_t n, std::int64_t d, std::int64_t k,
                                    std::int64_t node_budget = 100000000);

// (nd)! / (d!)^n.
BigInt sequence_space_size(const Params& p);

// Visits every sequence with each vertex appearing exactly d times, in
// lexicographic order, exactly once. The visitor must not retain the
// reference. Throws OracleBudgetError if the space exceeds size_budget.
void for_each_sequence(const Params& p, const std::function<void(const Sequence&)>& visit,
                       std::int64_t size_budget = 100000000);

// M! (k!)^M.
BigInt unfiltered_preimage_count(const Params& p);

struct PreimageCount {
    BigInt total;    // sequences mapping to h; equals M!(k!)^M for simple h
    BigInt in_band;  // of those, sequences inside the phi concentration band
};

// Counts preimage sequences of a simple graph h by enumerating every edge
// order and every within-edge order. Throws OracleBudgetError when
// M!(k!)^M exceeds the budget.
PreimageCount count_preimages(const SimpleGraph& h, const Params& p,
                              std::int64_t budget = 100000000);

// A loose Hamilton cycle as an ordered list of edge indices into h.edges:
// consecutive edges (cyclically) intersect in exactly one vertex,
// non-consecutive edges are disjoint, and every vertex of [n] is covered.
// Requires n = l(k-1) with l >= 3 edges; returns nullopt otherwise or when
// no cycle exists.
std::optional<std::vector<std::int64_t>> find_loose_hamilton(
    const SimpleGraph& h, std::int64_t node_budget = 100000000);

// Independent re-validation of a certificate from find_loose_hamilton.
bool validate_loose_hamilton(const SimpleGraph& h, const std::vector<std::int64_t>& order);

}  // namespace hsw

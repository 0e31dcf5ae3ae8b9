// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperswitch/params.hpp"

namespace hsw {

// A sequence over [n] with every vertex appearing exactly d times, read as
// M consecutive edges of k entries each. Vertex ids are 0-based in memory;
// all text formats are 1-based.
struct Sequence {
    Params params;
    std::vector<std::uint32_t> entries;

    std::span<const std::uint32_t> edge(std::int64_t i) const {
        return {entries.data() + i * params.k, static_cast<std::size_t>(params.k)};
    }
    std::span<std::uint32_t> edge(std::int64_t i) {
        return {entries.data() + i * params.k, static_cast<std::size_t>(params.k)};
    }
    bool is_red_edge(std::int64_t i) const { return i < params.red_edges; }
};

// An edge with k distinct vertices is proper. A loop repeats some vertex;
// the only benign shape is one vertex exactly twice and the rest distinct.
enum class EdgeKind : std::uint8_t {
    proper,
    simple_loop,      // x x a b ... with x,a,b,... distinct
    loop_triple,      // some vertex appears 3+ times
    loop_two_pairs,   // two or more vertices appear twice
};

inline bool is_loop(EdgeKind k) { return k != EdgeKind::proper; }

struct EdgeClassification {
    std::vector<EdgeKind> kinds;
    std::int64_t lambda = 0;  // number of loop edges of any shape
    // Indices of edges sharing a multiset with another edge, grouped. Only
    // groups of size >= 2 appear.
    std::vector<std::vector<std::int64_t>> duplicate_groups;
    std::vector<std::int64_t> red_loop_indices;
    std::vector<std::int64_t> green_proper_indices;

    bool has_duplicates() const { return !duplicate_groups.empty(); }
};

EdgeClassification classify_edges(const Sequence& seq);

// Sum over vertices of g(g-1), where g counts occurrences among the green
// entries (positions red_prefix_len .. nd-1), loops included.
std::int64_t compute_phi(const Sequence& seq);

// Exact expectation of compute_phi under the uniform sequence draw:
// n * d(d-1) * G(G-1) / (nd (nd-1)) with G = nd - red_prefix_len.
Rational expected_phi(const Params& p);

struct Membership {
    bool in_E = false;        // no duplicate edges, loops all simple, lambda within limit
    std::int64_t level = 0;   // lambda
    bool in_G = false;        // in_E and the red prefix is loop-free
    std::int64_t phi = 0;
    bool in_tilde_S = false;  // |phi - E phi| <= n^{3/4} d, exact comparison
    // First edge that disqualifies the sequence from E, when in_E is false.
    std::optional<std::int64_t> witness_edge;
};

Membership membership(const Sequence& seq);
Membership membership(const Sequence& seq, const Rational& ephi);

}  // namespace hsw

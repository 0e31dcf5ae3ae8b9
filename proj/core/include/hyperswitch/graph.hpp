// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperswitch/sequence.hpp"

namespace hsw {

// A simple k-uniform hypergraph on [n]: a set of distinct edges, each a set
// of k distinct vertices. Canonical form sorts every edge and the edge list,
// so equality is plain ==.
struct SimpleGraph {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::vector<std::vector<std::uint32_t>> edges;

    void canonicalize();
    bool operator==(const SimpleGraph& o) const = default;

    // Stable identity usable as a hash map key.
    std::string key() const;
};

// Degree vector (0-based).
std::vector<std::int64_t> degrees(const SimpleGraph& g);

bool is_regular(const SimpleGraph& g, std::int64_t d);

// Reads the M consecutive edges of a loop-free, duplicate-free sequence as a
// simple graph. Throws std::invalid_argument if any edge repeats a vertex or
// any two edges coincide as sets.
SimpleGraph graph_of_sequence(const Sequence& seq);

}  // namespace hsw

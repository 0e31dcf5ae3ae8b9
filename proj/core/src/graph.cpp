// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hyperswitch/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsw {

void SimpleGraph::canonicalize() {
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
}

std::string SimpleGraph::key() const {
    std::string s;
    s.reserve(edges.size() * k * 4);
    for (const auto& e : edges) {
        for (std::uint32_t v : e) {
            s.push_back(static_cast<char>(v & 0xff));
            s.push_back(static_cast<char>((v >> 8) & 0xff));
            s.push_back(static_cast<char>((v >> 16) & 0xff));
            s.push_back(static_cast<char>((v >> 24) & 0xff));
        }
    }
    return s;
}

std::vector<std::int64_t> degrees(const SimpleGraph& g) {
    std::vector<std::int64_t> deg(g.n, 0);
    for (const auto& e : g.edges) {
        for (std::uint32_t v : e) ++deg[v];
    }
    return deg;
}

bool is_regular(const SimpleGraph& g, std::int64_t d) {
    auto deg = degrees(g);
    return std::all_of(deg.begin(), deg.end(), [d](std::int64_t x) { return x == d; });
}

SimpleGraph graph_of_sequence(const Sequence& seq) {
    SimpleGraph g;
    g.n = seq.params.n;
    g.k = seq.params.k;
    g.edges.reserve(seq.params.M);
    for (std::int64_t i = 0; i < seq.params.M; ++i) {
        auto e = seq.edge(i);
        std::vector<std::uint32_t> edge(e.begin(), e.end());
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
            throw std::invalid_argument("graph_of_sequence: edge " + std::to_string(i) +
                                        " repeats a vertex");
        }
        g.edges.push_back(std::move(edge));
    }
    g.canonicalize();
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end()) {
        throw std::invalid_argument("graph_of_sequence: duplicate edges");
    }
    return g;
}

}  // namespace hsw

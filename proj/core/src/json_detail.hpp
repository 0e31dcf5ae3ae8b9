// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Internal helpers for building report JSON. Not installed.

#pragma once

#include <json.hpp>

#include "hyperswitch/graph.hpp"
#include "hyperswitch/params.hpp"

namespace hsw::detail {

inline nlohmann::json json_params(const Params& p) {
    return nlohmann::json{
        {"k", p.k},
        {"n", p.n},
        {"d", p.d},
        {"M", p.M},
        {"r", p.r},
        {"m", p.m},
        {"red_edges", p.red_edges},
        {"red_prefix_len", p.red_prefix_len},
        {"L_fourth_power", p.n * p.d * p.d},
    };
}

inline nlohmann::json json_graph(const SimpleGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges) {
        nlohmann::json edge = nlohmann::json::array();
        for (std::uint32_t v : e) edge.push_back(v + 1);
        edges.push_back(std::move(edge));
    }
    return nlohmann::json{{"n", g.n}, {"k", g.k}, {"edges", std::move(edges)}};
}

}  // namespace hsw::detail

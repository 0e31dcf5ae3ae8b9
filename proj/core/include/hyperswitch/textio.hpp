// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Text formats.
//
//   sequence:  "seq k n d"  header line, then one line of n*d space-
//              separated 1-based vertex ids (k consecutive ids per edge).
//
//   graph:     "khg k n M"  header line, then M lines of k ascending
//              1-based vertex ids.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hyperswitch/graph.hpp"
#include "hyperswitch/sequence.hpp"

namespace hsw {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_sequence(std::ostream& os, const Sequence& seq);
std::string sequence_to_string(const Sequence& seq);

// Validates the header, the entry count and per-vertex multiplicities.
Sequence read_sequence(std::istream& is);
Sequence sequence_from_string(const std::string& text);

void write_graph(std::ostream& os, const SimpleGraph& g);
std::string graph_to_string(const SimpleGraph& g);

// Validates header, edge sizes, vertex range, ascending edges, distinctness.
SimpleGraph read_graph(std::istream& is);
SimpleGraph graph_from_string(const std::string& text);

// Params as a JSON object; the loop budget appears as its exact fourth
// power n*d^2 under "L_fourth_power".
std::string params_json(const Params& p);

// Graph as a JSON object with 1-based edges.
std::string graph_json(const SimpleGraph& g);

}  // namespace hsw

// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hyperswitch/textio.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "json_detail.hpp"

namespace hsw {

void write_sequence(std::ostream& os, const Sequence& seq) {
    os << "seq " << seq.params.k << ' ' << seq.params.n << ' ' << seq.params.d << '\n';
    for (std::size_t i = 0; i < seq.entries.size(); ++i) {
        if (i) os << ' ';
        os << seq.entries[i] + 1;
    }
    os << '\n';
}

std::string sequence_to_string(const Sequence& seq) {
    std::ostringstream os;
    write_sequence(os, seq);
    return os.str();
}

Sequence read_sequence(std::istream& is) {
    std::string tag;
    std::int64_t k, n, d;
    if (!(is >> tag >> k >> n >> d) || tag != "seq") {
        throw FormatError("sequence header must be: seq <k> <n> <d>");
    }
    Sequence seq;
    seq.params = derive_params(n, d, k);
    seq.entries.resize(seq.params.seq_len());
    std::vector<std::int64_t> count(n, 0);
    for (auto& e : seq.entries) {
        std::int64_t v;
        if (!(is >> v)) throw FormatError("sequence body too short");
        if (v < 1 || v > n) throw FormatError("vertex id out of range: " + std::to_string(v));
        e = static_cast<std::uint32_t>(v - 1);
        ++count[e];
    }
    for (std::int64_t v = 0; v < n; ++v) {
        if (count[v] != d) {
            throw FormatError("vertex " + std::to_string(v + 1) + " appears " +
                              std::to_string(count[v]) + " times, expected " + std::to_string(d));
        }
    }
    return seq;
}

Sequence sequence_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_sequence(is);
}

void write_graph(std::ostream& os, const SimpleGraph& g) {
    os << "khg " << g.k << ' ' << g.n << ' ' << g.edges.size() << '\n';
    for (const auto& e : g.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ' ';
            os << e[i] + 1;
        }
        os << '\n';
    }
}

std::string graph_to_string(const SimpleGraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

SimpleGraph read_graph(std::istream& is) {
    std::string tag;
    std::int64_t k, n, M;
    if (!(is >> tag >> k >> n >> M) || tag != "khg") {
        throw FormatError("graph header must be: khg <k> <n> <M>");
    }
    if (k < 1 || n < 1 || M < 0) throw FormatError("graph header values out of range");
    SimpleGraph g;
    g.n = n;
    g.k = k;
    g.edges.resize(M);
    for (auto& e : g.edges) {
        e.resize(k);
        std::int64_t prev = 0;
        for (auto& x : e) {
            std::int64_t v;
            if (!(is >> v)) throw FormatError("graph body too short");
            if (v < 1 || v > n) throw FormatError("vertex id out of range: " + std::to_string(v));
            if (v <= prev) throw FormatError("edge vertices must be strictly ascending");
            prev = v;
            x = static_cast<std::uint32_t>(v - 1);
        }
    }
    auto sorted = g.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw FormatError("duplicate edges in graph");
    }
    return g;
}

SimpleGraph graph_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is);
}

std::string params_json(const Params& p) { return detail::json_params(p).dump(2); }

std::string graph_json(const SimpleGraph& g) { return detail::json_graph(g).dump(2); }

}  // namespace hsw

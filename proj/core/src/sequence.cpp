// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hyperswitch/sequence.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace hsw {
namespace {

// Classify one edge from its sorted copy.
EdgeKind kind_of_sorted(const std::uint32_t* v, std::int64_t k) {
    int pairs = 0;
    for (std::int64_t i = 1; i < k; ++i) {
        if (v[i] != v[i - 1]) continue;
        if (i + 1 < k && v[i + 1] == v[i]) return EdgeKind::loop_triple;
        ++pairs;
    }
    if (pairs == 0) return EdgeKind::proper;
    if (pairs == 1) return EdgeKind::simple_loop;
    return EdgeKind::loop_two_pairs;
}

struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint32_t x : v) {
            h ^= x;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

EdgeClassification classify_edges(const Sequence& seq) {
    const Params& p = seq.params;
    EdgeClassification out;
    out.kinds.resize(p.M);

    std::vector<std::uint32_t> sorted(p.k);
    std::unordered_map<std::vector<std::uint32_t>, std::vector<std::int64_t>, VecHash> by_key;
    by_key.reserve(p.M * 2);

    for (std::int64_t i = 0; i < p.M; ++i) {
        auto e = seq.edge(i);
        sorted.assign(e.begin(), e.end());
        std::sort(sorted.begin(), sorted.end());
        EdgeKind kind = kind_of_sorted(sorted.data(), p.k);
        out.kinds[i] = kind;
        if (is_loop(kind)) {
            ++out.lambda;
            if (seq.is_red_edge(i)) out.red_loop_indices.push_back(i);
        } else if (!seq.is_red_edge(i)) {
            out.green_proper_indices.push_back(i);
        }
        by_key[sorted].push_back(i);
    }
    for (auto& [key, group] : by_key) {
        if (group.size() >= 2) out.duplicate_groups.push_back(group);
    }
    // Deterministic order regardless of hash table iteration.
    std::sort(out.duplicate_groups.begin(), out.duplicate_groups.end());
    return out;
}

std::int64_t compute_phi(const Sequence& seq) {
    const Params& p = seq.params;
    std::vector<std::int64_t> green_deg(p.n, 0);
    for (std::int64_t t = p.red_prefix_len; t < p.seq_len(); ++t) {
        ++green_deg[seq.entries[t]];
    }
    std::int64_t phi = 0;
    for (std::int64_t v = 0; v < p.n; ++v) {
        phi += green_deg[v] * (green_deg[v] - 1);
    }
    return phi;
}

Rational expected_phi(const Params& p) {
    const std::int64_t nd = p.seq_len();
    const std::int64_t g = p.green_len();
    if (nd < 2) return Rational(0);
    Rational num = Rational(p.n) * p.d * (p.d - 1) * g * (g - 1);
    return num / (Rational(nd) * (nd - 1));
}

Membership membership(const Sequence& seq) { return membership(seq, expected_phi(seq.params)); }

Membership membership(const Sequence& seq, const Rational& ephi) {
    const Params& p = seq.params;
    EdgeClassification cls = classify_edges(seq);

    Membership rep;
    rep.level = cls.lambda;
    rep.phi = compute_phi(seq);
    rep.in_tilde_S = within_phi_band(Rational(rep.phi) - ephi, p.n, p.d);

    rep.in_E = true;
    for (std::int64_t i = 0; i < p.M && rep.in_E; ++i) {
        if (cls.kinds[i] == EdgeKind::loop_triple || cls.kinds[i] == EdgeKind::loop_two_pairs) {
            rep.in_E = false;
            rep.witness_edge = i;
        }
    }
    if (rep.in_E && cls.has_duplicates()) {
        rep.in_E = false;
        std::int64_t w = cls.duplicate_groups[0][1];
        for (const auto& g : cls.duplicate_groups) w = std::min(w, g[1]);
        rep.witness_edge = w;  // second occurrence of the earliest duplicated edge
    }
    if (rep.in_E && !p.loops_within_limit(cls.lambda)) {
        rep.in_E = false;
        // The limit has no single offending edge; report the last loop.
        std::int64_t last = -1;
        for (std::int64_t i = 0; i < p.M; ++i) {
            if (is_loop(cls.kinds[i])) last = i;
        }
        rep.witness_edge = last;
    }
    rep.in_G = rep.in_E && cls.red_loop_indices.empty();
    return rep;
}

}  // namespace hsw

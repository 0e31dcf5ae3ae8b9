// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hyperswitch/params.hpp"
#include "hyperswitch/sequence.hpp"

namespace hsw::test {

// Builds a sequence from 0-based entries; callers are responsible for the
// per-vertex multiplicities matching p.
inline Sequence make_seq(const Params& p, std::initializer_list<std::uint32_t> entries) {
    Sequence s;
    s.params = p;
    s.entries.assign(entries.begin(), entries.end());
    return s;
}

inline Sequence make_seq(const Params& p, const std::vector<std::uint32_t>& entries) {
    Sequence s;
    s.params = p;
    s.entries = entries;
    return s;
}

// True when every vertex of [n] appears exactly d times.
inline bool degree_constrained(const Sequence& s) {
    std::vector<std::int64_t> cnt(s.params.n, 0);
    for (std::uint32_t v : s.entries) {
        if (v >= s.params.n) return false;
        ++cnt[v];
    }
    for (std::int64_t c : cnt) {
        if (c != s.params.d) return false;
    }
    return static_cast<std::int64_t>(s.entries.size()) == s.params.seq_len();
}

}  // namespace hsw::test

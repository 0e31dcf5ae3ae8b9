// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "../unit/helpers.hpp"
#include "hyperswitch/redswap.hpp"

using namespace hsw;
using hsw::test::make_seq;

namespace {

std::map<std::vector<std::uint32_t>, int> edge_multiset(const Sequence& s) {
    std::map<std::vector<std::uint32_t>, int> out;
    for (std::int64_t i = 0; i < s.params.M; ++i) {
        auto e = s.edge(i);
        std::vector<std::uint32_t> key(e.begin(), e.end());
        std::sort(key.begin(), key.end());
        ++out[key];
    }
    return out;
}

}  // namespace

TEST_SUITE("redswap") {

TEST_CASE("single red loop with a single green target is forced") {
    Params p = override_red_prefix(derive_params(6, 2, 3), 2);
    // Red: (0,0,1) loop, (2,3,4) proper. Green: (5,5,2) loop, (1,3,4) proper.
    Sequence s = make_seq(p, {0, 0, 1, 2, 3, 4, 5, 5, 2, 1, 3, 4});
    auto cls = classify_edges(s);
    REQUIRE(cls.red_loop_indices == std::vector<std::int64_t>{0});
    REQUIRE(cls.green_proper_indices == std::vector<std::int64_t>{3});

    Rng rng(1);
    auto [out, record] = swap_red_loops(s, cls, rng);
    CHECK(out.entries ==
          std::vector<std::uint32_t>{1, 3, 4, 2, 3, 4, 5, 5, 2, 0, 0, 1});
    REQUIRE(record.pairs.size() == 1);
    CHECK(record.pairs[0].red_loop_index == 0);
    CHECK(record.pairs[0].green_target_index == 3);
    CHECK(edge_multiset(out) == edge_multiset(s));
}

TEST_CASE("two red loops pair with green targets in ascending order") {
    Params p = override_red_prefix(derive_params(9, 2, 3), 3);
    // Red: (0,0,1) (2,2,3) (4,5,6); green: (1,3,4) (5,6,7) (7,8,8).
    Sequence s = make_seq(p, {0, 0, 1, 2, 2, 3, 4, 5, 6, 1, 3, 4, 5, 6, 7, 7, 8, 8});
    auto cls = classify_edges(s);
    REQUIRE(cls.red_loop_indices == std::vector<std::int64_t>{0, 1});
    REQUIRE(cls.green_proper_indices == std::vector<std::int64_t>{3, 4});

    Rng rng(1);
    auto [out, record] = swap_red_loops(s, cls, rng);
    // Both green propers must serve, in ascending order on both sides.
    REQUIRE(record.pairs.size() == 2);
    CHECK(record.pairs[0].red_loop_index == 0);
    CHECK(record.pairs[0].green_target_index == 3);
    CHECK(record.pairs[1].red_loop_index == 1);
    CHECK(record.pairs[1].green_target_index == 4);
    CHECK(out.entries == std::vector<std::uint32_t>{1, 3, 4, 5, 6, 7, 4, 5, 6,
                                                    0, 0, 1, 2, 2, 3, 7, 8, 8});
    CHECK(edge_multiset(out) == edge_multiset(s));

    auto out_cls = classify_edges(out);
    CHECK(out_cls.red_loop_indices.empty());
    CHECK(out_cls.lambda == cls.lambda);
}

TEST_CASE("no-op when the red prefix is already clean") {
    Params p = override_red_prefix(derive_params(6, 2, 3), 2);
    Sequence s = make_seq(p, {0, 1, 2, 3, 4, 5, 0, 3, 1, 2, 4, 5});
    auto cls = classify_edges(s);
    Rng rng(1);
    auto [out, record] = swap_red_loops(s, cls, rng);
    CHECK(record.pairs.empty());
    CHECK(out.entries == s.entries);
}

TEST_CASE("throws when green propers cannot host every red loop") {
    Params p = override_red_prefix(derive_params(4, 3, 3), 1);
    // Green edges are all loops: (2,2,0) (3,3,2) (1,1,3).
    Sequence s = make_seq(p, {0, 0, 1, 2, 2, 0, 3, 3, 2, 1, 1, 3});
    auto cls = classify_edges(s);
    REQUIRE(cls.red_loop_indices == std::vector<std::int64_t>{0});
    REQUIRE(cls.green_proper_indices.empty());
    Rng rng(1);
    CHECK_THROWS_AS(swap_red_loops(s, cls, rng), InsufficientGreenProper);
}

TEST_CASE("sampled swaps preserve the edge multiset and clean the prefix") {
    Params p = override_red_prefix(derive_params(9, 2, 3), 3);
    Sequence s = make_seq(p, {0, 0, 1, 2, 3, 4, 5, 6, 7, 1, 2, 3, 4, 5, 6, 7, 8, 8});
    auto cls = classify_edges(s);
    REQUIRE(cls.red_loop_indices == std::vector<std::int64_t>{0});
    REQUIRE(cls.green_proper_indices == std::vector<std::int64_t>{3, 4});
    bool used_first = false, used_second = false;
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
        Rng rng(seed);
        auto [out, record] = swap_red_loops(s, cls, rng);
        CHECK(edge_multiset(out) == edge_multiset(s));
        CHECK(classify_edges(out).red_loop_indices.empty());
        REQUIRE(record.pairs.size() == 1);
        used_first |= record.pairs[0].green_target_index == 3;
        used_second |= record.pairs[0].green_target_index == 4;
    }
    CHECK(used_first);
    CHECK(used_second);
}

}  // TEST_SUITE

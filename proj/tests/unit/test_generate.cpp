// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "../unit/helpers.hpp"
#include "hyperswitch/generate.hpp"
#include "hyperswitch/oracle.hpp"
#include "hyperswitch/stats.hpp"

using namespace hsw;
using hsw::test::degree_constrained;

namespace {

std::string entries_key(const Sequence& s) {
    std::string key;
    key.reserve(s.entries.size());
    for (std::uint32_t v : s.entries) key.push_back(static_cast<char>('a' + v));
    return key;
}

}  // namespace

TEST_SUITE("generate") {

TEST_CASE("residual sampler weights, locate and decrement") {
    ResidualSampler rs(4, 2);
    CHECK(rs.total() == 8);
    for (std::uint32_t v = 0; v < 4; ++v) CHECK(rs.weight(v) == 2);

    rs.decrement(1);
    CHECK(rs.total() == 7);
    CHECK(rs.weight(1) == 1);

    std::map<std::uint32_t, int> hits;
    for (std::int64_t u = 0; u < rs.total(); ++u) ++hits[rs.locate(u)];
    CHECK(hits[0] == 2);
    CHECK(hits[1] == 1);
    CHECK(hits[2] == 2);
    CHECK(hits[3] == 2);

    rs.decrement(1);
    CHECK(rs.weight(1) == 0);
    for (std::int64_t u = 0; u < rs.total(); ++u) CHECK(rs.locate(u) != 1);

    Rng rng(3);
    for (int i = 0; i < 200; ++i) CHECK(rs.pick(rng) != 1);
}

TEST_CASE("iid sampler fills nd entries in range") {
    Params p = derive_params(6, 2, 3);
    Rng rng(11);
    Sequence s = sample_iid(p, rng);
    CHECK(static_cast<std::int64_t>(s.entries.size()) == p.seq_len());
    for (std::uint32_t v : s.entries) CHECK(v < p.n);
}

TEST_CASE("degree-constrained samplers hit the multiset exactly") {
    Params p = derive_params(19, 3, 3);
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        CHECK(degree_constrained(sample_regular(p, rng)));
        CHECK(degree_constrained(sample_regular_sequential(p, rng)));
    }
}

TEST_CASE("step distribution is the exact conditional law") {
    Params p = derive_params(6, 2, 3);
    GenState st;
    st.t = 3;
    st.deg = {2, 1, 0, 0, 0, 0};
    st.max_deg = 2;
    auto dist = step_distribution(st, p);
    REQUIRE(dist.size() == 6);
    CHECK(dist[0] == Rational(0));
    CHECK(dist[1] == Rational(1, 9));
    CHECK(dist[2] == Rational(2, 9));
    Rational sum(0);
    for (const auto& q : dist) sum += q;
    CHECK(sum == Rational(1));
}

TEST_CASE("shuffle and sequential samplers induce the same uniform law") {
    Params p = derive_params(3, 1, 3);
    std::vector<std::string> keys;
    std::map<std::string, std::size_t> index;
    for_each_sequence(p, [&](const Sequence& s) {
        index[entries_key(s)] = keys.size();
        keys.push_back(entries_key(s));
    });
    REQUIRE(keys.size() == 6);

    const std::int64_t N = 3000;
    std::vector<Rational> expected(keys.size(), Rational(1, 6));
    for (int which = 0; which < 2; ++which) {
        std::vector<std::int64_t> observed(keys.size(), 0);
        for (std::int64_t t = 0; t < N; ++t) {
            Rng rng = Rng::for_trial(42 + which, static_cast<std::uint64_t>(t));
            Sequence s = which == 0 ? sample_regular(p, rng) : sample_regular_sequential(p, rng);
            auto it = index.find(entries_key(s));
            REQUIRE(it != index.end());
            ++observed[it->second];
        }
        auto rep = pearson_test(observed, expected, 42);
        CHECK(rep.df == 5);
        CHECK(rep.p_value > 1e-6);
    }
}

}  // TEST_SUITE

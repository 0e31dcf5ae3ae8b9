// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "../unit/helpers.hpp"
#include "hyperswitch/coupling.hpp"

using namespace hsw;
using hsw::test::degree_constrained;
using hsw::test::make_seq;

TEST_SUITE("coupling") {

TEST_CASE("margin condition closed form") {
    Params p = derive_params(6, 2, 3);
    GenState st;
    st.deg.assign(6, 0);

    st.t = 0;
    st.max_deg = 0;
    CHECK(mix_condition_holds(st, p));  // 2n d >= nd at the start

    st.t = 2;
    st.deg[0] = 2;
    st.max_deg = 2;
    // 2n (d - max) = 0 < nd - t = 10.
    CHECK_FALSE(mix_condition_holds(st, p));

    st.deg[0] = 1;
    st.max_deg = 1;
    st.t = 1;
    // 12 >= 11.
    CHECK(mix_condition_holds(st, p));
}

TEST_CASE("auxiliary distribution is exact and sums to one") {
    Params p = derive_params(6, 2, 3);
    GenState st;
    st.deg.assign(6, 0);
    st.t = 0;
    st.max_deg = 0;
    auto aux = aux_distribution(st, p);
    REQUIRE(aux.size() == 6);
    // 2 d / nd - 1/n = 1/n for a fresh vertex.
    for (const auto& q : aux) CHECK(q == Rational(1, 6));

    st.t = 1;
    st.deg[0] = 1;
    st.max_deg = 1;
    aux = aux_distribution(st, p);
    CHECK(aux[0] == Rational(2, 11) - Rational(1, 6));
    CHECK(aux[1] == Rational(4, 11) - Rational(1, 6));
    Rational sum(0);
    for (const auto& q : aux) sum += q;
    CHECK(sum == Rational(1));

    st.t = 2;
    st.deg[0] = 2;
    st.max_deg = 2;
    CHECK_THROWS_AS(aux_distribution(st, p), std::domain_error);
}

TEST_CASE("coupled run structure at a red-prefix instance") {
    Params p = derive_params(19, 3, 3);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Rng rng(seed);
        CoupledRun run = coupled_generate(p, rng);
        CHECK(static_cast<std::int64_t>(run.x.entries.size()) == p.seq_len());
        CHECK(degree_constrained(run.y));
        // One selector coin per step, drawn for the whole sequence so the
        // stream layout does not depend on where the prefix ends.
        CHECK(static_cast<std::int64_t>(run.selectors.size()) == p.seq_len());

        // w_indices are exactly the red edges whose selectors are all one.
        std::set<std::int64_t> w(run.w_indices.begin(), run.w_indices.end());
        for (std::int64_t e = 0; e < p.red_edges; ++e) {
            bool all_one = true;
            for (std::int64_t j = 0; j < p.k; ++j) {
                all_one = all_one && run.selectors[e * p.k + j] == 1;
            }
            CHECK(w.count(e) == (all_one ? 1U : 0U));
        }

        // While the margin condition has held, a selector one forces Y to
        // copy X at that position.
        for (std::int64_t t = 0; t <= run.condition_held_through; ++t) {
            if (run.selectors[t] == 1) CHECK(run.y.entries[t] == run.x.entries[t]);
        }

        // event_b is exactly "the condition held through the whole prefix".
        CHECK(run.event_b == (run.condition_held_through == p.red_prefix_len - 1));
    }
}

TEST_CASE("extract_hnm yields m distinct proper edges") {
    Params p = derive_params(19, 3, 3);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Rng rng(seed);
        CoupledRun run = coupled_generate(p, rng);
        SimpleGraph g = extract_hnm(run, rng);
        CHECK(g.n == p.n);
        CHECK(g.k == p.k);
        CHECK(static_cast<std::int64_t>(g.edges.size()) == p.m);
        std::set<std::vector<std::uint32_t>> dedup(g.edges.begin(), g.edges.end());
        CHECK(dedup.size() == g.edges.size());
        for (const auto& e : g.edges) {
            CHECK(std::is_sorted(e.begin(), e.end()));
            std::set<std::uint32_t> distinct(e.begin(), e.end());
            CHECK(distinct.size() == e.size());
            for (std::uint32_t v : e) CHECK(v < p.n);
        }
    }
}

TEST_CASE("check_embedding confirms presence and reports a missing edge") {
    Params p = override_red_prefix(derive_params(6, 2, 3), 2);
    Sequence s = make_seq(p, {0, 1, 2, 3, 4, 5, 0, 3, 1, 2, 4, 5});

    SimpleGraph inside{6, 3, {{0, 1, 2}, {3, 4, 5}}};
    auto ok = check_embedding(inside, s);
    CHECK(ok.embedded);
    CHECK_FALSE(ok.missing_edge.has_value());

    // {0,1,3} appears in the sequence but outside the red prefix.
    SimpleGraph outside{6, 3, {{0, 1, 2}, {0, 1, 3}}};
    auto miss = check_embedding(outside, s);
    CHECK_FALSE(miss.embedded);
    REQUIRE(miss.missing_edge.has_value());
    CHECK(*miss.missing_edge == std::vector<std::uint32_t>{0, 1, 3});

    SimpleGraph empty{6, 3, {}};
    CHECK(check_embedding(empty, s).embedded);
}

}  // TEST_SUITE

// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hyperswitch/coupling.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace hsw {

bool mix_condition_holds(const GenState& st, const Params& p) {
    // 2n(d - max_deg) >= nd - t
    return 2 * p.n * (p.d - st.max_deg) >= p.seq_len() - st.t;
}

std::vector<Rational> aux_distribution(const GenState& st, const Params& p) {
    if (!mix_condition_holds(st, p)) {
        throw std::domain_error("aux_distribution: margin condition fails at t=" +
                                std::to_string(st.t));
    }
    const std::int64_t rem = p.seq_len() - st.t;
    std::vector<Rational> dist(p.n);
    for (std::int64_t v = 0; v < p.n; ++v) {
        // 2(d - deg)/rem - 1/n == (2n(d - deg) - rem) / (n * rem)
        dist[v] = Rational(2 * p.n * (p.d - st.deg[v]) - rem, p.n * rem);
    }
    return dist;
}

namespace {

// One Y entry with P(v) = (2n(d-deg v) - rem)/(n*rem), by proposing from the
// residual weights and thinning. All integer arithmetic; accepts with
// probability 1/2 overall.
std::uint32_t draw_aux(const ResidualSampler& res, Rng& rng, std::int64_t n) {
    const std::int64_t rem = res.total();
    for (;;) {
        std::uint32_t v = res.pick(rng);
        const std::int64_t w = res.weight(v);
        const std::int64_t cap = 2 * n * w;
        const std::int64_t keep = cap - rem;  // >= 0 under the margin condition
        if (static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cap))) < keep) {
            return v;
        }
    }
}

BigInt binom_big(std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a) return BigInt(0);
    b = std::min(b, a - b);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;
    }
    return r;
}

unsigned __int128 binom128(std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    unsigned __int128 r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r = r * static_cast<unsigned __int128>(a - b + i) / static_cast<unsigned __int128>(i);
    }
    return r;
}

// Largest a with C(a, i) <= rem, scanning down from bound with the exact
// descent C(a-1, i) = C(a, i) (a-i)/a. Subtracts C(a, i) from rem.
std::int64_t unrank_digit(std::int64_t i, std::int64_t bound, std::uint64_t& rem) {
    unsigned __int128 c = binom128(bound, i);
    std::int64_t a = bound;
    while (c > rem) {
        c = c * static_cast<unsigned __int128>(a - i) / static_cast<unsigned __int128>(a);
        --a;
    }
    rem -= static_cast<std::uint64_t>(c);
    return a;
}

}  // namespace

CoupledRun coupled_generate(const Params& p, Rng& rng) {
    const std::int64_t nd = p.seq_len();
    const std::int64_t red_len = p.red_prefix_len;

    CoupledRun run;
    run.x.params = p;
    run.x.entries.resize(nd);
    run.y.params = p;
    run.y.entries.resize(nd);
    run.selectors.resize(nd);

    GenState st;
    st.deg.assign(p.n, 0);
    ResidualSampler res(p.n, p.d);

    std::int64_t first_violation = -1;

    for (std::int64_t t = 0; t < nd; ++t) {
        st.t = t;
        const std::uint32_t xv = static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(p.n)));
        run.x.entries[t] = xv;
        const bool sel = rng.coin();
        run.selectors[t] = sel ? 1 : 0;

        std::uint32_t yv;
        if (t < red_len && mix_condition_holds(st, p)) {
            yv = sel ? xv : draw_aux(res, rng, p.n);
        } else {
            if (t < red_len && first_violation < 0) first_violation = t;
            // Direct conditional draw (d - deg)/(nd - t).
            yv = res.locate(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(res.total()))));
        }
        run.y.entries[t] = yv;
        res.decrement(yv);
        ++st.deg[yv];
        st.max_deg = std::max<std::int64_t>(st.max_deg, st.deg[yv]);
    }

    run.event_b = first_violation < 0;
    run.condition_held_through = run.event_b ? red_len - 1 : first_violation - 1;

    for (std::int64_t i = 0; i < p.red_edges; ++i) {
        bool all = true;
        for (std::int64_t j = i * p.k; j < (i + 1) * p.k; ++j) {
            if (!run.selectors[j]) {
                all = false;
                break;
            }
        }
        if (all) run.w_indices.push_back(i);
    }

    EdgeClassification xc = classify_edges(run.x);
    const std::int64_t surplus = static_cast<std::int64_t>(run.w_indices.size()) - p.m;
    run.event_a = !xc.has_duplicates() && p.loops_within_limit(xc.lambda) &&
                  geq_loop_limit(surplus, p.n, p.d);

    return run;
}

SimpleGraph extract_hnm(const CoupledRun& run, Rng& rng) {
    const Params& p = run.x.params;
    SimpleGraph g;
    g.n = p.n;
    g.k = p.k;

    if (run.event_a) {
        std::vector<std::uint32_t> edge(p.k);
        for (std::int64_t i : run.w_indices) {
            if (static_cast<std::int64_t>(g.edges.size()) == p.m) break;
            auto e = run.x.edge(i);
            edge.assign(e.begin(), e.end());
            std::sort(edge.begin(), edge.end());
            if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) continue;  // loop
            g.edges.push_back(edge);
        }
        // event_a guarantees enough proper selected edges: |W| >= m + L and
        // at most L of them are loops; duplicates cannot occur at all.
        assert(static_cast<std::int64_t>(g.edges.size()) == p.m);
        g.canonicalize();
        return g;
    }

    // Independent fallback: uniform m-subset of the C(n,k) sorted k-sets.
    BigInt total_big = binom_big(p.n, p.k);
    if (total_big > BigInt(std::int64_t{1} << 62)) {
        throw std::overflow_error("extract_hnm: C(n,k) out of sampling range");
    }
    const std::uint64_t total = static_cast<std::uint64_t>(total_big);
    assert(static_cast<std::uint64_t>(p.m) <= total);

    // Floyd's subset sampling: uniform over m-subsets of [0, total).
    std::unordered_set<std::uint64_t> ranks;
    ranks.reserve(static_cast<std::size_t>(p.m) * 2);
    for (std::uint64_t j = total - static_cast<std::uint64_t>(p.m); j < total; ++j) {
        std::uint64_t t = rng.below(j + 1);
        if (!ranks.insert(t).second) ranks.insert(j);
    }

    std::vector<std::uint64_t> sorted_ranks(ranks.begin(), ranks.end());
    std::sort(sorted_ranks.begin(), sorted_ranks.end());
    for (std::uint64_t rank : sorted_ranks) {
        // Combinatorial number system: rank = sum_i C(a_i, i), a_1 < ... < a_k.
        std::vector<std::uint32_t> edge(p.k);
        std::uint64_t rem = rank;
        std::int64_t bound = p.n - 1;
        for (std::int64_t i = p.k; i >= 1; --i) {
            std::int64_t a = unrank_digit(i, bound, rem);
            edge[i - 1] = static_cast<std::uint32_t>(a);
            bound = a - 1;
        }
        g.edges.push_back(std::move(edge));
    }
    g.canonicalize();
    return g;
}

EmbedCheck check_embedding(const SimpleGraph& g, const Sequence& seq) {
    struct KeyHash {
        std::size_t operator()(const std::vector<std::uint32_t>& v) const {
            std::uint64_t h = 0xcbf29ce484222325ULL;
            for (std::uint32_t x : v) {
                h ^= x;
                h *= 0x100000001b3ULL;
            }
            return static_cast<std::size_t>(h);
        }
    };
    std::unordered_set<std::vector<std::uint32_t>, KeyHash> red;
    red.reserve(seq.params.red_edges * 2);
    std::vector<std::uint32_t> sorted(seq.params.k);
    for (std::int64_t i = 0; i < seq.params.red_edges; ++i) {
        auto e = seq.edge(i);
        sorted.assign(e.begin(), e.end());
        std::sort(sorted.begin(), sorted.end());
        red.insert(sorted);
    }
    for (const auto& e : g.edges) {
        if (!red.count(e)) return {false, e};
    }
    return {true, std::nullopt};
}

}  // namespace hsw

// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance harness. Each criterion prints exactly one line:
//
//   PASS criterion-03 fb-audit(60,4): 0/10000 violations ...
//   FAIL criterion-09 joint frequency 0.00 at n=4000 ...
//
// Run as `acceptance <number>` for one criterion (the ctest wiring),
// `acceptance extra` for the strengthened double-count enumerations, or
// `acceptance all` for the whole table. Exit code 0 iff everything that
// was asked for passed. Criterion 9 is expected to fail honestly at these
// scales; docs/embedding_trend.md holds the calibration data and the
// analysis of why the joint event is out of reach on desk hardware.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hyperswitch/coupling.hpp"
#include "hyperswitch/oracle.hpp"
#include "hyperswitch/params.hpp"
#include "hyperswitch/pipeline.hpp"
#include "hyperswitch/redswap.hpp"
#include "hyperswitch/rng.hpp"
#include "hyperswitch/sequence.hpp"
#include "hyperswitch/stats.hpp"
#include "hyperswitch/switching.hpp"

using namespace hsw;

namespace {

constexpr std::uint64_t kSeed = 42;

bool report(const char* name, bool ok, const std::string& detail) {
    std::printf("%s %s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    std::fflush(stdout);
    return ok;
}

std::string fmt(const char* f, ...) {
    va_list ap;
    va_start(ap, f);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// Uniform conditioned draw: degree-constrained sequences rejected until the
// well-behaved-loop family (simple loops only, no duplicates, loop count in
// budget, clean red prefix) accepts one.
Sequence draw_conditioned(const Params& p, Rng& rng) {
    for (int tries = 0; tries < 1000000; ++tries) {
        Sequence s = sample_regular(p, rng);
        auto cls = classify_edges(s);
        if (cls.has_duplicates()) continue;
        bool simple_only = true;
        for (auto k : cls.kinds) {
            if (k == EdgeKind::loop_triple || k == EdgeKind::loop_two_pairs) simple_only = false;
        }
        if (!simple_only) continue;
        if (!p.loops_within_limit(cls.lambda)) continue;
        if (!cls.red_loop_indices.empty()) continue;
        return s;
    }
    throw std::runtime_error("conditioned rejection sampling starved");
}

// ---------------------------------------------------------------------------
// 1: pipeline uniformity against the enumerated space, plus negative control.
bool criterion_1() {
    Params p = derive_params(6, 2, 3);
    auto space = enumerate_regular(6, 2, 3);
    std::int64_t N = std::max<std::int64_t>(10 * space.count(), 20000);

    auto rep = uniformity_test(
        [&](Rng& rng) {
            return run_pipeline(p, rng, PipelineMode::resample_until_ok).tilde_h;
        },
        space, N, kSeed);

    auto neg = uniformity_test(
        [&](Rng& rng) { return biased_sample_regular_graph(p, rng); }, space, N, kSeed);

    bool ok = rep.p_value >= 0.01 && neg.p_value < 1e-4;
    return report("criterion-01", ok,
                  fmt("uniformity on %lld graphs, N=%lld: p=%.4f (need >=0.01); "
                      "negative control p=%.3e (need <1e-4)",
                      static_cast<long long>(space.count()), static_cast<long long>(N),
                      rep.p_value, neg.p_value));
}

// ---------------------------------------------------------------------------
// 2: exact switching-count balance on the pinned tiny enumerations.
bool criterion_2() {
    bool ok = true;
    std::string detail;
    for (auto [n, d] : {std::pair<int, int>{3, 2}, {6, 1}}) {
        Params p = derive_params(n, d, 3);
        auto rep = double_count_check(p);
        ok = ok && rep.identities_hold;
        detail += fmt("(%d,%d): identities %s, %lld in domain; ", n, d,
                      rep.identities_hold ? "exact" : "BROKEN",
                      static_cast<long long>(rep.in_domain));
    }
    detail += "level sums all zero at these sizes, see extra for nonvacuous instances";
    return report("criterion-02", ok, detail);
}

// Strengthened double counting: the pinned instances above balance trivially
// (every level sum is zero), so the same identity is re-checked where the
// sums are provably nonzero, against frozen exact values.
bool criterion_extra() {
    bool ok = true;
    std::string detail;

    {
        Params p = derive_params(4, 3, 3);
        auto rep = double_count_check(p);
        bool level1_empty = rep.levels.size() > 1 && rep.levels[1].members == 0;
        bool sums_zero = true;
        for (const auto& lv : rep.levels) {
            sums_zero = sums_zero && lv.sum_forward == 0 && lv.sum_backward == 0;
        }
        ok = ok && rep.identities_hold && level1_empty && sums_zero;
        detail += fmt("(4,3): identities %s, no sequences at loop level 1 as proved; ",
                      rep.identities_hold ? "exact" : "BROKEN");
    }
    {
        Params p = derive_params(6, 2, 3);
        auto rep = double_count_check(p);
        bool frozen =
            rep.in_domain == 6531840 && rep.levels.size() == 3 &&
            rep.levels[0].members == 2332800 && rep.levels[1].members == 2799360 &&
            rep.levels[2].members == 1399680 && rep.levels[1].sum_forward == 89579520 &&
            rep.levels[0].sum_backward == 89579520 && rep.levels[2].sum_forward == 22394880 &&
            rep.levels[1].sum_backward == 22394880;
        ok = ok && rep.identities_hold && frozen;
        detail += fmt("(6,2): identities %s, level sums {89579520, 22394880} %s frozen values",
                      rep.identities_hold ? "exact" : "BROKEN",
                      frozen ? "match" : "MISMATCH");
    }
    return report("criterion-02-extra", ok, detail);
}

// ---------------------------------------------------------------------------
// 3: hard ceilings on F and B, sampled at (60,4) and exhaustive on the tiny
// enumerations.
bool criterion_3() {
    Params big = derive_params(60, 4, 3);
    auto audit = fb_audit(big, 10000, kSeed);
    bool ok = audit.forward_violations == 0 && audit.backward_violations == 0;
    std::string detail = fmt("fb-audit(60,4) N=10000: %lld forward / %lld backward violations; ",
                             static_cast<long long>(audit.forward_violations),
                             static_cast<long long>(audit.backward_violations));

    std::int64_t checked = 0, violations = 0;
    for (auto [n, d] : {std::pair<int, int>{3, 2}, {6, 1}, {4, 3}, {6, 2}}) {
        Params p = derive_params(n, d, 3);
        for_each_sequence(p, [&](const Sequence& s) {
            auto cls = classify_edges(s);
            if (cls.has_duplicates() || !cls.red_loop_indices.empty()) return;
            bool simple_only = true;
            for (auto kk : cls.kinds) {
                if (kk == EdgeKind::loop_triple || kk == EdgeKind::loop_two_pairs) {
                    simple_only = false;
                }
            }
            if (!simple_only || !p.loops_within_limit(cls.lambda)) return;
            auto [f, b] = count_forward_backward(s, cls);
            ++checked;
            if (BigInt(f) > forward_upper_bound(p, cls.lambda)) ++violations;
            if (BigInt(b) > backward_upper_bound(p, compute_phi(s))) ++violations;
        });
    }
    ok = ok && violations == 0;
    detail += fmt("exhaustive over 4 tiny spaces: %lld sequences, %lld violations",
                  static_cast<long long>(checked), static_cast<long long>(violations));
    return report("criterion-03", ok, detail);
}

// ---------------------------------------------------------------------------
// 4: phi invariance, unit lambda steps, untouched red prefix, across every
// switching the earlier criteria exercise.
bool criterion_4() {
    std::int64_t fwd_apps = 0, bwd_apps = 0, exceptions = 0;

    auto audit_elimination = [&](const Sequence& y, const Sequence& yprime,
                                 const EliminationTrace& trace) {
        const Params& p = y.params;
        Sequence cur = y;
        std::int64_t phi = compute_phi(cur);
        std::int64_t lambda = classify_edges(cur).lambda;
        for (const auto& sw : trace.steps) {
            if (!is_admissible_forward(cur, sw)) ++exceptions;
            apply_forward_inplace(cur, sw);
            ++fwd_apps;
            std::int64_t phi_after = compute_phi(cur);
            std::int64_t lambda_after = classify_edges(cur).lambda;
            if (phi_after != phi) ++exceptions;
            if (lambda_after != lambda - 1) ++exceptions;
            phi = phi_after;
            lambda = lambda_after;
        }
        if (cur.entries != yprime.entries) ++exceptions;
        for (std::int64_t t = 0; t < p.red_prefix_len; ++t) {
            if (y.entries[t] != yprime.entries[t]) ++exceptions;
        }
    };

    {  // The uniformity instance: replay every pipeline elimination.
        Params p = derive_params(6, 2, 3);
        for (std::int64_t t = 0; t < 2000; ++t) {
            Rng rng = Rng::for_trial(kSeed, static_cast<std::uint64_t>(t));
            auto res = run_pipeline(p, rng, PipelineMode::resample_until_ok);
            if (res.status != PipelineStatus::ok) continue;
            audit_elimination(res.yprime, res.ypp, res.switchings);
        }
    }
    {  // The audit instance: a nonempty red prefix crosses the elimination.
        Params p = derive_params(60, 4, 3);
        for (std::int64_t t = 0; t < 300; ++t) {
            Rng rng = Rng::for_trial(kSeed + 1, static_cast<std::uint64_t>(t));
            Sequence y = draw_conditioned(p, rng);
            auto [out, trace] = eliminate_loops(y, rng);
            audit_elimination(y, out, trace);
        }
    }
    {  // Backward applications: lambda must step up by exactly one.
        Params p = derive_params(60, 4, 3);
        for (std::int64_t t = 0; t < 1000; ++t) {
            Rng rng = Rng::for_trial(kSeed + 2, static_cast<std::uint64_t>(t));
            Sequence y = draw_conditioned(p, rng);
            auto cls = classify_edges(y);
            if (cls.lambda == 0 || !p.loops_within_limit(cls.lambda)) continue;
            Switching sw = sample_forward(y, rng);
            BackSwitching inv = inverse_of(y, sw);
            Sequence fwd = apply_forward(y, sw);
            std::int64_t phi = compute_phi(fwd);
            std::int64_t lambda = classify_edges(fwd).lambda;
            Sequence back = apply_backward(fwd, inv);
            ++bwd_apps;
            if (compute_phi(back) != phi) ++exceptions;
            if (classify_edges(back).lambda != lambda + 1) ++exceptions;
        }
    }

    bool ok = exceptions == 0 && fwd_apps > 0 && bwd_apps > 0;
    return report("criterion-04", ok,
                  fmt("%lld forward + %lld backward applications audited, %lld invariant "
                      "exceptions (phi, unit lambda step, red prefix bytes)",
                      static_cast<long long>(fwd_apps), static_cast<long long>(bwd_apps),
                      static_cast<long long>(exceptions)));
}

// ---------------------------------------------------------------------------
// 5: forward/backward round-trips restore the sequence entrywise.
bool criterion_5() {
    std::int64_t trips = 0, failures = 0;
    auto run_at = [&](const Params& p, std::uint64_t salt, std::int64_t want) {
        for (std::int64_t t = 0; trips < want && t < 4 * want; ++t) {
            Rng rng = Rng::for_trial(kSeed + salt, static_cast<std::uint64_t>(t));
            Sequence y = draw_conditioned(p, rng);
            if (classify_edges(y).lambda == 0) continue;
            Switching sw = sample_forward(y, rng);
            BackSwitching inv = inverse_of(y, sw);
            Sequence there = apply_forward(y, sw);
            Sequence back = apply_backward(there, inv);
            ++trips;
            if (back.entries != y.entries) ++failures;
        }
    };
    run_at(derive_params(6, 2, 3), 3, 5000);
    run_at(derive_params(60, 4, 3), 4, 10000);
    bool ok = trips == 10000 && failures == 0;
    return report("criterion-05", ok,
                  fmt("%lld round-trips across (6,2) and (60,4), %lld failures",
                      static_cast<long long>(trips), static_cast<long long>(failures)));
}

// ---------------------------------------------------------------------------
// 6: the red swap preserves the edge multiset and its output law matches the
// exact enumeration; conditional uniformity is exact per loop level.
bool criterion_6() {
    Params law_p = override_red_prefix(derive_params(3, 2, 3), 1);
    auto law = red_swap_law_test(law_p, 20000, kSeed);

    Params cond_p = override_red_prefix(derive_params(4, 3, 3), 1);
    auto cond = red_swap_conditional_uniformity(cond_p);

    bool ok = law.multiset_preserved && law.chi.p_value >= 0.01 && cond.all_uniform;
    return report(
        "criterion-06", ok,
        fmt("multiset preserved on all 20000 sampled swaps: %s; law chi-square on the "
            "%lld-sequence space p=%.4f (need >=0.01); exact per-level uniformity: %s",
            law.multiset_preserved ? "yes" : "NO", static_cast<long long>(90), law.chi.p_value,
            cond.all_uniform ? "exact" : "BROKEN"));
}

// ---------------------------------------------------------------------------
// 7: closed-form expectations within three empirical sigma at N = 1e5.
bool criterion_7() {
    auto w = moment_checks(derive_params(152, 6, 3), 100000, kSeed);
    const MomentRow* w_row = nullptr;
    for (const auto& row : w.rows) {
        if (row.name == "w_size") w_row = &row;
    }

    auto lx = moment_checks(derive_params(19, 3, 3), 100000, kSeed);
    const MomentRow* l_row = nullptr;
    for (const auto& row : lx.rows) {
        if (row.name == "lambda_x") l_row = &row;
    }

    auto phi = phi_checks(derive_params(19, 3, 3), 100000, kSeed);

    bool ok = w_row && w_row->ok && l_row && l_row->ok && phi.mean_ok;
    return report(
        "criterion-07", ok,
        fmt("E|W| at (152,6): mean %.4f vs %.4f (%s); E lambda(X) at (19,3): mean %.4f vs "
            "%.4f (%s); E phi at (19,3): mean %.4f vs %.4f (%s); all 3-sigma, N=100000",
            w_row ? w_row->mean : -1.0, w_row ? w_row->expected : -1.0,
            (w_row && w_row->ok) ? "ok" : "OFF", l_row ? l_row->mean : -1.0,
            l_row ? l_row->expected : -1.0, (l_row && l_row->ok) ? "ok" : "OFF", phi.mean,
            phi.expected, phi.mean_ok ? "ok" : "OFF"));
}

// ---------------------------------------------------------------------------
// 8: preimage counts equal M!(k!)^M for every simple k=3 instance with M<=4.
bool criterion_8() {
    bool ok = true;
    std::string detail;
    std::int64_t graphs_checked = 0;
    for (auto [n, d] : {std::pair<int, int>{3, 1}, {6, 1}, {9, 1}, {12, 1}, {6, 2}, {4, 3}}) {
        Params p = derive_params(n, d, 3);
        BigInt want = unfiltered_preimage_count(p);
        auto space = enumerate_regular(n, d, 3);
        for (const auto& g : space.instances) {
            auto pc = count_preimages(g, p, 2000000000LL);
            ++graphs_checked;
            if (pc.total != want) {
                ok = false;
                detail += fmt("(%d,%d) MISMATCH; ", n, d);
                break;
            }
        }
    }
    detail += fmt("%lld graphs across 6 instances, every preimage count equals M!(k!)^M",
                  static_cast<long long>(graphs_checked));
    return report("criterion-08", ok, detail);
}

// ---------------------------------------------------------------------------
// 9: embedding trend on the pinned grid. The constant C below is the best
// candidate from the calibration sweep in docs/embedding_trend.md: the
// joint frequency rises along the grid but tops out near 0.5 at n=4000,
// because the loop budget caps usable degrees at roughly sqrt(n) while the
// margin condition needs roughly 6.5 ln n — the window between the two is
// too thin below n ~ 10^5. The 0.9 clause therefore fails honestly here.
bool criterion_9() {
    constexpr double kPilotC = 6.5;  // argmax of the joint frequency sweep
    const int kTrials = 100;
    std::vector<int> grid{500, 1000, 2000, 4000};
    std::vector<double> freq;
    std::string table;
    for (int n : grid) {
        int d = static_cast<int>(std::ceil(kPilotC * std::log(n)));
        while ((static_cast<std::int64_t>(n) * d) % 3 != 0) ++d;  // keep k | nd
        Params p = derive_params(n, d, 3);
        int joint = 0;
        for (int t = 0; t < kTrials; ++t) {
            Rng rng = Rng::for_trial(kSeed, static_cast<std::uint64_t>(t) + 1000 * n);
            CoupledRun run = coupled_generate(p, rng);
            SimpleGraph hnm = extract_hnm(run, rng);
            if (run.event_a && run.event_b && check_embedding(hnm, run.y).embedded) ++joint;
        }
        freq.push_back(static_cast<double>(joint) / kTrials);
        table += fmt("n=%d d=%d: %.2f; ", n, d, freq.back());
    }
    bool nondecreasing = true;
    for (std::size_t i = 1; i < freq.size(); ++i) {
        nondecreasing = nondecreasing && freq[i] >= freq[i - 1];
    }
    bool target = freq.back() >= 0.9;
    bool ok = nondecreasing && target;
    return report("criterion-09", ok,
                  table + fmt("nondecreasing: %s; target >=0.9 at n=4000: %s "
                              "(C=%.1f; unattainable at desk scale, see docs/embedding_trend.md)",
                              nondecreasing ? "yes" : "no", target ? "met" : "NOT met", kPilotC));
}

// ---------------------------------------------------------------------------
// 10: phi tails against the martingale-style bound at (102,4), N = 1e5.
bool criterion_10() {
    Params p = derive_params(102, 4, 3);
    auto rep = phi_checks(p, 100000, kSeed);
    bool rows_ok = true;
    std::string rows;
    for (const auto& row : rep.tails) {
        if (row.sd_multiple < 2) continue;
        rows_ok = rows_ok && row.ok;
        rows += fmt("x=%.0fsd: emp %.4f <= bound %.3f + slack %.4f (%s); ", row.sd_multiple,
                    row.empirical, row.bound, row.slack, row.ok ? "ok" : "VIOLATED");
    }
    bool ok = rows_ok && rep.mean_ok;
    return report("criterion-10", ok,
                  rows + fmt("mean %.3f vs %.3f; note: the exponential bound is >= 1 "
                             "at this scale, so the check is directional only",
                             rep.mean, rep.expected));
}

// ---------------------------------------------------------------------------
// 11: the loose-cycle decider on planted and on disconnected instances.
bool criterion_11() {
    std::int64_t planted_found = 0, planted_valid = 0;
    std::int64_t none_correct = 0;

    // 20 planted cycles over k in {3,4}, n <= 18, shuffled labels, with
    // distractor edges layered on top.
    struct Plant {
        int k, l;
    };
    std::vector<Plant> plants;
    for (int i = 0; i < 14; ++i) plants.push_back({3, 3 + (i % 7)});   // n = 6..18
    for (int i = 0; i < 6; ++i) plants.push_back({4, 3 + (i % 4)});    // n = 9..18
    for (std::size_t idx = 0; idx < plants.size(); ++idx) {
        auto [k, l] = plants[idx];
        int n = l * (k - 1);
        Rng rng = Rng::for_trial(kSeed + 5, idx);
        std::vector<std::uint32_t> relabel(n);
        for (int v = 0; v < n; ++v) relabel[v] = static_cast<std::uint32_t>(v);
        for (int v = n - 1; v > 0; --v) {
            std::swap(relabel[v], relabel[rng.below(static_cast<std::uint64_t>(v + 1))]);
        }
        SimpleGraph g;
        g.n = n;
        g.k = k;
        for (int e = 0; e < l; ++e) {
            std::vector<std::uint32_t> edge;
            for (int j = 0; j < k; ++j) {
                edge.push_back(relabel[static_cast<std::size_t>((e * (k - 1) + j) % n)]);
            }
            g.edges.push_back(edge);
        }
        // Distractors: random proper edges not already present.
        std::set<std::vector<std::uint32_t>> present;
        for (auto e : g.edges) {
            std::sort(e.begin(), e.end());
            present.insert(e);
        }
        int added = 0;
        while (added < 2) {
            std::set<std::uint32_t> pick;
            while (static_cast<int>(pick.size()) < k) {
                pick.insert(static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(n))));
            }
            std::vector<std::uint32_t> edge(pick.begin(), pick.end());
            if (present.insert(edge).second) {
                g.edges.push_back(edge);
                ++added;
            }
        }
        g.canonicalize();
        auto cert = find_loose_hamilton(g);
        if (cert) {
            ++planted_found;
            if (validate_loose_hamilton(g, *cert)) ++planted_valid;
        }
    }

    // 20 disconnected regular instances; every one must come back empty.
    auto matchings6 = enumerate_regular(6, 1, 3);
    auto regulars6 = enumerate_regular(6, 2, 3);
    auto complete4 = enumerate_regular(4, 3, 3).instances.front();
    auto complete5 = enumerate_regular(5, 4, 4).instances.front();
    std::int64_t none_total = 0;
    auto disjoint_union = [](const SimpleGraph& a, const SimpleGraph& b) {
        SimpleGraph g;
        g.n = a.n + b.n;
        g.k = a.k;
        g.edges = a.edges;
        for (auto e : b.edges) {
            for (auto& v : e) v += static_cast<std::uint32_t>(a.n);
            g.edges.push_back(e);
        }
        g.canonicalize();
        return g;
    };
    std::vector<SimpleGraph> disconnected;
    for (int i = 0; i < 7; ++i) {  // two 2-regular components, n=12, l=6
        const auto& inst = regulars6.instances;
        disconnected.push_back(
            disjoint_union(inst[(7 * i) % inst.size()], inst[(11 * i + 3) % inst.size()]));
    }
    for (int i = 0; i < 6; ++i) {  // two matchings, n=12, d=1
        const auto& inst = matchings6.instances;
        disconnected.push_back(
            disjoint_union(inst[(3 * i) % inst.size()], inst[(5 * i + 1) % inst.size()]));
    }
    for (int i = 0; i < 4; ++i) {  // complete component + 2-regular component
        const auto& inst = regulars6.instances;
        disconnected.push_back(disjoint_union(complete4, inst[(13 * i + 2) % inst.size()]));
    }
    for (int i = 0; i < 3; ++i) {  // three complete 4-graph components, n=15, l=5
        disconnected.push_back(
            disjoint_union(complete5, disjoint_union(complete5, complete5)));
    }
    for (const auto& g : disconnected) {
        ++none_total;
        if (!find_loose_hamilton(g).has_value()) ++none_correct;
    }

    bool ok = planted_found == 20 && planted_valid == 20 && none_correct == none_total &&
              none_total == 20;
    return report("criterion-11", ok,
                  fmt("planted: %lld/20 found, %lld/20 certificates re-validate; "
                      "disconnected: %lld/%lld correctly refused",
                      static_cast<long long>(planted_found),
                      static_cast<long long>(planted_valid),
                      static_cast<long long>(none_correct), static_cast<long long>(none_total)));
}

}  // namespace

int main(int argc, char** argv) {
    std::string which = argc > 1 ? argv[1] : "all";
    bool ok = true;
    auto want = [&](const char* name) { return which == "all" || which == name; };

    if (want("1")) ok &= criterion_1();
    if (want("2")) ok &= criterion_2();
    if (want("extra")) ok &= criterion_extra();
    if (want("3")) ok &= criterion_3();
    if (want("4")) ok &= criterion_4();
    if (want("5")) ok &= criterion_5();
    if (want("6")) ok &= criterion_6();
    if (want("7")) ok &= criterion_7();
    if (want("8")) ok &= criterion_8();
    if (want("9")) ok &= criterion_9();
    if (want("10")) ok &= criterion_10();
    if (want("11")) ok &= criterion_11();

    return ok ? 0 : 1;
}

// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hyperswitch/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cassert>
#include <cmath>
#include <map>
#include <unordered_map>

#include "hyperswitch/coupling.hpp"
#include "hyperswitch/generate.hpp"
#include "hyperswitch/redswap.hpp"
#include "hyperswitch/sequence.hpp"
#include "hyperswitch/switching.hpp"
#include "json_detail.hpp"

namespace hsw {
namespace {

std::string entries_key(const std::vector<std::uint32_t>& entries) {
    return std::string(reinterpret_cast<const char*>(entries.data()),
                       entries.size() * sizeof(std::uint32_t));
}

// In the well-behaved family: no duplicate edges, only simple loops, loop
// count within budget. (Red prefix cleanliness is a separate question.)
bool well_behaved(const Params& p, const EdgeClassification& cls) {
    if (cls.has_duplicates()) return false;
    if (!p.loops_within_limit(cls.lambda)) return false;
    for (EdgeKind kind : cls.kinds)
        if (is_loop(kind) && kind != EdgeKind::simple_loop) return false;
    return true;
}

std::int64_t binom_small(std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
}

// Edge multiset of a sequence, canonical.
std::vector<std::vector<std::uint32_t>> edge_multiset(const Sequence& seq) {
    std::vector<std::vector<std::uint32_t>> edges;
    edges.reserve(static_cast<std::size_t>(seq.params.M));
    for (std::int64_t i = 0; i < seq.params.M; ++i) {
        auto e = seq.edge(i);
        std::vector<std::uint32_t> s(e.begin(), e.end());
        std::sort(s.begin(), s.end());
        edges.push_back(std::move(s));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

// Visits every t-subset of `pool` (ascending index combinations).
void for_each_combination(const std::vector<std::int64_t>& pool, std::int64_t t,
                          const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    std::vector<std::int64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(t));
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<std::int64_t>(chosen.size()) == t) {
            visit(chosen);
            return;
        }
        std::int64_t need = t - static_cast<std::int64_t>(chosen.size());
        for (std::size_t i = start; i + static_cast<std::size_t>(need) <= pool.size(); ++i) {
            chosen.push_back(pool[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

// The documented swap action: red loops ascending, chosen green targets
// ascending, block exchange per pair. Kept independent of swap_red_loops so
// the law tests do not reuse the code they are checking.
std::vector<std::uint32_t> swapped_entries(const Sequence& seq,
                                           const std::vector<std::int64_t>& red_loops,
                                           const std::vector<std::int64_t>& targets) {
    std::vector<std::uint32_t> out = seq.entries;
    std::int64_t k = seq.params.k;
    for (std::size_t i = 0; i < red_loops.size(); ++i)
        std::swap_ranges(out.begin() + red_loops[i] * k, out.begin() + (red_loops[i] + 1) * k,
                         out.begin() + targets[i] * k);
    return out;
}

struct SampleBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Uniform draw from the well-behaved family (optionally also requiring a
// clean red prefix) by rejection from the uniform sequence law.
Sequence draw_conditioned(const Params& p, Rng& rng, bool require_clean_red,
                          EdgeClassification* cls_out) {
    for (std::int64_t attempt = 0; attempt < 1000000; ++attempt) {
        Sequence seq = sample_regular(p, rng);
        EdgeClassification cls = classify_edges(seq);
        if (!well_behaved(p, cls)) continue;
        if (require_clean_red && !cls.red_loop_indices.empty()) continue;
        if (cls_out) *cls_out = std::move(cls);
        return seq;
    }
    throw SampleBudgetError("conditioned draw: rejection budget exhausted");
}

}  // namespace

double chi_square_p_value(double statistic, std::int64_t df) {
    if (df < 1) throw std::invalid_argument("chi-square needs at least one degree of freedom");
    boost::math::chi_squared_distribution<double> dist(static_cast<double>(df));
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

ChiSquareReport pearson_test(const std::vector<std::int64_t>& observed,
                             const std::vector<Rational>& expected, std::uint64_t seed) {
    if (observed.size() != expected.size())
        throw std::invalid_argument("observed/expected class count mismatch");
    std::int64_t trials = 0;
    for (std::int64_t o : observed) trials += o;
    Rational total = 0;
    std::int64_t positive = 0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (expected[i] < 0) throw std::invalid_argument("negative expected probability");
        if (expected[i] == 0) {
            if (observed[i] != 0)
                throw UnknownInstanceError("observation in a zero-probability class");
            continue;
        }
        ++positive;
        total += expected[i];
    }
    if (total != 1) throw std::invalid_argument("expected probabilities must sum to 1");
    if (positive < 2) throw std::invalid_argument("need at least two classes");
    if (trials < 10 * positive)
        throw std::invalid_argument("sample size below the chi-square validity floor");

    double stat = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (expected[i] == 0) continue;
        double e = to_double(expected[i]) * static_cast<double>(trials);
        double diff = static_cast<double>(observed[i]) - e;
        stat += diff * diff / e;
    }
    ChiSquareReport rep;
    rep.classes = positive;
    rep.trials = trials;
    rep.statistic = stat;
    rep.df = positive - 1;
    rep.p_value = chi_square_p_value(stat, rep.df);
    rep.seed = seed;
    return rep;
}

ChiSquareReport uniformity_test(const GraphSampler& sampler, const EnumerationResult& space,
                                std::int64_t N, std::uint64_t seed) {
    if (space.instances.empty()) throw std::invalid_argument("empty reference space");
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(space.instances.size());
    for (std::size_t i = 0; i < space.instances.size(); ++i)
        index.emplace(space.instances[i].key(), i);

    std::vector<std::int64_t> observed(space.instances.size(), 0);
    for (std::int64_t t = 0; t < N; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        SimpleGraph g = sampler(rng);
        g.canonicalize();
        auto it = index.find(g.key());
        if (it == index.end())
            throw UnknownInstanceError("sampler produced a graph outside the enumerated space");
        ++observed[it->second];
    }
    std::vector<Rational> expected(space.instances.size(),
                                   Rational(1, static_cast<std::int64_t>(space.instances.size())));
    return pearson_test(observed, expected, seed);
}

SimpleGraph exact_uniform_reference(const EnumerationResult& space, Rng& rng) {
    return space.instances[static_cast<std::size_t>(
        rng.below(static_cast<std::uint64_t>(space.instances.size())))];
}

SimpleGraph biased_sample_regular_graph(const Params& p, Rng& rng) {
    for (std::int64_t attempt = 0; attempt < 1000000; ++attempt) {
        EdgeClassification cls;
        Sequence seq = draw_conditioned(p, rng, /*require_clean_red=*/true, &cls);
        bool stuck = false;
        while (!stuck) {
            cls = classify_edges(seq);
            if (cls.lambda == 0) break;
            // Deterministic repair: first admissible move in lexicographic
            // order. This is the deliberate bias.
            bool applied = false;
            for (std::size_t li = 0; li < cls.kinds.size() && !applied; ++li) {
                if (cls.kinds[li] != EdgeKind::simple_loop) continue;
                for (std::int64_t e1 : cls.green_proper_indices) {
                    for (std::int64_t e2 : cls.green_proper_indices) {
                        if (e1 == e2) continue;
                        for (std::int32_t y = 0; y < p.k && !applied; ++y)
                            for (std::int32_t z = 0; z < p.k && !applied; ++z) {
                                Switching sw{static_cast<std::int64_t>(li), e1, e2, y, z};
                                if (is_admissible_forward(seq, sw)) {
                                    apply_forward_inplace(seq, sw);
                                    applied = true;
                                }
                            }
                        if (applied) break;
                    }
                    if (applied) break;
                }
            }
            if (!applied) stuck = true;  // no admissible move: resample
        }
        if (!stuck) return graph_of_sequence(seq);
    }
    throw SampleBudgetError("biased sampler: rejection budget exhausted");
}

TrialReport event_frequencies(const Params& p, std::int64_t N, std::uint64_t seed) {
    TrialReport rep;
    rep.n = p.n;
    rep.d = p.d;
    rep.k = p.k;
    rep.trials = N;
    rep.seed = seed;
    rep.lambda_y_histogram.assign(17, 0);
    Rational ephi = expected_phi(p);

    for (std::int64_t t = 0; t < N; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        CoupledRun run = coupled_generate(p, rng);

        EdgeClassification cx = classify_edges(run.x);
        if (cx.has_duplicates()) ++rep.x_with_duplicate_edges;
        if (p.loops_within_limit(cx.lambda)) ++rep.x_loops_within_budget;

        EdgeClassification cy = classify_edges(run.y);
        if (cy.has_duplicates()) ++rep.y_with_duplicate_edges;
        bool bad_shape = false;
        for (EdgeKind kind : cy.kinds)
            if (is_loop(kind) && kind != EdgeKind::simple_loop) bad_shape = true;
        if (bad_shape) ++rep.y_with_bad_loop_shape;
        if (!p.loops_within_limit(cy.lambda)) ++rep.y_loops_over_budget;
        if (cy.lambda < 17)
            ++rep.lambda_y_histogram[static_cast<std::size_t>(cy.lambda)];
        else
            ++rep.lambda_y_overflow;

        bool in_E = !cy.has_duplicates() && !bad_shape && p.loops_within_limit(cy.lambda);
        if (in_E) {
            ++rep.y_in_E;
            try {
                auto [yprime, record] = swap_red_loops(run.y, cy, rng);
                if (!membership(yprime, ephi).in_tilde_S) ++rep.yprime_outside_band;
            } catch (const InsufficientGreenProper&) {
                ++rep.swap_failures;
            }
        }

        if (run.event_a) ++rep.event_a;
        if (run.event_b) ++rep.event_b;
        SimpleGraph hnm = extract_hnm(run, rng);
        if (check_embedding(hnm, run.y).embedded) ++rep.embedded;
    }
    return rep;
}

PhiReport phi_checks(const Params& p, std::int64_t N, std::uint64_t seed) {
    PhiReport rep;
    rep.trials = N;
    rep.seed = seed;
    Rational ephi = expected_phi(p);
    rep.expected = to_double(ephi);

    std::vector<std::int64_t> phis(static_cast<std::size_t>(N));
    for (std::int64_t t = 0; t < N; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        Sequence y = sample_regular(p, rng);
        phis[static_cast<std::size_t>(t)] = compute_phi(y);
    }
    long double sum = 0, sumsq = 0;
    for (std::int64_t v : phis) {
        sum += static_cast<long double>(v);
        sumsq += static_cast<long double>(v) * static_cast<long double>(v);
    }
    double mean = static_cast<double>(sum / static_cast<long double>(N));
    double var =
        N > 1 ? static_cast<double>((sumsq - sum * sum / static_cast<long double>(N)) /
                                    static_cast<long double>(N - 1))
              : 0.0;
    rep.mean = mean;
    rep.sd = var > 0 ? std::sqrt(var) : 0.0;

    if (rep.sd == 0.0) {
        rep.mean_ok = std::abs(mean - rep.expected) < 1e-12;
        rep.tails_ok = true;  // required tail rows are vacuous at zero spread
        return rep;
    }
    rep.mean_ok = std::abs(mean - rep.expected) <= 3.0 * rep.sd / std::sqrt(static_cast<double>(N));

    double denom = 8.0 * static_cast<double>(p.n) * std::pow(static_cast<double>(p.d), 3.0);
    rep.tails_ok = true;
    for (int mult = 1; mult <= 4; ++mult) {
        TailRow row;
        row.sd_multiple = mult;
        row.x = mult * rep.sd;
        std::int64_t hits = 0;
        for (std::int64_t v : phis)
            if (std::abs(static_cast<double>(v) - rep.expected) >= row.x) ++hits;
        row.empirical = static_cast<double>(hits) / static_cast<double>(N);
        row.bound = std::min(1.0, 2.0 * std::exp(-row.x * row.x / denom));
        row.slack =
            3.0 * std::sqrt(std::max(row.empirical * (1.0 - row.empirical), 0.0) /
                            static_cast<double>(N));
        row.ok = row.empirical <= row.bound + row.slack + 1e-12;
        if (mult >= 2 && !row.ok) rep.tails_ok = false;
        rep.tails.push_back(row);
    }
    return rep;
}

MomentsReport moment_checks(const Params& p, std::int64_t N, std::uint64_t seed) {
    MomentsReport rep;
    rep.trials = N;
    rep.seed = seed;

    long double w_sum = 0, w_sumsq = 0, lx_sum = 0, lx_sumsq = 0;
    for (std::int64_t t = 0; t < N; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        CoupledRun run = coupled_generate(p, rng);
        auto w = static_cast<long double>(run.w_indices.size());
        w_sum += w;
        w_sumsq += w * w;
        auto lx = static_cast<long double>(classify_edges(run.x).lambda);
        lx_sum += lx;
        lx_sumsq += lx * lx;
    }

    auto make_row = [&](const std::string& name, long double sum, long double sumsq,
                        const Rational& expected) {
        MomentRow row;
        row.name = name;
        row.mean = static_cast<double>(sum / static_cast<long double>(N));
        double var =
            N > 1 ? static_cast<double>((sumsq - sum * sum / static_cast<long double>(N)) /
                                        static_cast<long double>(N - 1))
                  : 0.0;
        row.sd = var > 0 ? std::sqrt(var) : 0.0;
        row.expected = to_double(expected);
        if (row.sd == 0.0)
            row.ok = std::abs(row.mean - row.expected) < 1e-12;
        else
            row.ok = std::abs(row.mean - row.expected) <=
                     3.0 * row.sd / std::sqrt(static_cast<double>(N));
        return row;
    };

    // E|W| = (1 + 2^-k) m.
    Rational w_expected = Rational(p.m) * Rational((std::int64_t{1} << p.k) + 1,
                                                   std::int64_t{1} << p.k);
    // E lambda(X) = M (1 - (n)_k / n^k).
    Rational proper = 1;
    for (std::int64_t i = 0; i < p.k; ++i) proper *= Rational(p.n - i, p.n);
    Rational lx_expected = Rational(p.M) * (Rational(1) - proper);

    rep.rows.push_back(make_row("w_size", w_sum, w_sumsq, w_expected));
    rep.rows.push_back(make_row("lambda_x", lx_sum, lx_sumsq, lx_expected));
    rep.all_ok = true;
    for (const auto& row : rep.rows) rep.all_ok = rep.all_ok && row.ok;
    return rep;
}

FbAuditReport fb_audit(const Params& p, std::int64_t N, std::uint64_t seed) {
    FbAuditReport rep;
    rep.samples = N;
    rep.seed = seed;
    long double f_ratio_sum = 0, b_ratio_sum = 0;

    for (std::int64_t t = 0; t < N; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        Sequence yprime;
        for (;;) {
            EdgeClassification cls;
            Sequence y = draw_conditioned(p, rng, /*require_clean_red=*/false, &cls);
            if (static_cast<std::int64_t>(cls.red_loop_indices.size()) >
                static_cast<std::int64_t>(cls.green_proper_indices.size()))
                continue;
            yprime = swap_red_loops(y, cls, rng).first;
            break;
        }
        EdgeClassification cls = classify_edges(yprime);
        auto [f, b] = count_forward_backward(yprime, cls);
        std::int64_t phi = compute_phi(yprime);

        BigInt f_bound = forward_upper_bound(p, cls.lambda);
        BigInt b_bound = backward_upper_bound(p, phi);
        if (BigInt(f) > f_bound) ++rep.forward_violations;
        if (BigInt(b) > b_bound) ++rep.backward_violations;
        if (f_bound > 0) {
            double ratio = static_cast<double>(f) / f_bound.convert_to<double>();
            ++rep.f_ratio_rows;
            f_ratio_sum += ratio;
            rep.max_f_ratio = std::max(rep.max_f_ratio, ratio);
        }
        if (b_bound > 0) {
            double ratio = static_cast<double>(b) / b_bound.convert_to<double>();
            ++rep.b_ratio_rows;
            b_ratio_sum += ratio;
            rep.max_b_ratio = std::max(rep.max_b_ratio, ratio);
        }
    }
    if (rep.f_ratio_rows > 0)
        rep.mean_f_ratio = static_cast<double>(f_ratio_sum / rep.f_ratio_rows);
    if (rep.b_ratio_rows > 0)
        rep.mean_b_ratio = static_cast<double>(b_ratio_sum / rep.b_ratio_rows);
    return rep;
}

DoubleCountReport double_count_check(const Params& p, std::int64_t size_budget) {
    DoubleCountReport rep;
    rep.space_size = sequence_space_size(p);
    std::vector<LevelCount> levels;

    for_each_sequence(
        p,
        [&](const Sequence& seq) {
            EdgeClassification cls = classify_edges(seq);
            if (!well_behaved(p, cls)) return;
            if (!cls.red_loop_indices.empty()) return;
            ++rep.in_domain;
            auto l = static_cast<std::size_t>(cls.lambda);
            if (levels.size() <= l) levels.resize(l + 1);
            ++levels[l].members;
            auto [f, b] = count_forward_backward(seq, cls);
            levels[l].sum_forward += f;
            levels[l].sum_backward += b;
        },
        size_budget);

    for (std::size_t l = 0; l < levels.size(); ++l)
        levels[l].level = static_cast<std::int64_t>(l);
    rep.identities_hold = true;
    if (!levels.empty() && levels[0].sum_forward != 0) rep.identities_hold = false;
    for (std::size_t l = 1; l < levels.size(); ++l)
        if (levels[l].sum_forward != levels[l - 1].sum_backward) rep.identities_hold = false;
    if (!levels.empty() && levels.back().sum_backward != 0) rep.identities_hold = false;
    rep.levels = std::move(levels);
    return rep;
}

SwapLawReport red_swap_law_test(const Params& p, std::int64_t N, std::uint64_t seed,
                                std::int64_t size_budget) {
    SwapLawReport rep;
    std::map<std::string, Rational> law;
    std::int64_t domain = 0;

    for_each_sequence(
        p,
        [&](const Sequence& seq) {
            EdgeClassification cls = classify_edges(seq);
            auto t = static_cast<std::int64_t>(cls.red_loop_indices.size());
            auto g = static_cast<std::int64_t>(cls.green_proper_indices.size());
            if (t > g) return;
            ++domain;
            std::int64_t choices = binom_small(g, t);
            for_each_combination(cls.green_proper_indices, t,
                                 [&](const std::vector<std::int64_t>& targets) {
                                     law[entries_key(swapped_entries(seq, cls.red_loop_indices,
                                                                     targets))] +=
                                         Rational(1, choices);
                                 });
        },
        size_budget);
    for (auto& [key, mass] : law) mass /= domain;
    rep.domain_size = domain;
    rep.support = static_cast<std::int64_t>(law.size());

    std::unordered_map<std::string, std::size_t> index;
    index.reserve(law.size());
    std::vector<Rational> expected;
    expected.reserve(law.size());
    for (const auto& [key, mass] : law) {
        index.emplace(key, expected.size());
        expected.push_back(mass);
    }

    std::vector<std::int64_t> observed(expected.size(), 0);
    rep.multiset_preserved = true;
    for (std::int64_t t = 0; t < N; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        for (std::int64_t attempt = 0;; ++attempt) {
            if (attempt >= 1000000)
                throw SampleBudgetError("swap law test: rejection budget exhausted");
            Sequence y = sample_regular(p, rng);
            EdgeClassification cls = classify_edges(y);
            if (static_cast<std::int64_t>(cls.red_loop_indices.size()) >
                static_cast<std::int64_t>(cls.green_proper_indices.size()))
                continue;
            auto [z, record] = swap_red_loops(y, cls, rng);
            if (edge_multiset(z) != edge_multiset(y)) rep.multiset_preserved = false;
            auto it = index.find(entries_key(z.entries));
            if (it == index.end())
                throw UnknownInstanceError("swap output outside the enumerated law support");
            ++observed[it->second];
            break;
        }
    }
    rep.chi = pearson_test(observed, expected, seed);
    return rep;
}

SwapUniformityReport red_swap_conditional_uniformity(const Params& p, std::int64_t size_budget) {
    SwapUniformityReport rep;
    struct MassEntry {
        Rational mass;
        std::int64_t level = 0;
    };
    std::map<std::string, MassEntry> law;
    std::vector<std::int64_t> members;  // sequences with clean red prefix, per level

    for_each_sequence(
        p,
        [&](const Sequence& seq) {
            EdgeClassification cls = classify_edges(seq);
            if (!well_behaved(p, cls)) return;
            auto t = static_cast<std::int64_t>(cls.red_loop_indices.size());
            auto g = static_cast<std::int64_t>(cls.green_proper_indices.size());
            auto l = static_cast<std::size_t>(cls.lambda);
            if (t == 0) {
                if (members.size() <= l) members.resize(l + 1, 0);
                ++members[l];
            }
            if (t > g) return;
            ++rep.conditioned_inputs;
            std::int64_t choices = binom_small(g, t);
            for_each_combination(
                cls.green_proper_indices, t, [&](const std::vector<std::int64_t>& targets) {
                    auto& entry =
                        law[entries_key(swapped_entries(seq, cls.red_loop_indices, targets))];
                    entry.mass += Rational(1, choices);
                    entry.level = cls.lambda;  // swaps preserve the edge multiset
                });
        },
        size_budget);

    std::size_t level_count = members.size();
    for (const auto& [key, entry] : law)
        level_count = std::max(level_count, static_cast<std::size_t>(entry.level) + 1);
    std::vector<SwapUniformityLevel> levels(level_count);
    std::vector<Rational> level_mass(level_count, Rational(-1));
    for (std::size_t l = 0; l < level_count; ++l) {
        levels[l].level = static_cast<std::int64_t>(l);
        levels[l].members = l < members.size() ? members[l] : 0;
        levels[l].uniform = true;
    }
    for (const auto& [key, entry] : law) {
        auto l = static_cast<std::size_t>(entry.level);
        ++levels[l].support;
        if (level_mass[l] < 0)
            level_mass[l] = entry.mass;
        else if (level_mass[l] != entry.mass)
            levels[l].uniform = false;
    }
    rep.all_uniform = true;
    for (auto& lev : levels) {
        // Uniform on the level also means the support covers every member.
        if (lev.support != lev.members) lev.uniform = false;
        if (lev.members > 0 && !lev.uniform) rep.all_uniform = false;
    }
    rep.levels = std::move(levels);
    return rep;
}

// ---------------------------------------------------------------------------
// JSON rendering

std::string ChiSquareReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "hyperswitch-chisquare-v1";
    j["classes"] = classes;
    j["trials"] = trials;
    j["statistic"] = statistic;
    j["df"] = df;
    j["p_value"] = p_value;
    j["seed"] = seed;
    return j.dump(2);
}

std::string TrialReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "hyperswitch-trials-v1";
    j["n"] = n;
    j["d"] = d;
    j["k"] = k;
    j["trials"] = trials;
    j["seed"] = seed;
    j["x_with_duplicate_edges"] = x_with_duplicate_edges;
    j["x_loops_within_budget"] = x_loops_within_budget;
    j["y_in_E"] = y_in_E;
    j["y_with_duplicate_edges"] = y_with_duplicate_edges;
    j["y_with_bad_loop_shape"] = y_with_bad_loop_shape;
    j["y_loops_over_budget"] = y_loops_over_budget;
    j["yprime_outside_band"] = yprime_outside_band;
    j["swap_failures"] = swap_failures;
    j["event_a"] = event_a;
    j["event_b"] = event_b;
    j["embedded"] = embedded;
    j["lambda_y_histogram"] = lambda_y_histogram;
    j["lambda_y_overflow"] = lambda_y_overflow;
    return j.dump(2);
}

std::string PhiReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "hyperswitch-phi-v1";
    j["trials"] = trials;
    j["seed"] = seed;
    j["mean"] = mean;
    j["expected"] = expected;
    j["sd"] = sd;
    j["mean_ok"] = mean_ok;
    j["tails_ok"] = tails_ok;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : tails) {
        rows.push_back({{"x", row.x},
                        {"sd_multiple", row.sd_multiple},
                        {"empirical", row.empirical},
                        {"bound", row.bound},
                        {"slack", row.slack},
                        {"ok", row.ok}});
    }
    j["tails"] = rows;
    return j.dump(2);
}

std::string MomentsReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "hyperswitch-moments-v1";
    j["trials"] = trials;
    j["seed"] = seed;
    j["all_ok"] = all_ok;
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        out.push_back({{"name", row.name},
                       {"mean", row.mean},
                       {"expected", row.expected},
                       {"sd", row.sd},
                       {"ok", row.ok}});
    }
    j["rows"] = out;
    return j.dump(2);
}

std::string FbAuditReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "hyperswitch-fbaudit-v1";
    j["samples"] = samples;
    j["seed"] = seed;
    j["forward_violations"] = forward_violations;
    j["backward_violations"] = backward_violations;
    j["f_ratio_rows"] = f_ratio_rows;
    j["b_ratio_rows"] = b_ratio_rows;
    j["mean_f_ratio"] = mean_f_ratio;
    j["mean_b_ratio"] = mean_b_ratio;
    j["max_f_ratio"] = max_f_ratio;
    j["max_b_ratio"] = max_b_ratio;
    return j.dump(2);
}

std::string DoubleCountReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "hyperswitch-doublecount-v1";
    j["space_size"] = space_size.str();
    j["in_domain"] = in_domain;
    j["identities_hold"] = identities_hold;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& lev : levels) {
        rows.push_back({{"level", lev.level},
                        {"members", lev.members},
                        {"sum_forward", lev.sum_forward},
                        {"sum_backward", lev.sum_backward}});
    }
    j["levels"] = rows;
    return j.dump(2);
}

std::string SwapLawReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "hyperswitch-swaplaw-v1";
    j["chi"] = nlohmann::json::parse(chi.to_json());
    j["domain_size"] = domain_size;
    j["support"] = support;
    j["multiset_preserved"] = multiset_preserved;
    return j.dump(2);
}

std::string SwapUniformityReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "hyperswitch-swapuniformity-v1";
    j["conditioned_inputs"] = conditioned_inputs;
    j["all_uniform"] = all_uniform;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& lev : levels) {
        rows.push_back({{"level", lev.level},
                        {"members", lev.members},
                        {"support", lev.support},
                        {"uniform", lev.uniform}});
    }
    j["levels"] = rows;
    return j.dump(2);
}

}  // namespace hsw

// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo harness: chi-square uniformity tests against enumerated
// spaces, event-frequency reports, expectation and concentration checks,
// and exact double-counting audits of the switching counts. Every report
// is a deterministic function of (params, N, seed); trials draw their
// randomness from per-trial streams so results do not depend on execution
// order.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperswitch/graph.hpp"
#include "hyperswitch/numeric.hpp"
#include "hyperswitch/oracle.hpp"
#include "hyperswitch/params.hpp"
#include "hyperswitch/rng.hpp"

namespace hsw {

// A sampler produced an object outside the enumerated reference space;
// that is a correctness bug in the sampler, not a statistical fluke.
struct UnknownInstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ChiSquareReport {
    std::int64_t classes = 0;  // classes with positive expected mass
    std::int64_t trials = 0;
    double statistic = 0.0;
    std::int64_t df = 0;
    double p_value = 0.0;
    std::uint64_t seed = 0;
    std::string to_json() const;
};

// Upper tail of the chi-squared distribution with df degrees of freedom.
double chi_square_p_value(double statistic, std::int64_t df);

// Pearson goodness-of-fit of observed counts against exact expected class
// probabilities (which must sum to 1). Throws UnknownInstanceError if a
// zero-probability class was observed, std::invalid_argument if the trial
// count is below the validity floor of 10 per class.
ChiSquareReport pearson_test(const std::vector<std::int64_t>& observed,
                             const std::vector<Rational>& expected, std::uint64_t seed);

using GraphSampler = std::function<SimpleGraph(Rng&)>;

// Draws N graphs (trial i from stream Rng::for_trial(seed, i)), bins them
// by instance, and tests against the uniform law on the space.
ChiSquareReport uniformity_test(const GraphSampler& sampler, const EnumerationResult& space,
                                std::int64_t N, std::uint64_t seed);

// Uniform pick from an enumerated space: the null hypothesis by construction.
SimpleGraph exact_uniform_reference(const EnumerationResult& space, Rng& rng);

// Deliberately wrong sampler for negative controls: draws a uniform
// degree-constrained sequence conditioned on the well-behaved-loop family,
// then removes loops with the lexicographically first admissible switching
// instead of a uniformly random one. The deterministic repair concentrates
// the output distribution and a power-enough chi-square must reject it.
SimpleGraph biased_sample_regular_graph(const Params& p, Rng& rng);

struct TrialReport {
    std::int64_t n = 0, d = 0, k = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::int64_t x_with_duplicate_edges = 0;
    std::int64_t x_loops_within_budget = 0;
    std::int64_t y_in_E = 0;
    std::int64_t y_with_duplicate_edges = 0;
    std::int64_t y_with_bad_loop_shape = 0;  // a loop that is not simple
    std::int64_t y_loops_over_budget = 0;
    std::int64_t yprime_outside_band = 0;  // among trials with Y in E
    std::int64_t swap_failures = 0;        // among trials with Y in E
    std::int64_t event_a = 0;
    std::int64_t event_b = 0;
    std::int64_t embedded = 0;
    std::vector<std::int64_t> lambda_y_histogram;  // [0..16], then overflow
    std::int64_t lambda_y_overflow = 0;
    std::string to_json() const;
};

// One coupled generation per trial; counts every conditioning event the
// pipeline can reject on, plus the coupling events and embedding outcome.
TrialReport event_frequencies(const Params& p, std::int64_t N, std::uint64_t seed);

struct TailRow {
    double x = 0.0;          // threshold, in absolute phi units
    double sd_multiple = 0;  // x / empirical sd
    double empirical = 0.0;  // P(|phi - E phi| >= x)
    double bound = 0.0;      // 2 exp(-x^2 / (8 n d^3)), clamped to 1
    double slack = 0.0;      // 3 binomial sigma of the empirical frequency
    bool ok = false;         // empirical <= bound + slack
};

struct PhiReport {
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    double expected = 0.0;  // exact rational, rendered
    double sd = 0.0;        // empirical
    bool mean_ok = false;   // |mean - expected| <= 3 sd / sqrt(N)
    std::vector<TailRow> tails;  // at 1,2,3,4 empirical sd
    bool tails_ok = false;       // rows at 2,3,4 sd
    std::string to_json() const;
};

// phi of the uniform degree-constrained sequence: mean against the exact
// expectation and tail mass against the concentration bound.
PhiReport phi_checks(const Params& p, std::int64_t N, std::uint64_t seed);

struct MomentRow {
    std::string name;
    double mean = 0.0;
    double expected = 0.0;
    double sd = 0.0;
    bool ok = false;  // |mean - expected| <= 3 sd / sqrt(N)
};

struct MomentsReport {
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<MomentRow> rows;
    bool all_ok = false;
    std::string to_json() const;
};

// Closed-form expectations under the coupled generation: |W| against
// (1 + 2^-k) m and the loop count of the independent-entry sequence against
// M (1 - (n)_k / n^k).
MomentsReport moment_checks(const Params& p, std::int64_t N, std::uint64_t seed);

struct FbAuditReport {
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    std::int64_t forward_violations = 0;
    std::int64_t backward_violations = 0;
    std::int64_t f_ratio_rows = 0;  // samples with a positive forward bound
    std::int64_t b_ratio_rows = 0;
    double mean_f_ratio = 0.0;  // count / bound
    double mean_b_ratio = 0.0;
    double max_f_ratio = 0.0;
    double max_b_ratio = 0.0;
    std::string to_json() const;
};

// Samples conditioned red-swapped sequences and checks the exact forward
// and backward counts against their hard combinatorial ceilings.
FbAuditReport fb_audit(const Params& p, std::int64_t N, std::uint64_t seed);

struct LevelCount {
    std::int64_t level = 0;
    std::int64_t members = 0;       // sequences at this loop level
    std::int64_t sum_forward = 0;   // sum of forward counts over the level
    std::int64_t sum_backward = 0;  // sum of backward counts over the level
};

struct DoubleCountReport {
    BigInt space_size;
    std::int64_t in_domain = 0;  // no duplicates, simple loops, within budget, red prefix clean
    std::vector<LevelCount> levels;
    bool identities_hold = false;  // sum_forward[l] == sum_backward[l-1] for every l >= 1
    std::string to_json() const;
};

// Exhaustive over the sequence space: the forward count summed over level l
// must equal the backward count summed over level l-1, exactly.
DoubleCountReport double_count_check(const Params& p, std::int64_t size_budget = 100000000);

struct SwapLawReport {
    ChiSquareReport chi;
    std::int64_t domain_size = 0;      // inputs the swap accepts
    std::int64_t support = 0;          // distinct outputs with positive mass
    bool multiset_preserved = false;   // edge multiset equal on every sampled trial
    std::string to_json() const;
};

// Enumerates the exact output law of the red swap (uniform input over the
// sequences it accepts) and tests N sampled swaps against it.
SwapLawReport red_swap_law_test(const Params& p, std::int64_t N, std::uint64_t seed,
                                std::int64_t size_budget = 100000000);

struct SwapUniformityLevel {
    std::int64_t level = 0;
    std::int64_t members = 0;  // sequences with clean red prefix at this level
    std::int64_t support = 0;  // of those, reachable as swap outputs
    bool uniform = false;      // exact: every member carries identical mass
};

struct SwapUniformityReport {
    std::int64_t conditioned_inputs = 0;  // inputs in the well-behaved family
    std::vector<SwapUniformityLevel> levels;
    bool all_uniform = false;
    std::string to_json() const;
};

// Exact pushforward of the red swap over a full enumeration, input uniform
// over the well-behaved-loop family: within every loop level of the output
// the law must be exactly flat. No sampling involved.
SwapUniformityReport red_swap_conditional_uniformity(const Params& p,
                                                     std::int64_t size_budget = 100000000);

}  // namespace hsw

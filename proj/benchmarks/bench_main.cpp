// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: sequence generation, the coupled
// generator, edge classification, switching counts, and loop elimination.
// The instance (n=999, d=10, k=3) is large enough that per-step costs
// dominate startup noise while every benchmark still runs in milliseconds.

#include <benchmark/benchmark.h>

#include "hyperswitch/coupling.hpp"
#include "hyperswitch/params.hpp"
#include "hyperswitch/pipeline.hpp"
#include "hyperswitch/rng.hpp"
#include "hyperswitch/sequence.hpp"
#include "hyperswitch/switching.hpp"

namespace {

using namespace hsw;

Params bench_params() { return derive_params(999, 10, 3); }

// A sequence in the well-behaved-loop family with at least one loop, so
// the elimination benchmarks always have work to do.
Sequence conditioned_input(const Params& p, Rng& rng) {
    for (;;) {
        Sequence s = sample_regular(p, rng);
        auto cls = classify_edges(s);
        if (cls.has_duplicates() || !cls.red_loop_indices.empty()) continue;
        bool simple = true;
        for (auto k : cls.kinds) {
            if (k == EdgeKind::loop_triple || k == EdgeKind::loop_two_pairs) simple = false;
        }
        if (!simple || cls.lambda == 0 || !p.loops_within_limit(cls.lambda)) continue;
        return s;
    }
}

void BM_SampleRegular(benchmark::State& state) {
    Params p = bench_params();
    Rng rng(7);
    for (auto _ : state) {
        Sequence s = sample_regular(p, rng);
        benchmark::DoNotOptimize(s.entries.data());
    }
    state.SetItemsProcessed(state.iterations() * p.seq_len());
}
BENCHMARK(BM_SampleRegular);

void BM_CoupledGenerate(benchmark::State& state) {
    Params p = bench_params();
    Rng rng(7);
    for (auto _ : state) {
        CoupledRun run = coupled_generate(p, rng);
        benchmark::DoNotOptimize(run.y.entries.data());
    }
    state.SetItemsProcessed(state.iterations() * p.seq_len());
}
BENCHMARK(BM_CoupledGenerate);

void BM_ClassifyEdges(benchmark::State& state) {
    Params p = bench_params();
    Rng rng(7);
    Sequence s = sample_regular(p, rng);
    for (auto _ : state) {
        auto cls = classify_edges(s);
        benchmark::DoNotOptimize(cls.lambda);
    }
    state.SetItemsProcessed(state.iterations() * p.M);
}
BENCHMARK(BM_ClassifyEdges);

void BM_ComputePhi(benchmark::State& state) {
    Params p = bench_params();
    Rng rng(7);
    Sequence s = sample_regular(p, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_phi(s));
    }
}
BENCHMARK(BM_ComputePhi);

void BM_CountForwardBackward(benchmark::State& state) {
    // Exhaustive counting is quadratic in the number of proper edges, so it
    // is benchmarked at the audit scale it actually runs at, not at the
    // generation scale above.
    Params p = derive_params(60, 4, 3);
    Rng rng(7);
    Sequence s = conditioned_input(p, rng);
    auto cls = classify_edges(s);
    for (auto _ : state) {
        auto [f, b] = count_forward_backward(s, cls);
        benchmark::DoNotOptimize(f + b);
    }
}
BENCHMARK(BM_CountForwardBackward);

void BM_EliminateLoops(benchmark::State& state) {
    Params p = bench_params();
    Rng rng(7);
    // A rotating pool keeps the timed region free of rejection sampling.
    std::vector<Sequence> pool;
    for (int i = 0; i < 16; ++i) pool.push_back(conditioned_input(p, rng));
    std::size_t next = 0;
    for (auto _ : state) {
        auto [out, trace] = eliminate_loops(pool[next], rng);
        benchmark::DoNotOptimize(out.entries.data());
        benchmark::DoNotOptimize(trace.steps.size());
        next = (next + 1) % pool.size();
    }
}
BENCHMARK(BM_EliminateLoops);

void BM_PipelineSingleShot(benchmark::State& state) {
    Params p = bench_params();
    Rng rng(7);
    for (auto _ : state) {
        auto res = run_pipeline(p, rng, PipelineMode::single_shot);
        benchmark::DoNotOptimize(res.status);
    }
}
BENCHMARK(BM_PipelineSingleShot);

}  // namespace

BENCHMARK_MAIN();

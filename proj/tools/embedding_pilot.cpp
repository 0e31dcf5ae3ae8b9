// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Calibration sweep behind docs/embedding_trend.md: measures the component
// frequencies of the joint embedding event over a grid of degree constants.
//
//   embedding_pilot trend   — C x n grid, 100 trials per cell (the sweep the
//                             acceptance harness' constant was picked from)
//   embedding_pilot scissor — holds n fixed and walks d upward to show the
//                             two component events moving in opposite
//                             directions
//
// Output is a markdown table on stdout.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "hyperswitch/coupling.hpp"
#include "hyperswitch/params.hpp"
#include "hyperswitch/rng.hpp"

using namespace hsw;

namespace {

struct CellStats {
    double pa = 0, pb = 0, joint = 0;
};

CellStats run_cell(std::int64_t n, std::int64_t d, int trials, std::uint64_t seed) {
    Params p = derive_params(n, d, 3);
    int a = 0, b = 0, j = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t) + 1000 * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(d));
        CoupledRun run = coupled_generate(p, rng);
        a += run.event_a;
        b += run.event_b;
        if (run.event_a && run.event_b) {
            SimpleGraph hnm = extract_hnm(run, rng);
            if (check_embedding(hnm, run.y).embedded) ++j;
        }
    }
    CellStats c;
    c.pa = static_cast<double>(a) / trials;
    c.pb = static_cast<double>(b) / trials;
    c.joint = static_cast<double>(j) / trials;
    return c;
}

std::int64_t degree_for(double C, std::int64_t n) {
    auto d = static_cast<std::int64_t>(std::ceil(C * std::log(static_cast<double>(n))));
    while ((n * d) % 3 != 0) ++d;  // k = 3 must divide nd
    return d;
}

int trend() {
    const int trials = 100;
    std::vector<double> cs{0.8, 1.5, 3.0, 5.0, 5.5, 6.0, 6.5, 7.0};
    std::vector<std::int64_t> ns{500, 1000, 2000, 4000};
    std::printf("| C | n | d | freq(A) | freq(B) | freq(A and B and embedded) |\n");
    std::printf("|---|---|---|---------|---------|----------------------------|\n");
    for (double C : cs) {
        for (std::int64_t n : ns) {
            std::int64_t d = degree_for(C, n);
            CellStats c = run_cell(n, d, trials, 42);
            std::printf("| %.1f | %lld | %lld | %.2f | %.2f | %.2f |\n", C,
                        static_cast<long long>(n), static_cast<long long>(d), c.pa, c.pb,
                        c.joint);
            std::fflush(stdout);
        }
    }
    return 0;
}

int scissor() {
    const int trials = 100;
    const std::int64_t n = 500;
    std::printf("| n | d | freq(A) | freq(B) |\n");
    std::printf("|---|---|---------|---------|\n");
    for (std::int64_t d : {3, 6, 12, 24, 48, 96, 192, 384}) {
        CellStats c = run_cell(n, d, trials, 42);
        std::printf("| %lld | %lld | %.2f | %.2f |\n", static_cast<long long>(n),
                    static_cast<long long>(d), c.pa, c.pb);
        std::fflush(stdout);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::string mode = argc > 1 ? argv[1] : "trend";
    if (mode == "trend") return trend();
    if (mode == "scissor") return scissor();
    std::fprintf(stderr, "usage: embedding_pilot [trend|scissor]\n");
    return 2;
}

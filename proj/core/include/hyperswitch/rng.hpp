// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace hsw {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seeded pseudo-random stream. Every randomized routine takes one of these;
// independent trials derive their own stream from (master_seed, trial_index)
// so results are reproducible no matter how trials are scheduled.
//
// Bounded draws use rejection, not modulo bias, and do not depend on
// std::uniform_int_distribution (whose output is implementation-defined);
// identical seeds therefore give identical streams on any platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    static Rng for_trial(std::uint64_t master_seed, std::uint64_t trial) {
        return Rng(splitmix64(master_seed) ^ splitmix64(trial * 0x9e3779b97f4a7c15ULL + 0x1234567));
    }

    // Third-level derivation: one stream per (master, trial, attempt).
    static Rng for_attempt(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t attempt) {
        std::uint64_t s = splitmix64(master_seed) ^ splitmix64(trial * 0x9e3779b97f4a7c15ULL + 0x1234567);
        return Rng(s ^ splitmix64(attempt + 0x517cc1b727220a95ULL));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        assert(bound >= 1);
        std::uint64_t threshold = (-bound) % bound;
        for (;;) {
            std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    // Fair coin.
    bool coin() { return (engine_() >> 63) != 0; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace hsw

// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0
//
// The full construction, one pass: coupled generation of (X, Y) with the
// embedded m-edge graph, the well-behaved-loop gate on Y, the red swap, the
// phi concentration gate on Y', then uniform loop-removing switchings down
// to a simple d-regular output H~. Every stage that can reject is surfaced
// in the result rather than hidden, so rejection frequencies can be
// compared against their predicted rates.

#pragma once

#include <cstdint>
#include <string>

#include "hyperswitch/coupling.hpp"
#include "hyperswitch/graph.hpp"
#include "hyperswitch/params.hpp"
#include "hyperswitch/redswap.hpp"
#include "hyperswitch/rng.hpp"
#include "hyperswitch/switching.hpp"

namespace hsw {

enum class PipelineMode {
    single_shot,         // one pass, report whatever happened
    resample_until_ok,   // repeat independent passes until a pass accepts
};

enum class PipelineStatus {
    ok,
    rejected_E,       // Y outside the well-behaved-loop family (or unswappable)
    rejected_tildeS,  // phi of Y' outside the concentration band
    aborted_rejects,  // a switching proposal budget or attempt budget ran out
};

std::string to_string(PipelineStatus s);

struct PipelineResult {
    PipelineStatus status = PipelineStatus::aborted_rejects;
    SimpleGraph hnm;      // always set: the coupled m-edge graph
    SimpleGraph tilde_h;  // only when status == ok
    bool event_a = false;
    bool event_b = false;
    bool embedded = false;  // hnm inside the red prefix of the final sequence
    Sequence y;             // last pass: raw coupled output
    Sequence yprime;        // after the red swap (when reached)
    Sequence ypp;           // after loop elimination (when ok)
    SwapRecord swap;
    EliminationTrace switchings;
    std::int64_t attempts = 0;          // passes consumed
    std::int64_t rejected_E_count = 0;  // across passes
    std::int64_t rejected_tildeS_count = 0;
    std::uint64_t seed = 0;  // echo slot for reports; not used internally
    std::string to_json() const;
};

// One pass consumes the rng stream in a fixed draw order, so a (params,
// seed) pair fully determines the result. In resample mode the passes
// continue on the same stream and are independent of each other.
PipelineResult run_pipeline(const Params& p, Rng& rng, PipelineMode mode,
                            std::int64_t max_attempts = 100000,
                            std::int64_t max_rejects = 1000000);

}  // namespace hsw

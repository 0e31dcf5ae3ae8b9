// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hyperswitch/pipeline.hpp"

#include <cassert>

#include "hyperswitch/sequence.hpp"
#include "json_detail.hpp"

namespace hsw {
namespace {

// One pass; fills everything it reaches.
void one_pass(const Params& p, Rng& rng, std::int64_t max_rejects, const Rational& ephi,
              PipelineResult& out) {
    CoupledRun run = coupled_generate(p, rng);
    out.event_a = run.event_a;
    out.event_b = run.event_b;
    out.hnm = extract_hnm(run, rng);
    out.y = std::move(run.y);

    EdgeClassification cls = classify_edges(out.y);
    bool in_E = !cls.has_duplicates() && p.loops_within_limit(cls.lambda);
    for (EdgeKind kind : cls.kinds)
        if (is_loop(kind) && kind != EdgeKind::simple_loop) in_E = false;
    if (!in_E) {
        out.status = PipelineStatus::rejected_E;
        out.embedded = check_embedding(out.hnm, out.y).embedded;
        return;
    }

    try {
        auto [yprime, record] = swap_red_loops(out.y, cls, rng);
        out.yprime = std::move(yprime);
        out.swap = std::move(record);
    } catch (const InsufficientGreenProper&) {
        // Cannot host the red loops: grouped with the conditioning
        // rejections, since the pass produces no output either way.
        out.status = PipelineStatus::rejected_E;
        out.embedded = check_embedding(out.hnm, out.y).embedded;
        return;
    }

    if (!membership(out.yprime, ephi).in_tilde_S) {
        out.status = PipelineStatus::rejected_tildeS;
        out.embedded = check_embedding(out.hnm, out.yprime).embedded;
        return;
    }

    auto [ypp, trace] = eliminate_loops(out.yprime, rng, max_rejects);
    out.ypp = std::move(ypp);
    out.switchings = std::move(trace);
    out.tilde_h = graph_of_sequence(out.ypp);
    out.embedded = check_embedding(out.hnm, out.ypp).embedded;
    out.status = PipelineStatus::ok;
}

}  // namespace

std::string to_string(PipelineStatus s) {
    switch (s) {
        case PipelineStatus::ok: return "ok";
        case PipelineStatus::rejected_E: return "rejected_E";
        case PipelineStatus::rejected_tildeS: return "rejected_tildeS";
        case PipelineStatus::aborted_rejects: return "aborted_rejects";
    }
    return "unknown";
}

PipelineResult run_pipeline(const Params& p, Rng& rng, PipelineMode mode,
                            std::int64_t max_attempts, std::int64_t max_rejects) {
    Rational ephi = expected_phi(p);
    PipelineResult out;
    for (std::int64_t attempt = 0; attempt < max_attempts; ++attempt) {
        ++out.attempts;
        try {
            one_pass(p, rng, max_rejects, ephi, out);
        } catch (const RejectBudgetExhausted&) {
            out.status = PipelineStatus::aborted_rejects;
            return out;
        }
        if (out.status == PipelineStatus::rejected_E) ++out.rejected_E_count;
        if (out.status == PipelineStatus::rejected_tildeS) ++out.rejected_tildeS_count;
        if (out.status == PipelineStatus::ok || mode == PipelineMode::single_shot) return out;
    }
    out.status = PipelineStatus::aborted_rejects;
    return out;
}

std::string PipelineResult::to_json() const {
    nlohmann::json j;
    j["schema"] = "hyperswitch-pipeline-v1";
    j["status"] = to_string(status);
    j["event_a"] = event_a;
    j["event_b"] = event_b;
    j["embedded"] = embedded;
    j["attempts"] = attempts;
    j["rejected_E_count"] = rejected_E_count;
    j["rejected_tildeS_count"] = rejected_tildeS_count;
    j["seed"] = seed;
    j["hnm"] = detail::json_graph(hnm);
    if (status == PipelineStatus::ok) {
        j["tilde_h"] = detail::json_graph(tilde_h);
        j["swap_pairs"] = swap.pairs.size();
        j["switching_steps"] = switchings.steps.size();
    }
    return j.dump(2);
}

}  // namespace hsw

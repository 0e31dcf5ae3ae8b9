// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Batch front end. One subcommand per operation; data goes to stdout or
// --out, messages to stderr. Exit codes: 0 success, 1 validation error,
// 2 guard/budget abort, 3 failed check in a test subcommand.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "hyperswitch/coupling.hpp"
#include "hyperswitch/generate.hpp"
#include "hyperswitch/oracle.hpp"
#include "hyperswitch/params.hpp"
#include "hyperswitch/pipeline.hpp"
#include "hyperswitch/stats.hpp"
#include "hyperswitch/textio.hpp"

namespace {

struct SeedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::uint64_t require_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("HYPERSWITCH_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw SeedError("HYPERSWITCH_SEED is not a valid unsigned integer");
        }
    }
    throw SeedError("a seed is required: pass --seed or set HYPERSWITCH_SEED");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

struct InstanceArgs {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::int64_t k = 3;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "vertex count")->required();
        cmd->add_option("--d", d, "degree")->required();
        cmd->add_option("--k", k, "edge size (default 3)");
    }
    hsw::Params params() const { return hsw::derive_params(n, d, k); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniform hypergraph embedding pipeline"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    std::optional<std::uint64_t> seed_flag;
    std::string out_path;
    std::int64_t jobs = 1;
    app.add_option("--seed", seed_flag, "master seed for randomized subcommands");
    app.add_option("--out", out_path, "write primary output to this file instead of stdout");
    app.add_option("--jobs", jobs,
                   "trial worker count (reports are order-independent; default 1)");

    std::function<int()> action;

    // ---- params ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("params", "derive and print instance parameters");
        auto args = std::make_shared<InstanceArgs>();
        args->attach(cmd);
        cmd->callback([&, args] {
            action = [&, args] {
                emit(hsw::params_json(args->params()), out_path);
                return 0;
            };
        });
    }

    // ---- sample-x / sample-y ---------------------------------------------
    {
        auto* cmd = app.add_subcommand("sample-x", "draw one independent-entry sequence");
        auto args = std::make_shared<InstanceArgs>();
        args->attach(cmd);
        cmd->callback([&, args] {
            action = [&, args] {
                hsw::Rng rng(require_seed(seed_flag));
                emit(hsw::sequence_to_string(hsw::sample_iid(args->params(), rng)), out_path);
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("sample-y", "draw one degree-constrained sequence");
        auto args = std::make_shared<InstanceArgs>();
        args->attach(cmd);
        cmd->callback([&, args] {
            action = [&, args] {
                hsw::Rng rng(require_seed(seed_flag));
                emit(hsw::sequence_to_string(hsw::sample_regular(args->params(), rng)), out_path);
                return 0;
            };
        });
    }

    // ---- pipeline ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("pipeline", "run the full construction once");
        auto args = std::make_shared<InstanceArgs>();
        args->attach(cmd);
        auto mode = std::make_shared<std::string>("single");
        auto hnm_out = std::make_shared<std::string>();
        auto tilde_out = std::make_shared<std::string>();
        cmd->add_option("--mode", *mode, "single | resample")
            ->check(CLI::IsMember({"single", "resample"}));
        cmd->add_option("--hnm-out", *hnm_out, "write the embedded graph edge list here");
        cmd->add_option("--tilde-out", *tilde_out, "write the output graph edge list here");
        cmd->callback([&, args, mode, hnm_out, tilde_out] {
            action = [&, args, mode, hnm_out, tilde_out] {
                std::uint64_t seed = require_seed(seed_flag);
                hsw::Rng rng(seed);
                hsw::PipelineMode m = *mode == "resample" ? hsw::PipelineMode::resample_until_ok
                                                          : hsw::PipelineMode::single_shot;
                hsw::PipelineResult result = hsw::run_pipeline(args->params(), rng, m);
                result.seed = seed;
                emit(result.to_json(), out_path);
                if (!hnm_out->empty()) {
                    std::ofstream f(*hnm_out);
                    f << hsw::graph_to_string(result.hnm);
                }
                if (result.status == hsw::PipelineStatus::ok && !tilde_out->empty()) {
                    std::ofstream f(*tilde_out);
                    f << hsw::graph_to_string(result.tilde_h);
                }
                return result.status == hsw::PipelineStatus::aborted_rejects ? 2 : 0;
            };
        });
    }

    // ---- enumerate ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("enumerate", "list every d-regular k-graph on [n]");
        auto args = std::make_shared<InstanceArgs>();
        args->attach(cmd);
        auto budget = std::make_shared<std::int64_t>(100000000);
        auto format = std::make_shared<std::string>("edgelist");
        cmd->add_option("--budget", *budget, "search node ceiling");
        cmd->add_option("--format", *format, "edgelist | json")
            ->check(CLI::IsMember({"edgelist", "json"}));
        cmd->callback([&, args, budget, format] {
            action = [&, args, budget, format] {
                hsw::EnumerationResult space =
                    hsw::enumerate_regular(args->n, args->d, args->k, *budget);
                if (*format == "json") {
                    nlohmann::json j;
                    j["schema"] = "hyperswitch-enumeration-v1";
                    j["count"] = space.count();
                    nlohmann::json list = nlohmann::json::array();
                    for (const auto& g : space.instances)
                        list.push_back(nlohmann::json::parse(hsw::graph_json(g)));
                    j["instances"] = list;
                    emit(j.dump(2), out_path);
                } else {
                    std::string text;
                    for (const auto& g : space.instances) {
                        text += hsw::graph_to_string(g);
                        text += '\n';
                    }
                    emit(text, out_path);
                    std::cerr << space.count() << " instances\n";
                }
                return 0;
            };
        });
    }

    // ---- hamilton ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("hamilton", "decide loose Hamilton cycle existence");
        auto in_path = std::make_shared<std::string>();
        auto budget = std::make_shared<std::int64_t>(100000000);
        cmd->add_option("--in", *in_path, "edge-list file to test")->required();
        cmd->add_option("--budget", *budget, "search node ceiling");
        cmd->callback([&, in_path, budget] {
            action = [&, in_path, budget] {
                std::ifstream f(*in_path);
                if (!f) throw std::invalid_argument("cannot open input file: " + *in_path);
                std::string text((std::istreambuf_iterator<char>(f)),
                                 std::istreambuf_iterator<char>());
                hsw::SimpleGraph g = hsw::graph_from_string(text);
                auto cycle = hsw::find_loose_hamilton(g, *budget);
                nlohmann::json j;
                j["schema"] = "hyperswitch-hamilton-v1";
                j["found"] = cycle.has_value();
                if (cycle) {
                    j["order"] = *cycle;
                    j["validated"] = hsw::validate_loose_hamilton(g, *cycle);
                }
                emit(j.dump(2), out_path);
                if (cycle && !hsw::validate_loose_hamilton(g, *cycle)) return 3;
                return 0;
            };
        });
    }

    // ---- uniformity ----------------------------------------------------------
    {
        auto* cmd =
            app.add_subcommand("uniformity", "chi-square of the pipeline against enumeration");
        auto args = std::make_shared<InstanceArgs>();
        args->attach(cmd);
        auto n_trials = std::make_shared<std::string>("auto");
        cmd->add_option("--N", *n_trials, "trial count, or 'auto' = max(10*|space|, 20000)");
        cmd->callback([&, args, n_trials] {
            action = [&, args, n_trials] {
                std::uint64_t seed = require_seed(seed_flag);
                hsw::Params p = args->params();
                hsw::EnumerationResult space = hsw::enumerate_regular(p.n, p.d, p.k);
                std::int64_t N = *n_trials == "auto"
                                     ? std::max<std::int64_t>(10 * space.count(), 20000)
                                     : std::stoll(*n_trials);
                hsw::GraphSampler sampler = [&p](hsw::Rng& rng) {
                    hsw::PipelineResult r =
                        hsw::run_pipeline(p, rng, hsw::PipelineMode::resample_until_ok);
                    if (r.status != hsw::PipelineStatus::ok)
                        throw std::runtime_error("pipeline aborted inside uniformity test");
                    return r.tilde_h;
                };
                hsw::ChiSquareReport rep = hsw::uniformity_test(sampler, space, N, seed);
                emit(rep.to_json(), out_path);
                return rep.p_value >= 0.01 ? 0 : 3;
            };
        });
    }

    // ---- events ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("events", "conditioning and coupling event frequencies");
        auto args = std::make_shared<InstanceArgs>();
        args->attach(cmd);
        auto n_trials = std::make_shared<std::int64_t>(10000);
        cmd->add_option("--N", *n_trials, "trial count");
        cmd->callback([&, args, n_trials] {
            action = [&, args, n_trials] {
                hsw::TrialReport rep =
                    hsw::event_frequencies(args->params(), *n_trials, require_seed(seed_flag));
                emit(rep.to_json(), out_path);
                return 0;
            };
        });
    }

    // ---- phi ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("phi", "mean and tail checks of the green collision count");
        auto args = std::make_shared<InstanceArgs>();
        args->attach(cmd);
        auto n_trials = std::make_shared<std::int64_t>(100000);
        cmd->add_option("--N", *n_trials, "trial count");
        cmd->callback([&, args, n_trials] {
            action = [&, args, n_trials] {
                hsw::PhiReport rep =
                    hsw::phi_checks(args->params(), *n_trials, require_seed(seed_flag));
                emit(rep.to_json(), out_path);
                return rep.mean_ok && rep.tails_ok ? 0 : 3;
            };
        });
    }

    // ---- fb-audit ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("fb-audit", "switching count bounds on sampled sequences");
        auto args = std::make_shared<InstanceArgs>();
        args->attach(cmd);
        auto n_trials = std::make_shared<std::int64_t>(10000);
        cmd->add_option("--N", *n_trials, "sample count");
        cmd->callback([&, args, n_trials] {
            action = [&, args, n_trials] {
                hsw::FbAuditReport rep =
                    hsw::fb_audit(args->params(), *n_trials, require_seed(seed_flag));
                emit(rep.to_json(), out_path);
                return rep.forward_violations == 0 && rep.backward_violations == 0 ? 0 : 3;
            };
        });
    }

    // ---- double-count ----------------------------------------------------------
    {
        auto* cmd =
            app.add_subcommand("double-count", "exact forward/backward identity over the space");
        auto args = std::make_shared<InstanceArgs>();
        args->attach(cmd);
        auto budget = std::make_shared<std::int64_t>(100000000);
        cmd->add_option("--budget", *budget, "sequence space ceiling");
        cmd->callback([&, args, budget] {
            action = [&, args, budget] {
                hsw::DoubleCountReport rep = hsw::double_count_check(args->params(), *budget);
                emit(rep.to_json(), out_path);
                return rep.identities_hold ? 0 : 3;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return action();
    } catch (const hsw::UnknownInstanceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

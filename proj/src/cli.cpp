// SPDX-License-Identifier: Apache-2.0
//
// risphase: discrete phase-shift selection for range-limited reconfigurable surfaces
// Copyright (C) 2026 The risphase authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risphase/cli.hpp"

#include "risphase/channel_io.hpp"
#include "risphase/montecarlo.hpp"
#include "risphase/optimal.hpp"
#include "risphase/oracle.hpp"
#include "risphase/quantize.hpp"
#include "risphase/ratios.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace risphase::cli {

namespace {

struct AlphabetArgs {
    std::optional<double> range_deg;
    std::optional<std::size_t> num_phases;
    std::vector<double> phases;
};

PhaseSet alphabet_from(const AlphabetArgs &a)
{
    if (!a.phases.empty()) {
        if (a.range_deg || a.num_phases)
            throw Error(ErrorKind::Config, "--phases excludes --phase-range/--num-phases");
        return make_phase_set(a.phases);
    }
    if (!a.range_deg || !a.num_phases)
        throw Error(ErrorKind::Config, "give --phase-range and --num-phases, or --phases");
    return equally_separated_set(deg_to_rad(*a.range_deg), *a.num_phases);
}

std::string six_decimals(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

nlohmann::ordered_json solve_json(const std::string &method, const ChannelRealization &channel,
                                  const PhaseSet &set)
{
    SolveOutcome outcome;
    if (method == "oracle")
        outcome = exhaustive_all_on(channel, set);
    else if (method == "oracle-onoff")
        outcome = exhaustive_on_off(channel, set);
    else
        outcome = solve_with(parse_method(method), channel, set);

    std::vector<std::size_t> idx(outcome.config.phase.size());
    for (std::size_t n = 0; n < idx.size(); ++n)
        idx[n] = outcome.config.phase[n] + 1;
    std::vector<int> gains(outcome.config.gain.begin(), outcome.config.gain.end());

    nlohmann::ordered_json doc;
    doc["theta_idx"] = idx;
    doc["gains"] = gains;
    doc["objective"] = outcome.objective;
    if (channel.beta(0) > 0.0)
        doc["snr_boost"] = snr_boost(channel, set, outcome.config);
    else
        doc["snr_boost"] = nullptr;
    doc["normalized_performance"] = normalized_performance(channel, set, outcome.config);
    const bool oracle = method.rfind("oracle", 0) == 0;
    doc["events_processed"] = oracle ? 0 : outcome.events_processed;
    doc["complex_additions"] = oracle ? 0 : outcome.complex_additions;
    return doc;
}

int worker_cap()
{
    if (const char *env = std::getenv("RIS_THREADS")) {
        try {
            const int v = std::stoi(env);
            return v > 0 ? v : 0;
        } catch (const std::exception &) {
            throw Error(ErrorKind::Config, "RIS_THREADS must be a positive integer");
        }
    }
    return 0;
}

void ratio_table(std::ostream &out)
{
    out << "R_deg,K,E_npq,E_enpq\n";
    for (std::size_t k : {2, 3, 4, 6, 8}) {
        for (int deg = 1; deg < 360; ++deg) {
            const double r = deg_to_rad(deg);
            if (r >= max_restricted_range(k))
                break;
            out << deg << ',' << k << ',' << six_decimals(approx_ratio_npq(r, k)) << ','
                << six_decimals(approx_ratio_enpq(r, k)) << '\n';
        }
    }
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Discrete phase-shift selection for range-limited reconfigurable surfaces.\n"
                 "Phase ranges are given in degrees; phase indices in JSON output are 1-based.",
                 "risphase"};
    app.require_subcommand(1);

    // solve
    auto *solve = app.add_subcommand("solve", "Configure the surface for one or more channel realizations");
    std::string channels_path;
    std::string solve_method = "alg2";
    AlphabetArgs solve_alpha;
    solve->add_option("--channels", channels_path, "JSON channel file (one object or NDJSON)")->required();
    solve->add_option("--phase-range", solve_alpha.range_deg, "Phase range R in degrees");
    solve->add_option("--num-phases", solve_alpha.num_phases, "Number of phases K");
    solve->add_option("--phases", solve_alpha.phases, "Explicit alphabet, comma-separated radians")
        ->delimiter(',');
    solve->add_option("--method", solve_method, "npq|enpq|alg1|alg2|oracle|oracle-onoff")
        ->check(CLI::IsMember({"npq", "enpq", "alg1", "alg2", "oracle", "oracle-onoff"}));

    // sweep
    auto *sweep = app.add_subcommand("sweep", "Monte Carlo experiment; CSV output");
    std::string experiment = "perf-vs-n";
    std::vector<std::string> methods{"npq", "enpq", "alg1", "alg2"};
    std::vector<double> ranges;
    std::vector<std::size_t> phase_counts;
    std::vector<std::size_t> element_counts;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    bool aggregate_only = false;
    std::string out_path;
    ChannelModelConfig model;
    bool single_hop = false;
    sweep->add_option("--experiment", experiment, "cdf|perf-vs-n|boost-vs-r")
        ->check(CLI::IsMember({"cdf", "perf-vs-n", "boost-vs-r"}));
    sweep->add_option("--methods", methods, "Comma-separated subset of npq,enpq,alg1,alg2")->delimiter(',');
    sweep->add_option("--phase-range", ranges, "Phase ranges in degrees")->delimiter(',')->required();
    sweep->add_option("--num-phases", phase_counts, "Phase counts K")->delimiter(',')->required();
    sweep->add_option("--n", element_counts, "Element counts N")->delimiter(',')->required();
    sweep->add_option("--trials", trials, "Channel realizations per cell");
    sweep->add_option("--seed", seed, "Base seed");
    sweep->add_flag("--aggregate", aggregate_only, "Emit per-cell summaries instead of per-trial rows");
    sweep->add_option("--out", out_path, "Write CSV here instead of standard output");
    sweep->add_option("--kappa", model.kappa, "Rician factor (0 = Rayleigh)");
    sweep->add_option("--direct-scale", model.direct_link_scale, "Direct link amplitude scale (0 = blocked)");
    sweep->add_flag("--single-hop", single_hop, "Element channels are single Gaussian draws, not products");

    // ratio
    auto *ratio = app.add_subcommand("ratio", "Closed-form approximation ratios");
    AlphabetArgs ratio_alpha;
    bool on_off = false;
    bool table = false;
    ratio->add_option("--phase-range", ratio_alpha.range_deg, "Phase range R in degrees");
    ratio->add_option("--num-phases", ratio_alpha.num_phases, "Number of phases K");
    ratio->add_option("--phases", ratio_alpha.phases, "Explicit alphabet, comma-separated radians")
        ->delimiter(',');
    ratio->add_flag("--on-off", on_off, "ENPQ ratio (ON/OFF gains)");
    ratio->add_flag("--table", table, "Print E(R,K) and E_on/off(R,K) grids as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "risphase: " << e.what() << "\n";
        const CLI::App *sub = nullptr;
        for (const CLI::App *s : {solve, sweep, ratio}) {
            if (s->parsed())
                sub = s;
        }
        err << (sub ? sub->help() : app.help());
        return kExitUsage;
    }

    try {
        if (solve->parsed()) {
            std::ifstream in(channels_path);
            if (!in)
                throw Error(ErrorKind::Parse, "cannot open " + channels_path);
            const std::vector<ChannelRealization> channels = read_channels(in);
            const PhaseSet set = alphabet_from(solve_alpha);
            std::ostringstream buffer;
            for (const ChannelRealization &channel : channels)
                buffer << solve_json(solve_method, channel, set).dump() << '\n';
            out << buffer.str();
            return kExitOk;
        }

        if (sweep->parsed()) {
            ExperimentSpec spec;
            spec.kind = parse_experiment(experiment);
            for (const std::string &m : methods)
                spec.methods.push_back(parse_method(m));
            spec.ranges_deg = ranges;
            spec.num_phases = phase_counts;
            spec.num_elements = element_counts;
            spec.trials = trials;
            spec.base_seed = seed;
            model.cascade = !single_hop;

            const ExperimentTable result = run_experiment(spec, model, worker_cap());
            std::ostringstream csv;
            if (aggregate_only)
                write_aggregate_csv(csv, aggregate(result));
            else
                write_trials_csv(csv, result);
            if (out_path.empty()) {
                out << csv.str();
            } else {
                std::ofstream file(out_path, std::ios::binary);
                if (!file)
                    throw Error(ErrorKind::Config, "cannot write " + out_path);
                file << csv.str();
            }
            return kExitOk;
        }

        if (ratio->parsed()) {
            if (table) {
                ratio_table(out);
                return kExitOk;
            }
            double value = 0.0;
            if (!ratio_alpha.phases.empty()) {
                value = approx_ratio_arbitrary(alphabet_from(ratio_alpha));
            } else {
                if (!ratio_alpha.range_deg || !ratio_alpha.num_phases)
                    throw Error(ErrorKind::Config, "give --phase-range and --num-phases, or --phases");
                const double r = deg_to_rad(*ratio_alpha.range_deg);
                value = on_off ? approx_ratio_enpq(r, *ratio_alpha.num_phases)
                               : approx_ratio_npq(r, *ratio_alpha.num_phases);
            }
            out << six_decimals(value) << '\n';
            return kExitOk;
        }
    } catch (const Error &e) {
        err << "risphase: " << to_string(e.kind()) << " error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Budget ? kExitBudget : kExitUsage;
    }
    return kExitUsage;
}

} // namespace risphase::cli

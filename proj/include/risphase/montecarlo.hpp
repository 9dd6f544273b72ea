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

#pragma once

#include "risphase/model.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace risphase {

/// Statistical channel model. Every complex draw is a unit-variance circularly
/// symmetric Gaussian mixed with a random-phase line-of-sight term of Rician
/// factor kappa (kappa = 0 is Rayleigh).
struct ChannelModelConfig {
    std::size_t n_elements = 16;
    double kappa = 0.0;
    double direct_link_scale = 1.0; // 0 blocks the direct link
    bool cascade = true;            // h_n = u_n * v_n instead of a single draw

    void validate() const;
};

ChannelRealization sample_channel(const ChannelModelConfig &config, std::mt19937_64 &rng);

/// Counter-based per-trial seed; independent of execution order.
std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial) noexcept;

enum class Method { Npq, Enpq, Alg1, Alg2 };
enum class ExperimentKind { Cdf, PerfVsN, BoostVsR };

std::string_view to_string(Method method) noexcept;
std::string_view to_string(ExperimentKind kind) noexcept;
Method parse_method(std::string_view name);
ExperimentKind parse_experiment(std::string_view name);

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::PerfVsN;
    std::vector<Method> methods;
    std::vector<double> ranges_deg;
    std::vector<std::size_t> num_phases;
    std::vector<std::size_t> num_elements;
    std::size_t trials = 1;
    std::uint64_t base_seed = 0;

    /// Throws Config on empty lists, zero trials or (R, K) with R >= 2*pi*(K-1)/K.
    void validate() const;
};

struct TrialRow {
    Method method;
    double range_deg;
    std::size_t num_phases;
    std::size_t num_elements;
    std::size_t trial;
    std::optional<double> snr_boost; // empty when the direct link is blocked
    double normalized_performance;
};

/// Rows ordered by (method, R, K, N, trial) in the order the lists were given.
struct ExperimentTable {
    ExperimentKind kind = ExperimentKind::PerfVsN;
    std::vector<TrialRow> rows;
};

/// Solves one realization with one method.
SolveOutcome solve_with(Method method, const ChannelRealization &channel, const PhaseSet &set);

/// Serial reference run.
ExperimentTable run_experiment_serial(const ExperimentSpec &spec, const ChannelModelConfig &model);

/// OpenMP run over trials; byte-identical output to the serial run for any
/// worker count. `workers` == 0 uses the OpenMP default.
ExperimentTable run_experiment(const ExperimentSpec &spec, const ChannelModelConfig &model,
                               int workers = 0);

struct SummaryStats {
    double mean = 0.0;
    std::vector<std::pair<double, double>> cdf; // (value, cumulative probability), deduplicated
    std::array<double, 5> percentiles{};        // 5, 25, 50, 75, 95 (nearest rank)
};

inline constexpr std::array<double, 5> kPercentileLevels{5.0, 25.0, 50.0, 75.0, 95.0};

SummaryStats empirical_cdf(std::vector<double> values);

struct CellAggregate {
    Method method;
    double range_deg;
    std::size_t num_phases;
    std::size_t num_elements;
    std::optional<double> mean_boost;
    double mean_normalized_performance;
    SummaryStats stats; // of snr_boost for cdf / boost-vs-r, of normalized performance for perf-vs-n
};

std::vector<CellAggregate> aggregate(const ExperimentTable &table);

void write_trials_csv(std::ostream &out, const ExperimentTable &table);
void write_aggregate_csv(std::ostream &out, const std::vector<CellAggregate> &cells);

} // namespace risphase

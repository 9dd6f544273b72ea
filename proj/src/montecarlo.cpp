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

#include "risphase/montecarlo.hpp"

#include "risphase/optimal.hpp"
#include "risphase/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>
#include <ostream>

#include <omp.h>

namespace risphase {

void ChannelModelConfig::validate() const
{
    if (n_elements < 1)
        throw Error(ErrorKind::Config, "channel model needs N >= 1");
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw Error(ErrorKind::Config, "Rician factor must be finite and >= 0");
    if (!(direct_link_scale >= 0.0) || !std::isfinite(direct_link_scale))
        throw Error(ErrorKind::Config, "direct link scale must be finite and >= 0");
}

namespace {

Complex draw(double kappa, std::mt19937_64 &rng, std::normal_distribution<double> &normal)
{
    const Complex scatter(normal(rng) / std::numbers::sqrt2, normal(rng) / std::numbers::sqrt2);
    if (kappa == 0.0)
        return scatter;
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    const Complex los = std::polar(1.0, phase(rng));
    return std::sqrt(kappa / (kappa + 1.0)) * los + std::sqrt(1.0 / (kappa + 1.0)) * scatter;
}

} // namespace

ChannelRealization sample_channel(const ChannelModelConfig &config, std::mt19937_64 &rng)
{
    config.validate();
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> h(config.n_elements + 1);
    h[0] = config.direct_link_scale * draw(config.kappa, rng, normal);
    for (std::size_t n = 1; n <= config.n_elements; ++n) {
        h[n] = draw(config.kappa, rng, normal);
        if (config.cascade)
            h[n] *= draw(config.kappa, rng, normal);
    }
    if (config.direct_link_scale == 0.0)
        h[0] = Complex(0.0, 0.0);
    return ChannelRealization::from_coefficients(h);
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial) noexcept
{
    // splitmix64 finalizer over the (seed, trial) pair
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(base_seed ^ mix(trial));
}

std::string_view to_string(Method method) noexcept
{
    switch (method) {
    case Method::Npq: return "npq";
    case Method::Enpq: return "enpq";
    case Method::Alg1: return "alg1";
    case Method::Alg2: return "alg2";
    }
    return "unknown";
}

std::string_view to_string(ExperimentKind kind) noexcept
{
    switch (kind) {
    case ExperimentKind::Cdf: return "cdf";
    case ExperimentKind::PerfVsN: return "perf-vs-n";
    case ExperimentKind::BoostVsR: return "boost-vs-r";
    }
    return "unknown";
}

Method parse_method(std::string_view name)
{
    for (Method m : {Method::Npq, Method::Enpq, Method::Alg1, Method::Alg2}) {
        if (to_string(m) == name)
            return m;
    }
    throw Error(ErrorKind::Config, "unknown method '" + std::string(name) + "'");
}

ExperimentKind parse_experiment(std::string_view name)
{
    for (ExperimentKind k : {ExperimentKind::Cdf, ExperimentKind::PerfVsN, ExperimentKind::BoostVsR}) {
        if (to_string(k) == name)
            return k;
    }
    throw Error(ErrorKind::Config, "unknown experiment '" + std::string(name) + "'");
}

void ExperimentSpec::validate() const
{
    if (methods.empty() || ranges_deg.empty() || num_phases.empty() || num_elements.empty())
        throw Error(ErrorKind::Config, "experiment lists must be nonempty");
    if (trials < 1)
        throw Error(ErrorKind::Config, "trials must be >= 1");
    for (std::size_t n : num_elements) {
        if (n < 1)
            throw Error(ErrorKind::Config, "N must be >= 1");
    }
    for (double r : ranges_deg) {
        for (std::size_t k : num_phases) {
            if (k < 2 || !(r > 0.0) || deg_to_rad(r) >= max_restricted_range(k))
                throw Error(ErrorKind::Config, "phase range " + std::to_string(r) + " deg with K = " +
                                                   std::to_string(k) + " violates 0 < R < 2*pi*(K-1)/K");
        }
    }
}

SolveOutcome solve_with(Method method, const ChannelRealization &channel, const PhaseSet &set)
{
    switch (method) {
    case Method::Npq:
    case Method::Enpq: {
        const QuantizerOutput q = method == Method::Npq ? npq(channel, set) : enpq(channel, set);
        SolveOutcome out;
        const ObjectiveValue value = objective(channel, set, q.config);
        out.config = q.config;
        out.g = value.g;
        out.objective = value.f;
        return out;
    }
    case Method::Alg1: return algorithm1(channel, set);
    case Method::Alg2: return algorithm2(channel, set);
    }
    throw Error(ErrorKind::Config, "unknown method");
}

namespace {

struct Cell {
    std::size_t r, k, n;
};

// Layout of the output rows: method-major, then R, K, N, trial.
class RowLayout {
public:
    explicit RowLayout(const ExperimentSpec &spec) : spec_(spec) {}

    std::size_t cells_per_method() const
    {
        return spec_.ranges_deg.size() * spec_.num_phases.size() * spec_.num_elements.size();
    }
    std::size_t total() const { return spec_.methods.size() * cells_per_method() * spec_.trials; }
    std::size_t index(std::size_t m, const Cell &c, std::size_t trial) const
    {
        const std::size_t cell =
            (c.r * spec_.num_phases.size() + c.k) * spec_.num_elements.size() + c.n;
        return (m * cells_per_method() + cell) * spec_.trials + trial;
    }

private:
    const ExperimentSpec &spec_;
};

// Draws trial `trial` of a cell and solves it with every method.
void run_trial(const ExperimentSpec &spec, const ChannelModelConfig &model, const RowLayout &layout,
               const Cell &cell, const PhaseSet &set, std::size_t trial, std::vector<TrialRow> &rows)
{
    ChannelModelConfig cfg = model;
    cfg.n_elements = spec.num_elements[cell.n];
    std::mt19937_64 rng(trial_seed(spec.base_seed, trial));
    const ChannelRealization channel = sample_channel(cfg, rng);
    const double b0 = channel.beta(0);
    const double total = channel.beta_sum();

    for (std::size_t m = 0; m < spec.methods.size(); ++m) {
        const SolveOutcome out = solve_with(spec.methods[m], channel, set);
        TrialRow &row = rows[layout.index(m, cell, trial)];
        row.method = spec.methods[m];
        row.range_deg = spec.ranges_deg[cell.r];
        row.num_phases = spec.num_phases[cell.k];
        row.num_elements = cfg.n_elements;
        row.trial = trial;
        row.snr_boost = b0 > 0.0 ? std::optional<double>(out.objective / (b0 * b0)) : std::nullopt;
        row.normalized_performance = total > 0.0 ? out.objective / (total * total) : 0.0;
    }
}

template <class TrialLoop>
ExperimentTable run_cells(const ExperimentSpec &spec, const ChannelModelConfig &model, TrialLoop loop)
{
    spec.validate();
    model.validate();
    if (spec.kind != ExperimentKind::PerfVsN && model.direct_link_scale == 0.0)
        throw Error(ErrorKind::Config, "SNR-boost experiments need a direct link (scale > 0)");

    const RowLayout layout(spec);
    ExperimentTable table;
    table.kind = spec.kind;
    table.rows.resize(layout.total());
    for (std::size_t r = 0; r < spec.ranges_deg.size(); ++r) {
        for (std::size_t k = 0; k < spec.num_phases.size(); ++k) {
            const PhaseSet set = equally_separated_set(deg_to_rad(spec.ranges_deg[r]), spec.num_phases[k]);
            for (std::size_t n = 0; n < spec.num_elements.size(); ++n)
                loop(layout, Cell{r, k, n}, set, table.rows);
        }
    }
    return table;
}

} // namespace

ExperimentTable run_experiment_serial(const ExperimentSpec &spec, const ChannelModelConfig &model)
{
    return run_cells(spec, model,
                     [&](const RowLayout &layout, const Cell &cell, const PhaseSet &set,
                         std::vector<TrialRow> &rows) {
                         for (std::size_t t = 0; t < spec.trials; ++t)
                             run_trial(spec, model, layout, cell, set, t, rows);
                     });
}

ExperimentTable run_experiment(const ExperimentSpec &spec, const ChannelModelConfig &model, int workers)
{
    const int threads = workers > 0 ? workers : omp_get_max_threads();
    return run_cells(spec, model,
                     [&](const RowLayout &layout, const Cell &cell, const PhaseSet &set,
                         std::vector<TrialRow> &rows) {
                         const auto trials = static_cast<std::int64_t>(spec.trials);
                         std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
                         for (std::int64_t t = 0; t < trials; ++t) {
                             try {
                                 run_trial(spec, model, layout, cell, set, static_cast<std::size_t>(t), rows);
                             } catch (...) {
#pragma omp critical(risphase_mc_failure)
                                 if (!failure)
                                     failure = std::current_exception();
                             }
                         }
                         if (failure)
                             std::rethrow_exception(failure);
                     });
}

SummaryStats empirical_cdf(std::vector<double> values)
{
    if (values.empty())
        throw Error(ErrorKind::Domain, "empirical CDF of an empty sample");
    std::sort(values.begin(), values.end());
    const auto M = static_cast<double>(values.size());

    SummaryStats stats;
    stats.mean = std::accumulate(values.begin(), values.end(), 0.0) / M;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double p = static_cast<double>(i + 1) / M;
        if (!stats.cdf.empty() && stats.cdf.back().first == values[i])
            stats.cdf.back().second = p;
        else
            stats.cdf.emplace_back(values[i], p);
    }
    for (std::size_t j = 0; j < kPercentileLevels.size(); ++j) {
        const double rank = std::ceil(kPercentileLevels[j] / 100.0 * M);
        const auto idx = static_cast<std::size_t>(std::max(rank, 1.0)) - 1;
        stats.percentiles[j] = values[std::min(idx, values.size() - 1)];
    }
    return stats;
}

std::vector<CellAggregate> aggregate(const ExperimentTable &table)
{
    std::vector<CellAggregate> cells;
    const auto &rows = table.rows;
    std::size_t begin = 0;
    while (begin < rows.size()) {
        std::size_t end = begin;
        auto same_cell = [&](const TrialRow &a, const TrialRow &b) {
            return a.method == b.method && a.range_deg == b.range_deg && a.num_phases == b.num_phases &&
                   a.num_elements == b.num_elements;
        };
        while (end < rows.size() && same_cell(rows[begin], rows[end]))
            ++end;

        CellAggregate cell{rows[begin].method, rows[begin].range_deg, rows[begin].num_phases,
                           rows[begin].num_elements, std::nullopt, 0.0, {}};
        std::vector<double> perf;
        std::vector<double> boost;
        for (std::size_t i = begin; i < end; ++i) {
            perf.push_back(rows[i].normalized_performance);
            if (rows[i].snr_boost)
                boost.push_back(*rows[i].snr_boost);
        }
        cell.mean_normalized_performance =
            std::accumulate(perf.begin(), perf.end(), 0.0) / static_cast<double>(perf.size());
        if (boost.size() == perf.size())
            cell.mean_boost = std::accumulate(boost.begin(), boost.end(), 0.0) / static_cast<double>(boost.size());
        const bool boost_metric = table.kind != ExperimentKind::PerfVsN && boost.size() == perf.size();
        cell.stats = empirical_cdf(boost_metric ? std::move(boost) : std::move(perf));
        cells.push_back(std::move(cell));
        begin = end;
    }
    return cells;
}

namespace {

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(text);
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

std::string number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

void write_trials_csv(std::ostream &out, const ExperimentTable &table)
{
    out << "method,R_deg,K,N,trial,snr_boost,normalized_performance\r\n";
    for (const TrialRow &row : table.rows) {
        out << csv_field(to_string(row.method)) << ',' << short_number(row.range_deg) << ','
            << row.num_phases << ',' << row.num_elements << ',' << row.trial << ','
            << (row.snr_boost ? number(*row.snr_boost) : std::string()) << ','
            << number(row.normalized_performance) << "\r\n";
    }
}

void write_aggregate_csv(std::ostream &out, const std::vector<CellAggregate> &cells)
{
    out << "method,R_deg,K,N,mean_boost,mean_normperf,p5,p25,p50,p75,p95\r\n";
    for (const CellAggregate &c : cells) {
        out << csv_field(to_string(c.method)) << ',' << short_number(c.range_deg) << ',' << c.num_phases
            << ',' << c.num_elements << ',' << (c.mean_boost ? number(*c.mean_boost) : std::string()) << ','
            << number(c.mean_normalized_performance);
        for (double p : c.stats.percentiles)
            out << ',' << number(p);
        out << "\r\n";
    }
}

} // namespace risphase

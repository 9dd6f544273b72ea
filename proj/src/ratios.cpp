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

#include "risphase/ratios.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace risphase {

RatioValue::RatioValue(double value) : value_(value)
{
    if (!std::isfinite(value) || value < 0.0 || value > 1.0 + 1e-12)
        throw Error(ErrorKind::Domain, "approximation ratio " + std::to_string(value) + " outside [0, 1]");
    value_ = std::min(value, 1.0);
}

double sinc(double x) noexcept
{
    if (x == 0.0)
        return 1.0;
    const double px = kPi * x;
    return std::sin(px) / px;
}

RatioValue approx_ratio_arbitrary(const PhaseSet &set)
{
    const auto phases = set.phases();
    const std::size_t K = phases.size();
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < K; ++k)
        sum += std::sin((phases[k + 1] - phases[k]) / 2.0);
    sum += std::sin((phases[K - 1] - phases[0]) / 2.0);
    return RatioValue(sum * sum / (kPi * kPi));
}

namespace {

void check_restricted(double range, std::size_t num_phases)
{
    if (num_phases < 2)
        throw Error(ErrorKind::Domain, "need K >= 2 phases");
    if (!(range > 0.0) || range >= max_restricted_range(num_phases))
        throw Error(ErrorKind::Domain, "ratio needs 0 < R < 2*pi*(K-1)/K, got R = " + std::to_string(range) +
                                           " rad, K = " + std::to_string(num_phases));
}

} // namespace

RatioValue approx_ratio_npq(double range, std::size_t num_phases)
{
    check_restricted(range, num_phases);
    const double k1 = static_cast<double>(num_phases - 1);
    const double s = sinc(range / (kTwoPi * k1)) + sinc(range / kTwoPi);
    return RatioValue(range * range / (4.0 * kPi * kPi) * s * s);
}

RatioValue approx_ratio_enpq(double range, std::size_t num_phases)
{
    check_restricted(range, num_phases);
    const double k1 = static_cast<double>(num_phases - 1);
    // Clamped quantization errors reach pi - R/2; only beyond pi/2 (R < pi)
    // does an element get switched off. For R >= pi ENPQ is NPQ.
    const double tail = range < kPi ? 1.0 : std::sin(range / 2.0);
    const double s = k1 * std::sin(range / (2.0 * k1)) + tail;
    return RatioValue(s * s / (kPi * kPi));
}

namespace {

// Log-uniform perturbation scale in [1e-4, 1] of the nominal spacing.
double draw_scale(std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> exponent(-4.0, 0.0);
    return std::pow(10.0, exponent(rng));
}

} // namespace

PlacementCheck placement_perturbation_check(double range, std::size_t num_phases,
                                            std::size_t trials, std::uint64_t seed)
{
    const PhaseSet base = equally_separated_set(range, num_phases);
    PlacementCheck check;
    check.baseline = approx_ratio_arbitrary(base);
    if (num_phases < 3) {
        check.trials = trials;
        return check;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-0.5, 0.5);
    const double spacing = range / static_cast<double>(num_phases - 1);
    const double half = range / 2.0;
    std::vector<double> phases(base.phases().begin(), base.phases().end());

    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<double> trial;
        for (;;) {
            trial = phases;
            const double scale = draw_scale(rng) * spacing;
            for (std::size_t k = 1; k + 1 < num_phases; ++k)
                trial[k] += scale * unit(rng);
            bool ordered = true;
            for (std::size_t k = 1; k < num_phases; ++k)
                ordered = ordered && trial[k] - trial[k - 1] > kPhaseTolerance;
            if (ordered && trial.front() == -half && trial.back() == half)
                break;
        }
        const double value = approx_ratio_arbitrary(make_phase_set(trial));
        check.worst_excess = std::max(check.worst_excess, value - check.baseline);
        ++check.trials;
    }
    check.pass = check.worst_excess <= 1e-12;
    return check;
}

PlacementCheck full_circle_perturbation_check(std::size_t num_phases, std::size_t trials,
                                              std::uint64_t seed)
{
    const PhaseSet base = uniform_full_circle_set(num_phases);
    PlacementCheck check;
    check.baseline = approx_ratio_arbitrary(base);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-0.5, 0.5);
    const double spacing = kTwoPi / static_cast<double>(num_phases);

    for (std::size_t t = 0; t < trials; ++t) {
        const double scale = draw_scale(rng) * spacing;
        std::vector<double> trial(base.phases().begin(), base.phases().end());
        for (double &p : trial)
            p = wrap_pi(p + scale * unit(rng));
        std::sort(trial.begin(), trial.end());
        bool distinct = true;
        for (std::size_t k = 1; k < num_phases; ++k)
            distinct = distinct && trial[k] - trial[k - 1] > kPhaseTolerance;
        if (!distinct) {
            --t;
            continue;
        }
        const double value = approx_ratio_arbitrary(make_phase_set(trial));
        check.worst_excess = std::max(check.worst_excess, value - check.baseline);
        ++check.trials;
    }
    check.pass = check.worst_excess <= 1e-12;
    return check;
}

} // namespace risphase

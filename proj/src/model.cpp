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

#include "risphase/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace risphase {

const char *to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidAlphabet: return "invalid-alphabet";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::RangeViolation: return "range-violation";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::UndefinedBoost: return "undefined-boost";
    case ErrorKind::DegenerateChannel: return "degenerate-channel";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::UndefinedDirection: return "undefined-direction";
    case ErrorKind::Config: return "config";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

double wrap_pi(double angle) noexcept
{
    double r = std::fmod(angle + kPi, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    r -= kPi;
    // fmod rounding can land exactly on +pi
    if (r >= kPi)
        r -= kTwoPi;
    return r < -kPi ? -kPi : r;
}

double wrap_two_pi(double angle) noexcept
{
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    return r >= kTwoPi ? 0.0 : r;
}

double max_restricted_range(std::size_t num_phases) noexcept
{
    const auto k = static_cast<double>(num_phases);
    return kTwoPi * (k - 1.0) / k;
}

PhaseSet make_phase_set(std::vector<double> phases)
{
    if (phases.size() < 2)
        throw Error(ErrorKind::InvalidAlphabet, "a phase set needs at least two phases");
    for (double p : phases) {
        if (!std::isfinite(p) || p < -kPi || p >= kPi)
            throw Error(ErrorKind::Domain, "phase " + std::to_string(p) + " outside [-pi, pi)");
    }
    std::sort(phases.begin(), phases.end());
    for (std::size_t k = 1; k < phases.size(); ++k) {
        if (phases[k] - phases[k - 1] <= kPhaseTolerance)
            throw Error(ErrorKind::InvalidAlphabet, "duplicate phase " + std::to_string(phases[k]));
    }

    PhaseSet set;
    set.phases_ = std::move(phases);
    const std::size_t K = set.phases_.size();
    set.gaps_.resize(K);
    for (std::size_t k = 0; k + 1 < K; ++k)
        set.gaps_[k] = set.phases_[k + 1] - set.phases_[k];
    set.gaps_[K - 1] = kTwoPi + set.phases_.front() - set.phases_.back();

    for (std::size_t k = 0; k < K; ++k) {
        if (set.gaps_[k] > kPi) {
            set.wide_gap_ = k;
            break;
        }
    }
    return set;
}

PhaseSet equally_separated_set(double range, std::size_t num_phases)
{
    if (num_phases < 2)
        throw Error(ErrorKind::InvalidAlphabet, "a phase set needs at least two phases");
    if (!(range > 0.0))
        throw Error(ErrorKind::Domain, "phase range must be positive");
    if (range >= max_restricted_range(num_phases))
        throw Error(ErrorKind::RangeViolation,
                    "phase range " + std::to_string(range) + " rad does not restrict K = " +
                        std::to_string(num_phases) + " phases (needs R < 2*pi*(K-1)/K); use a full-circle set");

    const double spacing = range / static_cast<double>(num_phases - 1);
    std::vector<double> phases(num_phases);
    for (std::size_t k = 0; k < num_phases; ++k)
        phases[k] = -range / 2.0 + static_cast<double>(k) * spacing;
    phases.back() = range / 2.0;
    return make_phase_set(std::move(phases));
}

PhaseSet uniform_full_circle_set(std::size_t num_phases)
{
    if (num_phases < 2)
        throw Error(ErrorKind::InvalidAlphabet, "a phase set needs at least two phases");
    std::vector<double> phases(num_phases);
    for (std::size_t k = 0; k < num_phases; ++k)
        phases[k] = -kPi + static_cast<double>(k) * kTwoPi / static_cast<double>(num_phases);
    return make_phase_set(std::move(phases));
}

namespace {

void check_index(std::size_t k, std::size_t num_phases)
{
    if (k < 1 || k > num_phases)
        throw Error(ErrorKind::Domain, "phase index " + std::to_string(k) + " outside 1.." +
                                           std::to_string(num_phases));
}

} // namespace

std::size_t idx_add(std::size_t k1, std::size_t k2, std::size_t num_phases)
{
    check_index(k1, num_phases);
    check_index(k2, num_phases);
    return k1 + k2 <= num_phases ? k1 + k2 : k1 + k2 - num_phases;
}

std::size_t idx_sub(std::size_t k1, std::size_t k2, std::size_t num_phases)
{
    check_index(k1, num_phases);
    check_index(k2, num_phases);
    return k1 > k2 ? k1 - k2 : num_phases + k1 - k2;
}

ChannelRealization::ChannelRealization(std::vector<double> beta, std::vector<double> alpha)
    : beta_(std::move(beta)), alpha_(std::move(alpha))
{
    if (beta_.size() != alpha_.size())
        throw Error(ErrorKind::Dimension, "beta and alpha lengths differ");
    if (beta_.size() < 2)
        throw Error(ErrorKind::Dimension, "a channel needs a direct link and at least one element");
    for (double b : beta_) {
        if (!std::isfinite(b) || b < 0.0)
            throw Error(ErrorKind::Domain, "channel magnitudes must be finite and nonnegative");
    }
    for (double &a : alpha_) {
        if (!std::isfinite(a))
            throw Error(ErrorKind::Domain, "channel phases must be finite");
        a = wrap_pi(a);
    }
}

ChannelRealization ChannelRealization::from_coefficients(std::span<const Complex> h)
{
    std::vector<double> beta(h.size());
    std::vector<double> alpha(h.size());
    for (std::size_t n = 0; n < h.size(); ++n) {
        beta[n] = std::abs(h[n]);
        alpha[n] = std::arg(h[n]);
    }
    return {std::move(beta), std::move(alpha)};
}

double ChannelRealization::beta_sum() const noexcept
{
    return std::accumulate(beta_.begin(), beta_.end(), 0.0);
}

RisConfig RisConfig::all_on(std::vector<std::size_t> phase)
{
    RisConfig config;
    config.gain.assign(phase.size(), 1);
    config.phase = std::move(phase);
    return config;
}

ObjectiveValue objective(const ChannelRealization &channel, const PhaseSet &set,
                         const RisConfig &config)
{
    const std::size_t N = channel.num_elements();
    if (config.phase.size() != N || config.gain.size() != N)
        throw Error(ErrorKind::Dimension, "configuration has " + std::to_string(config.phase.size()) +
                                              " elements, channel has " + std::to_string(N));
    Complex g = channel.coefficient(0);
    for (std::size_t n = 0; n < N; ++n) {
        if (config.phase[n] >= set.size())
            throw Error(ErrorKind::Domain, "phase index out of range");
        if (config.gain[n])
            g += std::polar(channel.beta(n + 1), channel.alpha(n + 1) + set.phase(config.phase[n]));
    }
    return {g, std::norm(g)};
}

double snr_boost(const ChannelRealization &channel, const PhaseSet &set, const RisConfig &config)
{
    const double b0 = channel.beta(0);
    if (b0 == 0.0)
        throw Error(ErrorKind::UndefinedBoost, "SNR boost is undefined with a blocked direct link");
    return objective(channel, set, config).f / (b0 * b0);
}

double normalized_performance(const ChannelRealization &channel, const PhaseSet &set,
                              const RisConfig &config)
{
    const double total = channel.beta_sum();
    if (total == 0.0)
        throw Error(ErrorKind::DegenerateChannel, "all channel magnitudes are zero");
    return objective(channel, set, config).f / (total * total);
}

} // namespace risphase

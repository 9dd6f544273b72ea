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

#include "risphase/error.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace risphase {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute tolerance below which two alphabet phases are considered equal.
inline constexpr double kPhaseTolerance = 1e-12;

/// Wraps an angle into [-pi, pi).
double wrap_pi(double angle) noexcept;

/// Wraps an angle into [0, 2*pi).
double wrap_two_pi(double angle) noexcept;

inline double deg_to_rad(double deg) noexcept { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) noexcept { return rad * 180.0 / kPi; }

/// Discrete phase alphabet of a range-limited surface element.
///
/// Phases are strictly ascending inside [-pi, pi). `gap(k)` is the
/// counter-clockwise distance from phase k to its successor (the last gap
/// wraps back to the first phase), so the gaps always sum to 2*pi. At most
/// one gap can exceed pi; when it exists its index is `wide_gap_index()`.
class PhaseSet {
public:
    std::size_t size() const noexcept { return phases_.size(); }
    double phase(std::size_t k) const { return phases_.at(k); }
    double gap(std::size_t k) const { return gaps_.at(k); }
    std::span<const double> phases() const noexcept { return phases_; }
    std::span<const double> gaps() const noexcept { return gaps_; }

    /// phi_K - phi_1.
    double range() const noexcept { return phases_.back() - phases_.front(); }

    std::optional<std::size_t> wide_gap_index() const noexcept { return wide_gap_; }

    /// Cyclic successor / predecessor of a 0-based phase index.
    std::size_t next(std::size_t k) const noexcept { return k + 1 == size() ? 0 : k + 1; }
    std::size_t prev(std::size_t k) const noexcept { return k == 0 ? size() - 1 : k - 1; }

    friend bool operator==(const PhaseSet &, const PhaseSet &) = default;

private:
    friend PhaseSet make_phase_set(std::vector<double> phases);

    std::vector<double> phases_;
    std::vector<double> gaps_;
    std::optional<std::size_t> wide_gap_;
};

/// Builds a phase set from K >= 2 distinct angles in [-pi, pi), in any order.
PhaseSet make_phase_set(std::vector<double> phases);

/// K phases equally spaced over [-R/2, R/2]. Requires 0 < R < 2*pi*(K-1)/K.
PhaseSet equally_separated_set(double range, std::size_t num_phases);

/// K phases spaced 2*pi/K apart starting at -pi (full-circle alphabet).
PhaseSet uniform_full_circle_set(std::size_t num_phases);

/// Largest admissible range 2*pi*(K-1)/K (exclusive) for a restricted set.
double max_restricted_range(std::size_t num_phases) noexcept;

/// Cyclic index arithmetic on 1-based phase indices {1..K}.
std::size_t idx_add(std::size_t k1, std::size_t k2, std::size_t num_phases);
std::size_t idx_sub(std::size_t k1, std::size_t k2, std::size_t num_phases);

/// Channel coefficients h_n = beta_n * exp(j alpha_n), n = 0..N; h_0 is the direct link.
class ChannelRealization {
public:
    ChannelRealization(std::vector<double> beta, std::vector<double> alpha);

    static ChannelRealization from_coefficients(std::span<const Complex> h);

    /// Number of surface elements N.
    std::size_t num_elements() const noexcept { return beta_.size() - 1; }
    double beta(std::size_t n) const { return beta_.at(n); }
    double alpha(std::size_t n) const { return alpha_.at(n); }
    std::span<const double> beta() const noexcept { return beta_; }
    std::span<const double> alpha() const noexcept { return alpha_; }
    Complex coefficient(std::size_t n) const { return std::polar(beta_.at(n), alpha_.at(n)); }

    double beta_sum() const noexcept;

    friend bool operator==(const ChannelRealization &, const ChannelRealization &) = default;

private:
    std::vector<double> beta_;
    std::vector<double> alpha_;
};

/// Per-element selection: 0-based phase index and binary gain.
struct RisConfig {
    std::vector<std::size_t> phase;
    std::vector<std::uint8_t> gain;

    static RisConfig all_on(std::vector<std::size_t> phase);

    std::size_t size() const noexcept { return phase.size(); }

    friend bool operator==(const RisConfig &, const RisConfig &) = default;
    friend auto operator<=>(const RisConfig &, const RisConfig &) = default;
};

struct SolveOutcome {
    RisConfig config;
    Complex g;
    double objective = 0.0;
    std::size_t events_processed = 0;
    std::size_t complex_additions = 0;
};

struct ObjectiveValue {
    Complex g;
    double f = 0.0;
};

/// g = h_0 + sum_n gain_n h_n exp(j theta_n) and f = |g|^2.
ObjectiveValue objective(const ChannelRealization &channel, const PhaseSet &set,
                         const RisConfig &config);

/// f / beta_0^2. Throws UndefinedBoost when beta_0 == 0.
double snr_boost(const ChannelRealization &channel, const PhaseSet &set,
                 const RisConfig &config);

/// f / (sum_n beta_n)^2, always in [0, 1].
double normalized_performance(const ChannelRealization &channel, const PhaseSet &set,
                              const RisConfig &config);

} // namespace risphase

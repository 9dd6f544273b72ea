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

#include <cstdint>
#include <span>
#include <vector>

namespace risphase {

enum class UpdateKind : std::uint8_t { SetPhase, TurnOff, TurnOn };

/// One state change of one element when the sweep direction crosses an event angle.
/// For TurnOff/TurnOn, `phase` is the index following the wide gap: OFF
/// elements are parked there and switch back on with that phase.
struct UpdateRecord {
    std::uint32_t element; // 0-based element index n-1
    UpdateKind kind;
    std::uint32_t phase;   // 0-based phase index

    friend bool operator==(const UpdateRecord &, const UpdateRecord &) = default;
};

/// Sorted distinct event angles in [0, 2*pi) with the updates each one triggers.
class EventSchedule {
public:
    EventSchedule() = default;
    EventSchedule(std::vector<double> angles, std::vector<std::size_t> offsets,
                  std::vector<UpdateRecord> records);

    std::size_t size() const noexcept { return angles_.size(); }
    double angle(std::size_t l) const { return angles_.at(l); }
    std::span<const double> angles() const noexcept { return angles_; }
    std::span<const UpdateRecord> updates(std::size_t l) const;
    std::span<const UpdateRecord> records() const noexcept { return records_; }

private:
    std::vector<double> angles_;
    std::vector<std::size_t> offsets_; // size() + 1 entries into records_
    std::vector<UpdateRecord> records_;
};

/// Events within this angular distance share one schedule entry.
inline constexpr double kEventMergeTolerance = 1e-12;

/// One SetPhase(k) per (element, phase) at wrap(alpha_n + phi_k - gap_{k-1}/2).
EventSchedule build_events_alg1(const ChannelRealization &channel, const PhaseSet &set);

/// Schedule with ON/OFF events for sets that have a gap wider than pi.
/// The boundary that would hand element n over to the phase after the wide
/// gap is split into TurnOff at alpha_n + phi_kbar + pi/2 and TurnOn at
/// alpha_n + phi_{kbar+1} - pi/2. Without a wide gap the all-ON schedule is returned.
EventSchedule build_events_alg2(const ChannelRealization &channel, const PhaseSet &set);

/// Per-element argmax of cos(phi_k + alpha_n - mu); lowest index wins ties.
/// With `allow_off`, gains are ceil(cos(.)) and OFF elements are parked on the
/// phase after the wide gap.
RisConfig init_config(const ChannelRealization &channel, const PhaseSet &set, double mu_angle,
                      bool allow_off);

/// Global maximizer of |g|^2 with every element ON.
SolveOutcome algorithm1(const ChannelRealization &channel, const PhaseSet &set);

/// Global maximizer of |g|^2 over phases and binary gains.
/// Identical to algorithm1 when no gap exceeds pi.
SolveOutcome algorithm2(const ChannelRealization &channel, const PhaseSet &set);

/// Runs a schedule over all L events (closing the circle) and compares the
/// running g with a from-scratch evaluation after each event.
struct SweepCheck {
    double max_relative_drift = 0.0; // max |g_inc - g_exact| / sum(beta)
    double closure_residual = 0.0;   // |g_L - g_0| / sum(beta)
    std::size_t events = 0;
};

SweepCheck check_sweep(const ChannelRealization &channel, const PhaseSet &set,
                       const EventSchedule &schedule);

struct ElementCheck {
    bool phase_ok = true; // ON element sits at an argmax phase
    bool gain_ok = true;  // gain agrees with ceil(cos(.)) (or is ON when OFF is not permitted)
};

struct OptimalityReport {
    double mu_angle = 0.0;
    std::vector<ElementCheck> elements;

    bool all_pass() const noexcept;
};

/// Checks the necessary per-element conditions at mu = g/|g| for `config`.
/// Throws UndefinedDirection when g == 0.
OptimalityReport verify_optimality_conditions(const ChannelRealization &channel,
                                              const PhaseSet &set, const RisConfig &config,
                                              bool off_permitted, double tolerance = 1e-9);

} // namespace risphase

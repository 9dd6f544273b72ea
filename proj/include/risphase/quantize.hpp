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

#include <vector>

namespace risphase {

struct QuantizerOutput {
    std::vector<double> theta_cont; // continuous per-element optimum, [-pi, pi)
    RisConfig config;
    std::vector<double> delta;      // chosen phase minus theta_cont, wrapped to [-pi, pi)
};

/// Per-element phases wrap(alpha_0 - alpha_n) that co-phase every path with the direct link.
std::vector<double> continuous_solution(const ChannelRealization &channel);

/// Index of the alphabet phase selected by the midpoint threshold rule.
///
/// phi_1 covers [-pi, (phi_1+phi_2)/2), phi_k covers the half-open interval
/// between its two neighbouring midpoints and phi_K takes everything else.
/// The wrap gap is therefore split at +-pi, which matches the nearest point
/// on the circle only for alphabets symmetric about zero.
std::size_t npq_select(double theta_cont, const PhaseSet &set) noexcept;

/// Nonuniform polar quantization: every element ON at its threshold-rule phase.
QuantizerOutput npq(const ChannelRealization &channel, const PhaseSet &set);

/// Closed-form NPQ for the equally separated alphabet of range R and K phases:
/// clamp to +-R/2, otherwise round to the grid of spacing R/(K-1).
double npq_rounding(double theta_cont, double range, std::size_t num_phases);

/// Extended NPQ: NPQ phases, element switched OFF when cos(delta_n) <= 0.
QuantizerOutput enpq(const ChannelRealization &channel, const PhaseSet &set);

} // namespace risphase

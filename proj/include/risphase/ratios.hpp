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

namespace risphase {

/// Large-N expected ratio of quantized to continuous received power, in [0, 1].
class RatioValue {
public:
    explicit RatioValue(double value);
    double value() const noexcept { return value_; }
    operator double() const noexcept { return value_; }

private:
    double value_;
};

/// Normalized sinc: sin(pi x) / (pi x), sinc(0) = 1.
double sinc(double x) noexcept;

/// (1/pi^2) [sum_k sin(gap_k / 2)]^2 for an arbitrary alphabet quantized by nearest phase.
RatioValue approx_ratio_arbitrary(const PhaseSet &set);

/// NPQ ratio for K equally separated phases over range R (radians).
RatioValue approx_ratio_npq(double range, std::size_t num_phases);

/// ENPQ ratio (1/pi^2) [(K-1) sin(R/(2(K-1))) + 1]^2.
RatioValue approx_ratio_enpq(double range, std::size_t num_phases);

struct PlacementCheck {
    bool pass = true;
    double baseline = 0.0;     // ratio of the unperturbed set
    double worst_excess = 0.0; // max over trials of perturbed - baseline (<= 1e-12 to pass)
    std::size_t trials = 0;
};

/// Perturbs the interior phases of the equally separated set (endpoints pinned
/// at +-R/2, order preserved) and checks the ratio never improves.
PlacementCheck placement_perturbation_check(double range, std::size_t num_phases,
                                            std::size_t trials, std::uint64_t seed);

/// Same check for the uniform full-circle alphabet, perturbing every phase.
PlacementCheck full_circle_perturbation_check(std::size_t num_phases, std::size_t trials,
                                              std::uint64_t seed);

} // namespace risphase

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

#include "risphase/quantize.hpp"

#include <cmath>

namespace risphase {

std::vector<double> continuous_solution(const ChannelRealization &channel)
{
    const std::size_t N = channel.num_elements();
    std::vector<double> theta(N);
    for (std::size_t n = 0; n < N; ++n)
        theta[n] = wrap_pi(channel.alpha(0) - channel.alpha(n + 1));
    return theta;
}

std::size_t npq_select(double theta_cont, const PhaseSet &set) noexcept
{
    // Number of midpoints at or below theta; ties go to the upper phase.
    std::size_t k = 0;
    const auto phases = set.phases();
    while (k + 1 < phases.size() && theta_cont >= 0.5 * (phases[k] + phases[k + 1]))
        ++k;
    return k;
}

QuantizerOutput npq(const ChannelRealization &channel, const PhaseSet &set)
{
    QuantizerOutput out;
    out.theta_cont = continuous_solution(channel);
    const std::size_t N = out.theta_cont.size();
    out.config.phase.resize(N);
    out.config.gain.assign(N, 1);
    out.delta.resize(N);
    for (std::size_t n = 0; n < N; ++n) {
        const std::size_t k = npq_select(out.theta_cont[n], set);
        out.config.phase[n] = k;
        out.delta[n] = wrap_pi(set.phase(k) - out.theta_cont[n]);
    }
    return out;
}

double npq_rounding(double theta_cont, double range, std::size_t num_phases)
{
    if (num_phases < 2 || !(range > 0.0) || range >= max_restricted_range(num_phases))
        throw Error(ErrorKind::RangeViolation, "npq_rounding needs 0 < R < 2*pi*(K-1)/K");
    const double half = range / 2.0;
    if (theta_cont >= half)
        return half;
    if (theta_cont < -half)
        return -half;
    const double spacing = range / static_cast<double>(num_phases - 1);
    const double x = (theta_cont + half) / spacing;
    const double rounded = std::copysign(std::floor(std::abs(x) + 0.5), x);
    return rounded * spacing - half;
}

QuantizerOutput enpq(const ChannelRealization &channel, const PhaseSet &set)
{
    QuantizerOutput out = npq(channel, set);
    for (std::size_t n = 0; n < out.delta.size(); ++n) {
        // ceil(cos(delta)) for cos in [-1, 1]; cos == 0 switches the element off
        out.config.gain[n] = std::cos(out.delta[n]) > 0.0 ? 1 : 0;
    }
    return out;
}

} // namespace risphase

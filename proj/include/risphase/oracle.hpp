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

/// Upper bound on enumerated configurations per exhaustive search.
inline constexpr std::uint64_t kOracleBudget = 10'000'000;

/// Brute force over all K^N phase assignments, every element ON.
/// Ties resolve to the lexicographically smallest phase vector.
SolveOutcome exhaustive_all_on(const ChannelRealization &channel, const PhaseSet &set);

/// Brute force over (K+1)^N assignments where each element is OFF or at one of
/// K phases. OFF elements are reported on the phase after the wide gap (phase 0
/// when there is none).
SolveOutcome exhaustive_on_off(const ChannelRealization &channel, const PhaseSet &set);

/// OpenMP versions of the two searches. Chunks are reduced by (f, then
/// lexicographic config), so the result matches the serial search bit for bit.
/// `workers` == 0 uses the OpenMP default.
SolveOutcome exhaustive_all_on_parallel(const ChannelRealization &channel, const PhaseSet &set,
                                        int workers = 0);
SolveOutcome exhaustive_on_off_parallel(const ChannelRealization &channel, const PhaseSet &set,
                                        int workers = 0);

} // namespace risphase

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

#include <ostream>

namespace risphase::cli {

/// Exit codes: 0 success, 2 usage / input / domain errors, 3 oracle budget exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Entry point behind the `risphase` executable. Results go to `out`,
/// diagnostics to `err`. RIS_THREADS caps sweep parallelism.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace risphase::cli

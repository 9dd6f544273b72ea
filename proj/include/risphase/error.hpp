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

#include <stdexcept>
#include <string>

namespace risphase {

enum class ErrorKind {
    InvalidAlphabet,    // duplicate or too few phases
    Domain,             // argument outside its admissible set
    RangeViolation,     // R >= 2*pi*(K-1)/K for an equally separated set
    Dimension,          // channel / configuration length mismatch
    UndefinedBoost,     // snr_boost with a blocked direct link
    DegenerateChannel,  // every channel magnitude is zero
    Budget,             // exhaustive search larger than the evaluation budget
    UndefinedDirection, // composite vector g == 0
    Config,             // invalid experiment or CLI combination
    Parse               // malformed channel file
};

const char *to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace risphase

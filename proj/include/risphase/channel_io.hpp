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

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace risphase {

/// Parses {"beta": [b0..bN], "alpha": [a0..aN]} (radians). Throws Error(Parse).
ChannelRealization parse_channel_json(std::string_view text);

/// A single JSON object, or newline-delimited objects (blank lines ignored).
std::vector<ChannelRealization> read_channels(std::istream &in);

std::string channel_to_json(const ChannelRealization &channel);

} // namespace risphase

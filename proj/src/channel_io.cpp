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

#include "risphase/channel_io.hpp"

#include <json.hpp>

#include <iterator>
#include <sstream>
#include <string>

namespace risphase {

namespace {

std::vector<double> number_array(const nlohmann::json &doc, const char *key)
{
    const auto it = doc.find(key);
    if (it == doc.end() || !it->is_array())
        throw Error(ErrorKind::Parse, std::string("channel object needs a numeric array \"") + key + "\"");
    std::vector<double> values;
    values.reserve(it->size());
    for (const auto &v : *it) {
        if (!v.is_number())
            throw Error(ErrorKind::Parse, std::string("non-numeric entry in \"") + key + "\"");
        values.push_back(v.get<double>());
    }
    return values;
}

ChannelRealization from_document(const nlohmann::json &doc)
{
    if (!doc.is_object())
        throw Error(ErrorKind::Parse, "channel must be a JSON object");
    try {
        return {number_array(doc, "beta"), number_array(doc, "alpha")};
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::Parse)
            throw;
        throw Error(ErrorKind::Parse, std::string("invalid channel: ") + e.what());
    }
}

} // namespace

ChannelRealization parse_channel_json(std::string_view text)
{
    const auto doc = nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
    if (doc.is_discarded())
        throw Error(ErrorKind::Parse, "malformed JSON channel");
    return from_document(doc);
}

std::vector<ChannelRealization> read_channels(std::istream &in)
{
    const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto whole = nlohmann::json::parse(content, nullptr, false);
    if (!whole.is_discarded())
        return {from_document(whole)};

    std::vector<ChannelRealization> channels;
    std::istringstream lines(content);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            channels.push_back(parse_channel_json(line));
        } catch (const Error &e) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (channels.empty())
        throw Error(ErrorKind::Parse, "no channel objects found");
    return channels;
}

std::string channel_to_json(const ChannelRealization &channel)
{
    nlohmann::ordered_json doc;
    doc["beta"] = std::vector<double>(channel.beta().begin(), channel.beta().end());
    doc["alpha"] = std::vector<double>(channel.alpha().begin(), channel.alpha().end());
    return doc.dump();
}

} // namespace risphase

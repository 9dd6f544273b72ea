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

#include "risphase/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <omp.h>

namespace risphase {

namespace {

struct Candidate {
    double f = -1.0;
    std::vector<std::uint32_t> choice; // per element; == K means OFF

    // total order: larger f first, then lexicographically smaller choice
    bool better_than(const Candidate &other) const
    {
        if (f != other.f)
            return f > other.f;
        return choice < other.choice;
    }
};

class Enumeration {
public:
    Enumeration(const ChannelRealization &channel, const PhaseSet &set, bool with_off)
        : channel_(channel), set_(set), with_off_(with_off),
          radix_(set.size() + (with_off ? 1 : 0)), N_(channel.num_elements())
    {
        total_ = 1;
        for (std::size_t n = 0; n < N_; ++n) {
            if (total_ > kOracleBudget / radix_)
                throw Error(ErrorKind::Budget, std::to_string(radix_) + "^" + std::to_string(N_) +
                                                   " configurations exceed the exhaustive-search budget");
            total_ *= radix_;
        }
        terms_.resize(N_ * radix_);
        for (std::size_t n = 0; n < N_; ++n) {
            for (std::size_t k = 0; k < set.size(); ++k)
                terms_[n * radix_ + k] = std::polar(channel.beta(n + 1), channel.alpha(n + 1) + set.phase(k));
            if (with_off)
                terms_[n * radix_ + set.size()] = Complex(0.0, 0.0);
        }
    }

    std::uint64_t total() const noexcept { return total_; }

    // Best candidate among configurations [begin, end) in little-endian mixed radix.
    Candidate search(std::uint64_t begin, std::uint64_t end) const
    {
        Candidate best;
        if (begin >= end)
            return best;
        Candidate current;
        current.choice.resize(N_);
        std::uint64_t code = begin;
        for (std::size_t n = 0; n < N_; ++n) {
            current.choice[n] = static_cast<std::uint32_t>(code % radix_);
            code /= radix_;
        }
        for (std::uint64_t i = begin; i < end; ++i) {
            Complex g = channel_.coefficient(0);
            for (std::size_t n = 0; n < N_; ++n)
                g += terms_[n * radix_ + current.choice[n]];
            current.f = std::norm(g);
            if (best.choice.empty() || current.better_than(best))
                best = current;
            // odometer increment, element 0 fastest
            for (std::size_t n = 0; n < N_; ++n) {
                if (++current.choice[n] < radix_)
                    break;
                current.choice[n] = 0;
            }
        }
        return best;
    }

    SolveOutcome finish(const Candidate &best) const
    {
        const std::size_t K = set_.size();
        const auto wide = set_.wide_gap_index();
        const std::size_t parked = wide ? set_.next(*wide) : 0;
        RisConfig config;
        config.phase.resize(N_);
        config.gain.resize(N_);
        for (std::size_t n = 0; n < N_; ++n) {
            const bool off = with_off_ && best.choice[n] == K;
            config.phase[n] = off ? parked : best.choice[n];
            config.gain[n] = off ? 0 : 1;
        }
        SolveOutcome out;
        const ObjectiveValue value = objective(channel_, set_, config);
        out.config = std::move(config);
        out.g = value.g;
        out.objective = value.f;
        out.events_processed = total_;
        return out;
    }

private:
    const ChannelRealization &channel_;
    const PhaseSet &set_;
    bool with_off_;
    std::size_t radix_;
    std::size_t N_;
    std::uint64_t total_ = 1;
    std::vector<Complex> terms_;
};

SolveOutcome serial_search(const ChannelRealization &channel, const PhaseSet &set, bool with_off)
{
    const Enumeration e(channel, set, with_off);
    return e.finish(e.search(0, e.total()));
}

SolveOutcome parallel_search(const ChannelRealization &channel, const PhaseSet &set, bool with_off,
                             int workers)
{
    const Enumeration e(channel, set, with_off);
    const std::uint64_t total = e.total();
    const std::uint64_t chunk = std::max<std::uint64_t>(4096, total / 256 + 1);
    const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
    std::vector<Candidate> local(static_cast<std::size_t>(chunks));

    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
        local[static_cast<std::size_t>(c)] = e.search(begin, std::min(total, begin + chunk));
    }

    Candidate best = local.front();
    for (const Candidate &cand : local) {
        if (cand.better_than(best))
            best = cand;
    }
    return e.finish(best);
}

} // namespace

SolveOutcome exhaustive_all_on(const ChannelRealization &channel, const PhaseSet &set)
{
    return serial_search(channel, set, false);
}

SolveOutcome exhaustive_on_off(const ChannelRealization &channel, const PhaseSet &set)
{
    return serial_search(channel, set, true);
}

SolveOutcome exhaustive_all_on_parallel(const ChannelRealization &channel, const PhaseSet &set,
                                        int workers)
{
    return parallel_search(channel, set, false, workers);
}

SolveOutcome exhaustive_on_off_parallel(const ChannelRealization &channel, const PhaseSet &set,
                                        int workers)
{
    return parallel_search(channel, set, true, workers);
}

} // namespace risphase

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

#include "risphase/optimal.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace risphase {

EventSchedule::EventSchedule(std::vector<double> angles, std::vector<std::size_t> offsets,
                             std::vector<UpdateRecord> records)
    : angles_(std::move(angles)), offsets_(std::move(offsets)), records_(std::move(records))
{
    if (offsets_.size() != angles_.size() + 1 || offsets_.back() != records_.size())
        throw std::invalid_argument("EventSchedule: offsets do not match records");
}

std::span<const UpdateRecord> EventSchedule::updates(std::size_t l) const
{
    if (l >= angles_.size())
        throw std::out_of_range("EventSchedule::updates");
    return std::span<const UpdateRecord>(records_).subspan(offsets_[l], offsets_[l + 1] - offsets_[l]);
}

namespace {

struct RawEvent {
    double angle;
    UpdateRecord record;
};

double event_angle(double angle)
{
    const double a = wrap_two_pi(angle);
    // a point just below 2*pi is the same boundary as 0
    return a >= kTwoPi - kEventMergeTolerance ? 0.0 : a;
}

EventSchedule merge_events(std::vector<RawEvent> raw)
{
    std::sort(raw.begin(), raw.end(), [](const RawEvent &a, const RawEvent &b) {
        if (a.angle != b.angle)
            return a.angle < b.angle;
        if (a.record.element != b.record.element)
            return a.record.element < b.record.element;
        return a.record.kind < b.record.kind;
    });

    std::vector<double> angles;
    std::vector<std::size_t> offsets;
    std::vector<UpdateRecord> records;
    records.reserve(raw.size());
    for (const RawEvent &e : raw) {
        if (angles.empty() || e.angle - angles.back() > kEventMergeTolerance) {
            angles.push_back(e.angle);
            offsets.push_back(records.size());
        }
        records.push_back(e.record);
    }
    offsets.push_back(records.size());
    return {std::move(angles), std::move(offsets), std::move(records)};
}

void check_dimensions(const ChannelRealization &channel)
{
    if (channel.num_elements() > UINT32_MAX)
        throw Error(ErrorKind::Dimension, "too many elements");
}

// Mutable per-invocation sweep state: current phases, gains and g.
class Sweep {
public:
    Sweep(const ChannelRealization &channel, const PhaseSet &set, const EventSchedule &schedule)
        : channel_(channel), set_(set), schedule_(schedule)
    {
        const std::size_t N = channel.num_elements();
        state_.phase.assign(N, 0);
        state_.gain.assign(N, 1);
        // The state on the arc (lambda_L, lambda_1 + 2*pi) is what each
        // element's last record leaves behind.
        for (const UpdateRecord &r : schedule.records())
            apply_state(r);

        g_ = channel.coefficient(0);
        for (std::size_t n = 0; n < N; ++n) {
            if (state_.gain[n])
                g_ += term(n, state_.phase[n]);
        }
        additions_ = N;
    }

    void apply(std::size_t l)
    {
        for (const UpdateRecord &r : schedule_.updates(l)) {
            const std::size_t n = r.element;
            switch (r.kind) {
            case UpdateKind::SetPhase:
                if (!state_.gain[n])
                    throw std::logic_error("phase update on an OFF element " + std::to_string(n));
                g_ += term(n, r.phase) - term(n, state_.phase[n]);
                additions_ += 2;
                break;
            case UpdateKind::TurnOff:
                if (!state_.gain[n] || state_.phase[n] != set_.prev(r.phase))
                    throw std::logic_error("element " + std::to_string(n) +
                                           " is not at the phase before the wide gap when switching off");
                g_ -= term(n, state_.phase[n]);
                additions_ += 1;
                break;
            case UpdateKind::TurnOn:
                if (state_.gain[n])
                    throw std::logic_error("element " + std::to_string(n) + " is already ON");
                g_ += term(n, r.phase);
                additions_ += 1;
                break;
            }
            apply_state(r);
            ++records_;
        }
    }

    const RisConfig &state() const noexcept { return state_; }
    Complex g() const noexcept { return g_; }
    std::size_t additions() const noexcept { return additions_; }
    std::size_t records() const noexcept { return records_; }

private:
    Complex term(std::size_t n, std::size_t k) const
    {
        return std::polar(channel_.beta(n + 1), channel_.alpha(n + 1) + set_.phase(k));
    }

    void apply_state(const UpdateRecord &r)
    {
        state_.phase[r.element] = r.phase;
        state_.gain[r.element] = r.kind == UpdateKind::TurnOff ? 0 : 1;
    }

    const ChannelRealization &channel_;
    const PhaseSet &set_;
    const EventSchedule &schedule_;
    RisConfig state_;
    Complex g_;
    std::size_t additions_ = 0;
    std::size_t records_ = 0;
};

SolveOutcome run_sweep(const ChannelRealization &channel, const PhaseSet &set,
                       const EventSchedule &schedule)
{
    Sweep sweep(channel, set, schedule);
    RisConfig best = sweep.state();
    double best_norm = std::norm(sweep.g());

    // lambda_L is skipped: crossing it restores the initial state.
    const std::size_t L = schedule.size();
    for (std::size_t l = 0; l + 1 < L; ++l) {
        sweep.apply(l);
#ifndef NDEBUG
        if (l % 64 == 0) {
            const Complex exact = objective(channel, set, sweep.state()).g;
            assert(std::abs(exact - sweep.g()) <= 1e-9 * std::max(1.0, channel.beta_sum()));
        }
#endif
        const double norm = std::norm(sweep.g());
        if (norm > best_norm) {
            best_norm = norm;
            best = sweep.state();
        }
    }

    SolveOutcome out;
    const ObjectiveValue value = objective(channel, set, best);
    out.config = std::move(best);
    out.g = value.g;
    out.objective = value.f;
    out.events_processed = sweep.records();
    out.complex_additions = sweep.additions();
    return out;
}

} // namespace

EventSchedule build_events_alg1(const ChannelRealization &channel, const PhaseSet &set)
{
    check_dimensions(channel);
    const std::size_t N = channel.num_elements();
    const std::size_t K = set.size();
    std::vector<RawEvent> raw;
    raw.reserve(N * K);
    for (std::size_t n = 0; n < N; ++n) {
        const double alpha = channel.alpha(n + 1);
        for (std::size_t k = 0; k < K; ++k) {
            const double angle = event_angle(alpha + set.phase(k) - set.gap(set.prev(k)) / 2.0);
            raw.push_back({angle, {static_cast<std::uint32_t>(n), UpdateKind::SetPhase,
                                   static_cast<std::uint32_t>(k)}});
        }
    }
    return merge_events(std::move(raw));
}

EventSchedule build_events_alg2(const ChannelRealization &channel, const PhaseSet &set)
{
    const auto wide = set.wide_gap_index();
    if (!wide)
        return build_events_alg1(channel, set);
    check_dimensions(channel);

    const std::size_t N = channel.num_elements();
    const std::size_t K = set.size();
    const std::size_t before = *wide;
    const std::size_t after = set.next(before);
    std::vector<RawEvent> raw;
    raw.reserve(N * (K + 1));
    for (std::size_t n = 0; n < N; ++n) {
        const double alpha = channel.alpha(n + 1);
        const auto element = static_cast<std::uint32_t>(n);
        for (std::size_t k = 0; k < K; ++k) {
            if (k == after)
                continue;
            const double angle = event_angle(alpha + set.phase(k) - set.gap(set.prev(k)) / 2.0);
            raw.push_back({angle, {element, UpdateKind::SetPhase, static_cast<std::uint32_t>(k)}});
        }
        raw.push_back({event_angle(alpha + set.phase(before) + kPi / 2.0),
                       {element, UpdateKind::TurnOff, static_cast<std::uint32_t>(after)}});
        raw.push_back({event_angle(alpha + set.phase(after) - kPi / 2.0),
                       {element, UpdateKind::TurnOn, static_cast<std::uint32_t>(after)}});
    }
    return merge_events(std::move(raw));
}

RisConfig init_config(const ChannelRealization &channel, const PhaseSet &set, double mu_angle,
                      bool allow_off)
{
    const std::size_t N = channel.num_elements();
    RisConfig config;
    config.phase.resize(N);
    config.gain.assign(N, 1);
    const auto wide = set.wide_gap_index();
    for (std::size_t n = 0; n < N; ++n) {
        const double alpha = channel.alpha(n + 1);
        std::size_t best = 0;
        double best_cos = std::cos(set.phase(0) + alpha - mu_angle);
        for (std::size_t k = 1; k < set.size(); ++k) {
            const double c = std::cos(set.phase(k) + alpha - mu_angle);
            if (c > best_cos) {
                best_cos = c;
                best = k;
            }
        }
        config.phase[n] = best;
        if (allow_off && !(best_cos > 0.0)) {
            config.gain[n] = 0;
            if (wide)
                config.phase[n] = set.next(*wide);
        }
    }
    return config;
}

SolveOutcome algorithm1(const ChannelRealization &channel, const PhaseSet &set)
{
    return run_sweep(channel, set, build_events_alg1(channel, set));
}

SolveOutcome algorithm2(const ChannelRealization &channel, const PhaseSet &set)
{
    if (!set.wide_gap_index())
        return algorithm1(channel, set);
    return run_sweep(channel, set, build_events_alg2(channel, set));
}

SweepCheck check_sweep(const ChannelRealization &channel, const PhaseSet &set,
                       const EventSchedule &schedule)
{
    Sweep sweep(channel, set, schedule);
    const Complex g0 = sweep.g();
    const double scale = std::max(channel.beta_sum(), 1e-300);
    SweepCheck check;
    for (std::size_t l = 0; l < schedule.size(); ++l) {
        sweep.apply(l);
        const Complex exact = objective(channel, set, sweep.state()).g;
        check.max_relative_drift = std::max(check.max_relative_drift, std::abs(exact - sweep.g()) / scale);
        ++check.events;
    }
    check.closure_residual = std::abs(sweep.g() - g0) / scale;
    return check;
}

bool OptimalityReport::all_pass() const noexcept
{
    return std::all_of(elements.begin(), elements.end(),
                       [](const ElementCheck &e) { return e.phase_ok && e.gain_ok; });
}

OptimalityReport verify_optimality_conditions(const ChannelRealization &channel,
                                              const PhaseSet &set, const RisConfig &config,
                                              bool off_permitted, double tolerance)
{
    const Complex g = objective(channel, set, config).g;
    if (g == Complex(0.0, 0.0))
        throw Error(ErrorKind::UndefinedDirection, "g = 0 has no direction");

    OptimalityReport report;
    report.mu_angle = std::arg(g);
    const std::size_t N = channel.num_elements();
    report.elements.resize(N);
    for (std::size_t n = 0; n < N; ++n) {
        const double alpha = channel.alpha(n + 1);
        double best_cos = -2.0;
        for (std::size_t k = 0; k < set.size(); ++k)
            best_cos = std::max(best_cos, std::cos(set.phase(k) + alpha - report.mu_angle));
        const double own_cos = std::cos(set.phase(config.phase[n]) + alpha - report.mu_angle);

        ElementCheck &check = report.elements[n];
        if (config.gain[n]) {
            check.phase_ok = own_cos >= best_cos - tolerance;
            check.gain_ok = !off_permitted || own_cos >= -tolerance;
        } else {
            check.gain_ok = off_permitted && best_cos <= tolerance;
        }
    }
    return report;
}

} // namespace risphase

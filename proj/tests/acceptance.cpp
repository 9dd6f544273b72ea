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

// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit on any failure.

#include "risphase/montecarlo.hpp"
#include "risphase/optimal.hpp"
#include "risphase/oracle.hpp"
#include "risphase/quantize.hpp"
#include "risphase/ratios.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace risphase;

namespace {

struct Instance {
    ChannelRealization channel;
    PhaseSet set;
    SolveOutcome fast;
    SolveOutcome exact;
};

bool rel_close(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

std::vector<Instance> instances_all_on;
std::vector<Instance> instances_on_off;

template <class Pick>
std::vector<Instance> make_instances(std::uint64_t seed, std::size_t n_lo, std::size_t n_hi,
                                     std::vector<std::size_t> ks, std::vector<double> ranges_deg, Pick solve)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_n(n_lo, n_hi);
    std::uniform_int_distribution<std::size_t> pick_k(0, ks.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_r(0, ranges_deg.size() - 1);
    std::vector<Instance> out;
    while (out.size() < 500) {
        const std::size_t K = ks[pick_k(rng)];
        const double R = deg_to_rad(ranges_deg[pick_r(rng)]);
        if (R >= max_restricted_range(K))
            continue;
        ChannelModelConfig model;
        model.n_elements = pick_n(rng);
        std::mt19937_64 draw(trial_seed(seed, out.size()));
        ChannelRealization channel = sample_channel(model, draw);
        PhaseSet set = equally_separated_set(R, K);
        auto [fast, exact] = solve(channel, set);
        out.push_back({std::move(channel), std::move(set), std::move(fast), std::move(exact)});
    }
    return out;
}

bool criterion1(std::string &detail)
{
    instances_all_on = make_instances(101, 2, 8, {2, 3, 4}, {60, 90, 120, 180, 240},
                                      [](const ChannelRealization &c, const PhaseSet &s) {
                                          return std::pair{algorithm1(c, s), exhaustive_all_on(c, s)};
                                      });
    std::size_t bad = 0;
    for (const Instance &i : instances_all_on)
        bad += !rel_close(i.fast.objective, i.exact.objective, 1e-9);
    detail = std::to_string(instances_all_on.size()) + " instances, " + std::to_string(bad) + " mismatches";
    return bad == 0;
}

bool criterion2(std::string &detail)
{
    instances_on_off = make_instances(202, 2, 6, {2, 3}, {60, 90, 120},
                                      [](const ChannelRealization &c, const PhaseSet &s) {
                                          return std::pair{algorithm2(c, s), exhaustive_on_off(c, s)};
                                      });
    std::size_t bad = 0;
    for (const Instance &i : instances_on_off)
        bad += !rel_close(i.fast.objective, i.exact.objective, 1e-9);
    detail = std::to_string(instances_on_off.size()) + " instances, " + std::to_string(bad) + " mismatches";
    return bad == 0;
}

bool criterion3(std::string &detail)
{
    std::size_t audited = 0, bad = 0;
    for (const auto *group : {&instances_all_on, &instances_on_off}) {
        const bool off = group == &instances_on_off;
        for (const Instance &i : *group) {
            for (const SolveOutcome *s : {&i.fast, &i.exact}) {
                ++audited;
                try {
                    bad += !verify_optimality_conditions(i.channel, i.set, s->config, off).all_pass();
                } catch (const Error &) {
                    ++bad;
                }
            }
        }
    }
    detail = std::to_string(audited) + " outputs audited, " + std::to_string(bad) + " failures";
    return audited == 2000 && bad == 0;
}

bool criterion4(std::string &detail)
{
    std::size_t bad = 0;
    double worst_events = 0.0, worst_adds = 0.0;
    for (const auto *group : {&instances_all_on, &instances_on_off}) {
        const bool alg2 = group == &instances_on_off;
        for (const Instance &i : *group) {
            const double N = static_cast<double>(i.channel.num_elements());
            const double K = static_cast<double>(i.set.size());
            const double event_cap = alg2 ? N * (K + 1) : N * K;
            const double add_cap = N * (2 * K + 1);
            const double e = static_cast<double>(i.fast.events_processed);
            const double a = static_cast<double>(i.fast.complex_additions);
            worst_events = std::max(worst_events, e / event_cap);
            worst_adds = std::max(worst_adds, a / add_cap);
            bad += e > event_cap || a > add_cap;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "max events/bound %.3f, max additions/bound %.3f, %zu violations",
                  worst_events, worst_adds, bad);
    detail = buf;
    return bad == 0;
}

bool criterion5(std::string &detail)
{
    ExperimentSpec spec;
    spec.kind = ExperimentKind::PerfVsN;
    spec.methods = {Method::Npq, Method::Enpq};
    spec.num_elements = {256};
    spec.trials = 10'000;
    spec.base_seed = 5;
    ChannelModelConfig model;
    model.kappa = 0.0;
    bool ok = true;
    detail.clear();
    const std::array<std::pair<double, std::size_t>, 4> cells{{{90, 2}, {90, 4}, {120, 4}, {150, 2}}};
    for (auto [deg, K] : cells) {
        spec.ranges_deg = {deg};
        spec.num_phases = {K};
        const auto agg = aggregate(run_experiment(spec, model));
        const double R = deg_to_rad(deg);
        const double target_npq = approx_ratio_npq(R, K);
        const double target_enpq = approx_ratio_enpq(R, K);
        const double dn = agg[0].mean_normalized_performance - target_npq;
        const double de = agg[1].mean_normalized_performance - target_enpq;
        ok = ok && std::abs(dn) <= 0.01 && std::abs(de) <= 0.01;
        char buf[120];
        std::snprintf(buf, sizeof buf, "%s(%g,%zu) npq %+.4f enpq %+.4f", detail.empty() ? "" : "; ", deg, K, dn,
                      de);
        detail += buf;
    }
    return ok;
}

bool criterion6(std::string &detail)
{
    const double target = 1.0 / (kPi * kPi);
    double worst = 0.0;
    for (std::size_t K : {2, 4, 8})
        worst = std::max(worst, std::abs(approx_ratio_enpq(1e-9, K) - target));
    char buf[80];
    std::snprintf(buf, sizeof buf, "max |E - 1/pi^2| = %.2e", worst);
    detail = buf;
    return worst <= 1e-6;
}

bool criterion7(std::string &detail)
{
    bool dominance = true;
    for (int deg = 1; deg < 115; ++deg) {
        const double R = deg_to_rad(deg);
        dominance = dominance && approx_ratio_enpq(R, 2) > approx_ratio_npq(R, 8);
    }
    // root of 1/pi^2 = E_npq(R, 8) by bisection on [1, 179] degrees
    const double level = 1.0 / (kPi * kPi);
    double lo = 1.0, hi = 179.0;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (approx_ratio_npq(deg_to_rad(mid), 8) < level ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    char buf[120];
    std::snprintf(buf, sizeof buf, "E_onoff(R,2) > E(R,8) for R in 1..114 deg: %s; crossing with 1/pi^2 at %.3f deg",
                  dominance ? "yes" : "no", root);
    detail = buf;
    return dominance && root >= 55.0 && root <= 62.0;
}

bool criterion8(std::string &detail)
{
    const PlacementCheck a = placement_perturbation_check(deg_to_rad(120.0), 3, 1000, 81);
    const PlacementCheck b = placement_perturbation_check(deg_to_rad(150.0), 4, 1000, 82);
    const PlacementCheck c = full_circle_perturbation_check(2, 1000, 83);
    const PlacementCheck d = full_circle_perturbation_check(4, 1000, 84);
    double worst = -1.0;
    for (const PlacementCheck *p : {&a, &b, &c, &d})
        worst = std::max(worst, p->worst_excess);
    char buf[120];
    std::snprintf(buf, sizeof buf, "4 x 1000 perturbations, max improvement over equal spacing %.3e", worst);
    detail = buf;
    return a.pass && b.pass && c.pass && d.pass;
}

bool criterion9(std::string &detail)
{
    const double tol = 1e-9;
    ChannelModelConfig model;
    model.n_elements = 64;
    std::size_t bad = 0;
    {
        const PhaseSet set = equally_separated_set(deg_to_rad(90.0), 2);
        for (std::uint64_t t = 0; t < 10'000; ++t) {
            std::mt19937_64 rng(trial_seed(909, t));
            const ChannelRealization c = sample_channel(model, rng);
            const double f2 = algorithm2(c, set).objective;
            const double f1 = algorithm1(c, set).objective;
            const double fn = objective(c, set, npq(c, set).config).f;
            const double fe = objective(c, set, enpq(c, set).config).f;
            const double slack = tol * f2;
            bad += f2 < f1 - slack || f1 < fn - slack || f2 < fe - slack;
        }
    }
    std::size_t unequal = 0;
    {
        const PhaseSet set = equally_separated_set(kPi, 4);
        for (std::uint64_t t = 0; t < 10'000; ++t) {
            std::mt19937_64 rng(trial_seed(910, t));
            const ChannelRealization c = sample_channel(model, rng);
            unequal += !rel_close(algorithm1(c, set).objective, algorithm2(c, set).objective, tol);
        }
    }
    detail = std::to_string(bad) + " dominance violations in 10000 trials; " + std::to_string(unequal) +
             " alg1/alg2 mismatches at R = 180 deg, K = 4";
    return bad == 0 && unequal == 0;
}

bool criterion10(std::string &detail)
{
    double worst = 0.0;
    for (std::size_t K : {2, 3, 4, 6, 8}) {
        const double s = sinc(1.0 / static_cast<double>(K));
        worst = std::max(worst, std::abs(approx_ratio_npq(max_restricted_range(K) - 1e-9, K) - s * s));
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "max |E - sinc^2(1/K)| = %.2e", worst);
    detail = buf;
    return worst <= 1e-6;
}

} // namespace

int main()
{
    const std::array<std::pair<const char *, std::function<bool(std::string &)>>, 10> criteria{{
        {"oracle equivalence, all-ON", criterion1},
        {"oracle equivalence, ON/OFF", criterion2},
        {"optimality-condition audit", criterion3},
        {"complexity instrumentation", criterion4},
        {"closed-form convergence", criterion5},
        {"ENPQ small-range limit", criterion6},
        {"crossover claims", criterion7},
        {"placement optimality", criterion8},
        {"dominance and degenerate range", criterion9},
        {"full-range limit consistency", criterion10},
    }};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].second(detail);
        } catch (const std::exception &e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu (%s): %s [%.1f s]\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    detail.c_str(), secs);
        std::fflush(stdout);
        failures += !ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

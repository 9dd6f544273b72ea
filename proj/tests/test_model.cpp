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

#include "risphase/model.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

using namespace risphase;
using Catch::Approx;

namespace {

ErrorKind kind_of(auto &&fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("expected risphase::Error");
    return ErrorKind::Config;
}

} // namespace

TEST_CASE("wrap helpers normalize into half-open intervals", "[model]")
{
    CHECK(wrap_pi(kPi) == -kPi);
    CHECK(wrap_pi(-kPi) == -kPi);
    CHECK(wrap_pi(6.0) == Approx(6.0 - kTwoPi).margin(1e-15));
    CHECK(wrap_pi(0.25) == Approx(0.25).margin(1e-15));
    CHECK(wrap_two_pi(-kPi) == Approx(kPi).margin(1e-15));
    CHECK(wrap_two_pi(kTwoPi) == 0.0);
    CHECK(wrap_two_pi(-1e-18) == 0.0);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> any(-50.0, 50.0);
    for (int i = 0; i < 10000; ++i) {
        const double x = any(rng);
        const double a = wrap_pi(x);
        const double b = wrap_two_pi(x);
        REQUIRE(a >= -kPi);
        REQUIRE(a < kPi);
        REQUIRE(b >= 0.0);
        REQUIRE(b < kTwoPi);
        REQUIRE(std::abs(std::remainder(a - x, kTwoPi)) < 1e-12);
        REQUIRE(std::abs(std::remainder(b - x, kTwoPi)) < 1e-12);
    }
}

TEST_CASE("make_phase_set computes gaps, range and wide gap", "[model]")
{
    SECTION("two phases at +-pi/4")
    {
        const PhaseSet s = make_phase_set({kPi / 4, -kPi / 4});
        CHECK(s.phase(0) == -kPi / 4);
        CHECK(s.range() == Approx(kPi / 2));
        CHECK(s.gap(0) == Approx(kPi / 2));
        CHECK(s.gap(1) == Approx(3 * kPi / 2));
        REQUIRE(s.wide_gap_index());
        CHECK(*s.wide_gap_index() == 1); // k-bar = 2 in 1-based terms
    }
    SECTION("symmetric three-point set has no gap strictly above pi")
    {
        const PhaseSet s = make_phase_set({-kPi / 2, 0.0, kPi / 2});
        CHECK(s.range() == Approx(kPi));
        CHECK(s.gap(0) == Approx(kPi / 2));
        CHECK(s.gap(1) == Approx(kPi / 2));
        CHECK(s.gap(2) == Approx(kPi));
        CHECK_FALSE(s.wide_gap_index());
    }
    SECTION("errors")
    {
        CHECK(kind_of([] { make_phase_set({0.0, 0.0}); }) == ErrorKind::InvalidAlphabet);
        CHECK(kind_of([] { make_phase_set({0.0, 1e-13}); }) == ErrorKind::InvalidAlphabet);
        CHECK(kind_of([] { make_phase_set({0.5}); }) == ErrorKind::InvalidAlphabet);
        CHECK(kind_of([] { make_phase_set({0.0, kPi}); }) == ErrorKind::Domain);
        CHECK(kind_of([] { make_phase_set({-3.2, 0.0}); }) == ErrorKind::Domain);
    }
}

TEST_CASE("gaps always sum to 2*pi and at most one exceeds pi", "[model]")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_int_distribution<std::size_t> count(2, 9);
    for (int t = 0; t < 2000; ++t) {
        std::vector<double> phases(count(rng));
        for (double &p : phases)
            p = angle(rng);
        const PhaseSet s = make_phase_set(phases);
        const double total = std::accumulate(s.gaps().begin(), s.gaps().end(), 0.0);
        REQUIRE(total == Approx(kTwoPi).margin(1e-12));
        const auto wide = std::count_if(s.gaps().begin(), s.gaps().end(), [](double g) { return g > kPi; });
        REQUIRE(wide <= 1);
        REQUIRE(s.wide_gap_index().has_value() == (wide == 1));
        if (s.range() < kPi) {
            REQUIRE(s.wide_gap_index());
            REQUIRE(*s.wide_gap_index() == s.size() - 1);
        }
    }
}

TEST_CASE("equally_separated_set places K phases over [-R/2, R/2]", "[model]")
{
    const PhaseSet two = equally_separated_set(kPi / 2, 2);
    CHECK(two.phase(0) == Approx(-kPi / 4));
    CHECK(two.phase(1) == Approx(kPi / 4));

    const PhaseSet four = equally_separated_set(kPi, 4);
    const double expected[] = {-kPi / 2, -kPi / 6, kPi / 6, kPi / 2};
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(four.phase(k) == Approx(expected[k]).margin(1e-15));
    for (std::size_t k = 0; k + 1 < 4; ++k)
        CHECK(four.gap(k) == Approx(kPi / 3));

    CHECK(kind_of([] { equally_separated_set(3 * kPi / 2, 2); }) == ErrorKind::RangeViolation);
    CHECK(kind_of([] { equally_separated_set(kPi, 2); }) == ErrorKind::RangeViolation);
    CHECK(kind_of([] { equally_separated_set(0.0, 3); }) == ErrorKind::Domain);

    SECTION("round trip through make_phase_set")
    {
        for (std::size_t K = 2; K <= 8; ++K) {
            for (double deg = 5; deg < rad_to_deg(max_restricted_range(K)); deg += 7.5) {
                const PhaseSet s = equally_separated_set(deg_to_rad(deg), K);
                const std::vector<double> raw(s.phases().begin(), s.phases().end());
                REQUIRE(make_phase_set(raw) == s);
            }
        }
    }
}

TEST_CASE("cyclic index arithmetic on 1-based indices", "[model]")
{
    CHECK(idx_add(3, 2, 4) == 1);
    CHECK(idx_sub(1, 1, 4) == 4);
    CHECK(idx_add(1, 1, 2) == 2);
    CHECK(idx_sub(4, 1, 4) == 3);
    CHECK(kind_of([] { idx_add(0, 1, 4); }) == ErrorKind::Domain);
    CHECK(kind_of([] { idx_sub(1, 5, 4); }) == ErrorKind::Domain);
    for (std::size_t K = 2; K <= 6; ++K)
        for (std::size_t a = 1; a <= K; ++a)
            for (std::size_t b = 1; b <= K; ++b)
                REQUIRE(idx_sub(idx_add(a, b, K), b, K) == a);
}

TEST_CASE("objective and derived metrics", "[model]")
{
    const PhaseSet set = make_phase_set({-kPi / 4, kPi / 4});
    const ChannelRealization toy({1.0, 1.0}, {0.0, 0.0});
    const RisConfig at_second = RisConfig::all_on({1});

    const auto value = objective(toy, set, at_second);
    CHECK(value.f == Approx(2.0 + std::sqrt(2.0)).epsilon(1e-12));
    CHECK(normalized_performance(toy, set, at_second) == Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-12));

    RisConfig off = at_second;
    off.gain = {0};
    CHECK(objective(toy, set, off).f == Approx(1.0));
    CHECK(snr_boost(toy, set, off) == Approx(1.0));
    CHECK(normalized_performance(toy, set, off) == Approx(0.25));

    const PhaseSet with_zero = make_phase_set({-kPi / 2, 0.0, kPi / 2});
    CHECK(snr_boost(toy, with_zero, RisConfig::all_on({1})) == Approx(4.0));
    CHECK(normalized_performance(toy, with_zero, RisConfig::all_on({1})) == Approx(1.0));

    const ChannelRealization blocked({0.0, 0.7}, {0.3, -1.1});
    for (std::size_t k = 0; k < 2; ++k)
        CHECK(objective(blocked, set, RisConfig::all_on({k})).f == Approx(0.49));
    CHECK(kind_of([&] { snr_boost(blocked, set, at_second); }) == ErrorKind::UndefinedBoost);

    const ChannelRealization dead({0.0, 0.0}, {0.0, 0.0});
    CHECK(kind_of([&] { normalized_performance(dead, set, at_second); }) == ErrorKind::DegenerateChannel);
    CHECK(kind_of([&] { objective(toy, set, RisConfig::all_on({0, 1})); }) == ErrorKind::Dimension);
}

TEST_CASE("channel validation", "[model]")
{
    CHECK(kind_of([] { ChannelRealization({1.0}, {0.0}); }) == ErrorKind::Dimension);
    CHECK(kind_of([] { ChannelRealization({1.0, 2.0}, {0.0}); }) == ErrorKind::Dimension);
    CHECK(kind_of([] { ChannelRealization({1.0, -2.0}, {0.0, 0.0}); }) == ErrorKind::Domain);
    const ChannelRealization wrapped({1.0, 1.0}, {kPi, 7.0});
    CHECK(wrapped.alpha(0) == -kPi);
    CHECK(wrapped.alpha(1) == Approx(7.0 - kTwoPi));
}

TEST_CASE("normalized performance stays in [0, 1]; fixed configs are invariant to a common phase", "[model]")
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> psi(-kPi, kPi);
    for (int t = 0; t < 500; ++t) {
        const std::size_t N = 1 + t % 12;
        const auto channel = testing::random_channel(N, rng);
        const std::size_t K = 2 + t % 4;
        const PhaseSet set = equally_separated_set(std::min(deg_to_rad(30.0 + t % 200), 0.99 * max_restricted_range(K)), K);
        RisConfig config;
        for (std::size_t n = 0; n < N; ++n) {
            config.phase.push_back((n * 7 + t) % set.size());
            config.gain.push_back((n + t) % 3 != 0);
        }
        const double p = normalized_performance(channel, set, config);
        REQUIRE(p >= 0.0);
        REQUIRE(p <= 1.0 + 1e-12);
        const double f = objective(channel, set, config).f;
        REQUIRE(testing::rel_equal(objective(testing::rotate(channel, psi(rng)), set, config).f, f, 1e-9));
        REQUIRE(testing::rel_equal(objective(testing::scale(channel, 3.5), set, config).f, 3.5 * 3.5 * f, 1e-9));
    }
}

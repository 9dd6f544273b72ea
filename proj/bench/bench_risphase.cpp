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

// Serial reference vs OpenMP kernels.

#include "risphase/montecarlo.hpp"
#include "risphase/optimal.hpp"
#include "risphase/oracle.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace risphase;

namespace {

ExperimentSpec sweep_spec(std::size_t trials)
{
    ExperimentSpec spec;
    spec.kind = ExperimentKind::PerfVsN;
    spec.methods = {Method::Npq, Method::Enpq, Method::Alg1, Method::Alg2};
    spec.ranges_deg = {90.0};
    spec.num_phases = {4};
    spec.num_elements = {64};
    spec.trials = trials;
    spec.base_seed = 1;
    return spec;
}

void BM_SweepSerial(benchmark::State &state)
{
    const ExperimentSpec spec = sweep_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_experiment_serial(spec, ChannelModelConfig{}));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 4);
}

void BM_SweepParallel(benchmark::State &state)
{
    const ExperimentSpec spec = sweep_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_experiment(spec, ChannelModelConfig{}, static_cast<int>(state.range(1))));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 4);
}

ChannelRealization oracle_channel(std::size_t n)
{
    ChannelModelConfig model;
    model.n_elements = n;
    std::mt19937_64 rng(3);
    return sample_channel(model, rng);
}

void BM_OracleSerial(benchmark::State &state)
{
    const auto channel = oracle_channel(static_cast<std::size_t>(state.range(0)));
    const PhaseSet set = equally_separated_set(kPi, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_on_off(channel, set));
}

void BM_OracleParallel(benchmark::State &state)
{
    const auto channel = oracle_channel(static_cast<std::size_t>(state.range(0)));
    const PhaseSet set = equally_separated_set(kPi, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_on_off_parallel(channel, set, static_cast<int>(state.range(1))));
}

void BM_Algorithm2(benchmark::State &state)
{
    const auto channel = oracle_channel(static_cast<std::size_t>(state.range(0)));
    const PhaseSet set = equally_separated_set(deg_to_rad(90.0), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(algorithm2(channel, set));
    state.SetComplexityN(state.range(0));
}

} // namespace

BENCHMARK(BM_SweepSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Args({2000, 1})->Args({2000, 2})->Args({2000, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleSerial)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Args({9, 2})->Args({11, 2})->Args({11, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Algorithm2)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNLogN);

BENCHMARK_MAIN();

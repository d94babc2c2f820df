// SPDX-License-Identifier: Apache-2.0
//
// rofsim - photonic hybrid precoding simulator for mmWave multiuser MIMO
// Copyright (C) 2026 the rofsim authors
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

#include <benchmark/benchmark.h>

#include "rofsim/arrays.hpp"
#include "rofsim/channel.hpp"
#include "rofsim/montecarlo.hpp"
#include "rofsim/precoding.hpp"
#include "rofsim/rng.hpp"
#include "rofsim/scenario.hpp"

#include <vector>

namespace
{

void BM_PhiloxWords(benchmark::State &state)
{
    rofsim::RandomStream stream(1, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(stream.next_u64());
}
BENCHMARK(BM_PhiloxWords);

void BM_ComplexGaussian(benchmark::State &state)
{
    rofsim::RandomStream stream(1, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(stream.cn01());
}
BENCHMARK(BM_ComplexGaussian);

void BM_UlaSteering(benchmark::State &state)
{
    const rofsim::ArrayGeometry geom{rofsim::ArrayKind::ula,
                                     static_cast<std::size_t>(state.range(0)), 0.00535};
    for (auto _ : state)
        benchmark::DoNotOptimize(rofsim::ula_steering(0.3, 0.0107, geom));
}
BENCHMARK(BM_UlaSteering)->Arg(16)->Arg(64)->Arg(1024);

void BM_PhotonicGain(benchmark::State &state)
{
    const rofsim::ArrayGeometry geom{rofsim::ArrayKind::ula, 16, 0.00535};
    const auto plan =
        rofsim::CarrierPlan::uniform({10.70e-3, 7.1e-3, 4.99e-3, 4.10e-3});
    const std::vector<double> offsets(4, 0.02);
    for (auto _ : state)
        benchmark::DoNotOptimize(rofsim::photonic_array_gain(offsets, geom, plan));
}
BENCHMARK(BM_PhotonicGain);

void BM_BeamPatternSweep(benchmark::State &state)
{
    const rofsim::ScenarioConfig config = rofsim::preset("fig3");
    const std::vector<double> grid = config.pattern.grid();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            rofsim::beam_pattern_sweep(grid, 0.0, config.geometry, config.plan,
                                       config.pattern.rf_lambda_m));
}
BENCHMARK(BM_BeamPatternSweep);

void BM_GeometricChannel(benchmark::State &state)
{
    rofsim::RandomStream stream(2, 0);
    const auto paths = rofsim::sample_paths(stream, 1, 3, rofsim::ArrayKind::ula);
    const rofsim::ArrayGeometry tx{rofsim::ArrayKind::ula,
                                   static_cast<std::size_t>(state.range(0)), 0.00535};
    const rofsim::ArrayGeometry rx{rofsim::ArrayKind::ula, 1, 0.00535};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            rofsim::geometric_channel(paths.users[0], tx, rx, 0.0107));
}
BENCHMARK(BM_GeometricChannel)->Arg(16)->Arg(256);

void BM_ZeroForcing(benchmark::State &state)
{
    rofsim::RandomStream stream(3, 0);
    arma::cx_mat rows(3, 3, arma::fill::none);
    for (auto &value : rows)
        value = stream.cn01();
    const rofsim::EffectiveChannel eff{rows};
    for (auto _ : state)
        benchmark::DoNotOptimize(rofsim::zf_baseband(eff));
}
BENCHMARK(BM_ZeroForcing);

void BM_RunTrial(benchmark::State &state)
{
    rofsim::ScenarioConfig config = rofsim::preset("fig4-ber");
    config.bits_per_trial = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t trial = 0;
    for (auto _ : state)
    {
        rofsim::RandomStream stream = rofsim::rng_substream(42, trial++);
        benchmark::DoNotOptimize(rofsim::run_trial(config, 100.0, stream));
    }
}
BENCHMARK(BM_RunTrial)->Arg(0)->Arg(100);

} // namespace

BENCHMARK_MAIN();

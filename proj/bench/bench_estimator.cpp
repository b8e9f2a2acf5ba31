/*
   Copyright 2026 The pdnet Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference vs OpenMP kernel on the default homogeneous scenario.

#include <benchmark/benchmark.h>

#include "pdnet/estimator.hpp"

namespace {

pdnet::EstimatorModel bench_model(int n_a)
{
    pdnet::ScenarioConfig c;
    c.disaster = {0.0, 0.5};
    c.fleet = {"drone", n_a};
    return pdnet::make_model(c, pdnet::PlatformTable::defaults());
}

void BM_Serial(benchmark::State& state)
{
    const auto model = bench_model(static_cast<int>(state.range(0)));
    pdnet::EstimateOptions o;
    o.iterations = 2000;
    for (auto _ : state)
        benchmark::DoNotOptimize(pdnet::estimate_metrics_serial(model, o));
    state.SetItemsProcessed(state.iterations() * o.iterations);
}

void BM_OpenMP(benchmark::State& state)
{
    const auto model = bench_model(static_cast<int>(state.range(0)));
    pdnet::EstimateOptions o;
    o.iterations = 2000;
    o.workers = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(pdnet::estimate_metrics(model, o));
    state.SetItemsProcessed(state.iterations() * o.iterations);
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(0)->Arg(5)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpenMP)
    ->ArgsProduct({{0, 5, 30}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();

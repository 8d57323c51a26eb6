// Copyright 2026 The ddlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "ddlab/configs.hpp"
#include "ddlab/energy.hpp"
#include "ddlab/reduction.hpp"

namespace {

using namespace ddlab;

Config random_config(std::size_t n, std::size_t m, int k = 2) {
  RandomSpec spec;
  spec.n = n;
  spec.m = m;
  spec.k = k;
  spec.seed = 42;
  spec.coord_range = static_cast<std::int64_t>(n + m);
  return gen_random(spec);
}

void BM_DistanceClasses(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto path = state.range(1) ? GroupingPath::kRationalOnly : GroupingPath::kAuto;
  const Config cfg = random_config(size, size);
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_classes(cfg, 1, path));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size * size));
}
BENCHMARK(BM_DistanceClasses)
    ->ArgNames({"n", "rational"})
    ->ArgsProduct({{64, 256, 1024}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_Energy(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const DistanceClasses dc = distance_classes(random_config(size, size), 1);
  for (auto _ : state) benchmark::DoNotOptimize(energy(dc));
}
BENCHMARK(BM_Energy)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Incidences(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto mode = state.range(2) ? IncidenceMode::kNaive : IncidenceMode::kHashJoin;
  const Config cfg = random_config(n, m, 3);
  const GridPi grid(cfg);
  const GammaSet gamma = build_gamma(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(incidences(grid, gamma, mode));
}
BENCHMARK(BM_Incidences)
    ->ArgNames({"n", "m", "naive"})
    ->ArgsProduct({{16, 48}, {8, 24}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

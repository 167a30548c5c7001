/*
 * Copyright 2026 The Rotundus Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// OpenMP kernels against their serial references. Set OMP_NUM_THREADS to
// choose the thread count of the parallel variants.

#include <benchmark/benchmark.h>

#include "rotundus/triangulation.hpp"

namespace {

using rotundus::SolveQuery;

void BM_Solve(benchmark::State& state) {
  const SolveQuery q{.n = static_cast<int>(state.range(0)), .max_entry = 10, .tp_only = true};
  for (auto _ : state) benchmark::DoNotOptimize(rotundus::solve_rotundus(q));
}

void BM_SolveSerial(benchmark::State& state) {
  const SolveQuery q{.n = static_cast<int>(state.range(0)), .max_entry = 10, .tp_only = true};
  for (auto _ : state) benchmark::DoNotOptimize(rotundus::reference::solve_rotundus_serial(q));
}

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rotundus::enumerate_triangulations(n));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rotundus::reference::enumerate_triangulations_serial(n));
}

}  // namespace

BENCHMARK(BM_Solve)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveSerial)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

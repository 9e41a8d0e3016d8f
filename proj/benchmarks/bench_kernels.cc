// Copyright 2026 The dpledger Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>

#include "benchmark/benchmark.h"
#include "dpledger/attack/kernels.h"
#include "dpledger/attack/linking.h"
#include "dpledger/bench/config.h"
#include "dpledger/bench/rounds.h"

namespace {

using namespace dpledger;

const attack::AttackSetup& Setup() {
  static const attack::AttackSetup* setup = [] {
    bench::BenchHarness h(bench::BenchConfig{});
    h.RunInitRound(10);
    return new attack::AttackSetup(
        *h.MakeAttackSetup(attack::QueryScope::kPerOwner, true));
  }();
  return *setup;
}

void BM_AttackSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        attack::kernels::CountSuccessesSerial(Setup(), state.range(0), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AttackParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        attack::kernels::CountSuccessesParallel(Setup(), state.range(0), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SamplesSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        attack::kernels::NoisySamplesSerial(5050, 200, state.range(0), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SamplesParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        attack::kernels::NoisySamplesParallel(5050, 200, state.range(0), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool kParallel>
void BM_Histogram(benchmark::State& state) {
  const auto samples =
      attack::kernels::NoisySamplesSerial(0, 200, state.range(0), 2);
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  for (auto _ : state) {
    if constexpr (kParallel) {
      benchmark::DoNotOptimize(
          attack::kernels::HistogramParallel(samples, *lo, *hi, 50));
    } else {
      benchmark::DoNotOptimize(
          attack::kernels::HistogramSerial(samples, *lo, *hi, 50));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_AttackSerial)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AttackParallel)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SamplesSerial)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SamplesParallel)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Histogram, false)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Histogram, true)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The kmedian-fpt Authors
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

#include <random>
#include <vector>

#include "kmedian/bounds.h"
#include "kmedian/coreset.h"
#include "kmedian/gadgets.h"
#include "kmedian/guessing.h"
#include "kmedian/metric.h"
#include "kmedian/oracle.h"
#include "kmedian/relaxation.h"
#include "kmedian/rounding.h"
#include "kmedian/simplex.h"

namespace {

kmedian::MetricInstance Plane(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::vector<std::vector<double>> pts(n);
  for (auto& p : pts) p = {u(rng), u(rng)};
  return kmedian::MetricInstance::FromPoints(std::move(pts));
}

void BM_Simplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  kmedian::LinearProgram lp;
  for (int j = 0; j < n; ++j) lp.AddVariable(-u(rng));
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, double>> row;
    for (int j = 0; j < n; ++j) row.emplace_back(j, u(rng));
    lp.AddRow(std::move(row), kmedian::RowSense::kLessEqual, 1.0);
  }
  for (auto _ : state) benchmark::DoNotOptimize(kmedian::SolveSimplex(lp));
}
BENCHMARK(BM_Simplex)->Arg(10)->Arg(40)->Arg(100);

void BM_PlantedLp(benchmark::State& state) {
  const auto inst = kmedian::Rescale(Plane(static_cast<int>(state.range(0)), 2)).instance;
  const auto coreset = kmedian::IdentityCoreset(inst);
  const auto opt = kmedian::BruteForceKMedian(inst, 3).best_set;
  const auto guess = kmedian::PlantedGuess(inst, coreset, 0.1, opt);
  const auto sets = kmedian::BuildCandidateSets(inst, guess);
  for (auto _ : state) {
    const auto model = kmedian::BuildLp(coreset, sets, inst);
    benchmark::DoNotOptimize(kmedian::SolveLp(model));
  }
}
BENCHMARK(BM_PlantedLp)->Arg(10)->Arg(20);

void BM_Solve(benchmark::State& state) {
  const auto inst = Plane(static_cast<int>(state.range(0)), 3);
  kmedian::SolveOptions o;
  o.k = 2;
  o.trials = 20;
  for (auto _ : state) benchmark::DoNotOptimize(kmedian::Solve(inst, o));
}
BENCHMARK(BM_Solve)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BruteForceKMedian(benchmark::State& state) {
  const auto inst = Plane(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(kmedian::BruteForceKMedian(inst, 4));
}
BENCHMARK(BM_BruteForceKMedian)->Arg(16)->Arg(24);

void BM_GreedyCoverage(benchmark::State& state) {
  const auto g = kmedian::RandomHypergraph(200, 3, static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(kmedian::GreedyCoverage(g, 50));
}
BENCHMARK(BM_GreedyCoverage)->Arg(1000)->Arg(4000);

void BM_MinMaxG(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kmedian::MinMaxG(200));
}
BENCHMARK(BM_MinMaxG)->Unit(benchmark::kMillisecond);

void BM_VerifyEnvelope(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kmedian::VerifyEnvelope(static_cast<int>(state.range(0)), {}, 10));
  }
}
BENCHMARK(BM_VerifyEnvelope)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The ising2q Authors
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


#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ising2q/ising2q.h"

#ifdef ISING2Q_HAVE_CLI
#include "cli/sweep.h"
#endif

namespace {

using namespace ising2q;

std::vector<CouplingParams> params_pool() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> uj(-2, 2), ub(-4, 4);
  std::vector<CouplingParams> out;
  while (out.size() < 256) {
    const double J = uj(rng), b1 = ub(rng), b2 = ub(rng);
    if (J == 0 && b1 == b2) continue;
    out.push_back(build_params(J, b1, b2));
  }
  return out;
}

void BM_PropagatorClosedForm(benchmark::State& state) {
  const auto pool = params_pool();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagator_closed_form(pool[i++ & 255], 1.7));
  }
}
BENCHMARK(BM_PropagatorClosedForm);

void BM_PropagatorOracle(benchmark::State& state) {
  const auto pool = params_pool();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagator_oracle(pool[i++ & 255], 1.7));
  }
}
BENCHMARK(BM_PropagatorOracle);

void BM_Schmidt(benchmark::State& state) {
  const auto p = build_params_pm(1.0, 0.3, 1.0);
  const TwoQubitState s = evolve(TwoQubitState::basis(1), p, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(schmidt(s));
}
BENCHMARK(BM_Schmidt);

void BM_ScanRoots(benchmark::State& state) {
  const double j = 1 / std::sqrt(7.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_roots(0.5, std::numbers::pi / 3, j, 0.0, 8 * std::numbers::pi));
  }
}
BENCHMARK(BM_ScanRoots)->Unit(benchmark::kMillisecond);

#ifdef ISING2Q_HAVE_CLI
void BM_FigureDataset(benchmark::State& state) {
  cli::SweepRequest r;
  r.command = cli::Command::kFigure;
  r.figure = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cli::run(r));
}
BENCHMARK(BM_FigureDataset)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);
#endif

}  // namespace

BENCHMARK_MAIN();

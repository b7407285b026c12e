// Copyright 2026 The bellkit Authors
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
//
// Microbenchmarks for the hot paths of the Monte Carlo estimator: state
// sampling, the eigensolver behind negativity, Bell-family evaluation, the
// settings optimizer, and a small end-to-end run.

#include <benchmark/benchmark.h>

#include "bellkit/bell.hpp"
#include "bellkit/linalg.hpp"
#include "bellkit/montecarlo.hpp"
#include "bellkit/qstate.hpp"
#include "bellkit/rng.hpp"
#include "bellkit/sampling.hpp"

namespace {

using namespace bellkit;

CMat4 sample_hermitian(SeededRng& rng) {
  CMat4 g;
  for (auto& z : g.e) z = rng.next_complex_gaussian();
  const CMat4 h = 0.5 * (g + adjoint(g));
  return h;
}

void BM_HermitianEigen(benchmark::State& state) {
  SeededRng rng(1);
  const CMat4 h = sample_hermitian(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigen(h));
  }
}
BENCHMARK(BM_HermitianEigen);

void BM_RandomMixed(benchmark::State& state) {
  SeededRng rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_mixed(rng));
  }
}
BENCHMARK(BM_RandomMixed);

void BM_Negativity(benchmark::State& state) {
  SeededRng rng(3);
  const DensityMatrix rho = random_mixed(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(negativity(rho));
  }
}
BENCHMARK(BM_Negativity);

void BM_FullyEntangledFraction(benchmark::State& state) {
  SeededRng rng(4);
  const DensityMatrix rho = random_mixed(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fully_entangled_fraction(rho));
  }
}
BENCHMARK(BM_FullyEntangledFraction);

void BM_Expectation(benchmark::State& state) {
  SeededRng rng(5);
  const DensityMatrix rho = random_mixed(rng);
  const BellOperator op = bell_operator(canonical_settings());
  for (auto _ : state) {
    benchmark::DoNotOptimize(expectation(op, rho));
  }
}
BENCHMARK(BM_Expectation);

void BM_BellFamily36(benchmark::State& state) {
  const auto [ta, tb] = canonical_triads();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bell_family36(ta, tb));
  }
}
BENCHMARK(BM_BellFamily36);

void BM_Optimizer(benchmark::State& state) {
  SeededRng rng(6);
  const DensityMatrix rho = random_mixed(rng);
  const OptimizerBudget budget{static_cast<int>(state.range(0)), 60};
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_over_orthogonal_settings(rho, budget, 7));
  }
}
BENCHMARK(BM_Optimizer)->Arg(1)->Arg(4);

void BM_MonteCarloRun(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.ensemble.kind = EnsembleKind::kMixed;
  cfg.statistics = {Statistic::kEntangled, Statistic::kRusAnyOf36};
  cfg.samples = static_cast<std::uint64_t>(state.range(0));
  cfg.seed = 8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloRun)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();

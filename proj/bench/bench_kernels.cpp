// Copyright 2026 The mixedgraphs Authors
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

// Serial reference vs OpenMP kernels side by side.

#include <benchmark/benchmark.h>

#include "mixedgraphs/census.hpp"
#include "mixedgraphs/oracle.hpp"
#include "mixedgraphs/random_models.hpp"

namespace {

using namespace mixedgraphs;

void BM_census_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census::selfconverse_fraction_serial(n));
  }
}
BENCHMARK(BM_census_serial)->Arg(20)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_census_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census::selfconverse_fraction(n));
  }
}
BENCHMARK(BM_census_parallel)->Arg(20)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_oracle_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::brute_force_census_serial(n));
  }
}
BENCHMARK(BM_oracle_serial)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_oracle_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::brute_force_census(n));
  }
}
BENCHMARK(BM_oracle_parallel)->Arg(4)->Unit(benchmark::kMillisecond);

mc::ExperimentConfig selfconverse_config(int n) {
  mc::ExperimentConfig config;
  config.n = n;
  config.p = 0.5;
  config.trials = 500;
  config.seed = 1;
  return config;
}

void BM_mc_selfconverse_serial(benchmark::State& state) {
  const auto config = selfconverse_config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc::run_selfconverse_experiment_serial(config));
  }
}
BENCHMARK(BM_mc_selfconverse_serial)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_mc_selfconverse_parallel(benchmark::State& state) {
  const auto config = selfconverse_config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc::run_selfconverse_experiment(config));
  }
}
BENCHMARK(BM_mc_selfconverse_parallel)->Arg(7)->Unit(benchmark::kMillisecond);

mc::ExperimentConfig lemma1_config(int n) {
  mc::ExperimentConfig config;
  config.n = n;
  config.p = 0.25;
  config.trials = 20;
  config.seed = 1;
  config.epsilon = 0.5;
  return config;
}

void BM_mc_lemma1_serial(benchmark::State& state) {
  const auto config = lemma1_config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc::run_lemma1_experiment_serial(config));
  }
}
BENCHMARK(BM_mc_lemma1_serial)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_mc_lemma1_parallel(benchmark::State& state) {
  const auto config = lemma1_config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc::run_lemma1_experiment(config));
  }
}
BENCHMARK(BM_mc_lemma1_parallel)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

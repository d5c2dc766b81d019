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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <cmath>

#include "mixedgraphs/random_models.hpp"

using namespace mixedgraphs;
using mc::ExperimentConfig;
using mc::ExperimentReport;

TEST_CASE("sample_graph at the probability extremes") {
  SplitMix64 rng(1);
  CHECK(mc::sample_graph(6, 0.0, rng).edge_count() == 0);
  CHECK(mc::sample_graph(6, 1.0, rng).edge_count() == 15);
  CHECK(mc::sample_graph(0, 0.5, rng).order() == 0);
}

TEST_CASE("sample_mixed at the probability extremes") {
  SplitMix64 rng(2);
  const MixedGraph empty = mc::sample_mixed(5, 0.0, rng);
  CHECK(empty.edge_count() == 0);
  CHECK(empty.arc_count() == 0);
  const MixedGraph full = mc::sample_mixed(5, 1.0, rng);
  CHECK(full.edge_count() == 10);
  CHECK(full.arc_count() == 0);
}

TEST_CASE("samplers consume a fixed number of draws") {
  SplitMix64 a(99), b(99);
  mc::sample_graph(7, 0.3, a);
  for (int i = 0; i < 21; ++i) b.next_unit();
  CHECK(a.next() == b.next());

  SplitMix64 c(100), d(100);
  mc::sample_mixed(7, 0.3, c);
  for (int i = 0; i < 42; ++i) d.next_unit();
  CHECK(c.next() == d.next());
}

TEST_CASE("graph sampler edge density concentrates around p") {
  SplitMix64 rng(3);
  const Graph g = mc::sample_graph(1000, 0.25, rng);
  const double pairs = 1000.0 * 999.0 / 2.0;
  const double sigma = std::sqrt(pairs * 0.25 * 0.75);
  CHECK(std::abs(static_cast<double>(g.edge_count()) - 0.25 * pairs) <=
        5.0 * sigma);
}

TEST_CASE("mixed sampler pair states are uniform at p = 1/2") {
  SplitMix64 rng(4);
  const int n = 10, samples = 2000;
  const long long pairs_per_sample = n * (n - 1) / 2;
  long long edges = 0, arcs = 0, empty = 0;
  for (int s = 0; s < samples; ++s) {
    const MixedGraph x = mc::sample_mixed(n, 0.5, rng);
    edges += static_cast<long long>(x.edge_count());
    arcs += static_cast<long long>(x.arc_count());
    empty += pairs_per_sample - static_cast<long long>(x.edge_count()) -
             static_cast<long long>(x.arc_count());
  }
  const double total = static_cast<double>(pairs_per_sample) * samples;
  const double sigma = std::sqrt(total * 0.25 * 0.75);
  // Four states (none, edge, arc ->, arc <-), each with probability 1/4;
  // the two arc orientations are pooled here.
  CHECK(std::abs(static_cast<double>(edges) - total / 4) <= 5 * sigma);
  CHECK(std::abs(static_cast<double>(empty) - total / 4) <= 5 * sigma);
  const double arc_sigma = std::sqrt(total * 0.5 * 0.5);
  CHECK(std::abs(static_cast<double>(arcs) - total / 2) <= 5 * arc_sigma);
}

TEST_CASE("symmetric subgraph of X(n,1/2) is distributed as Gamma(n,1/4)") {
  SplitMix64 rng(5);
  const int n = 12, samples = 10000;
  const double pairs = n * (n - 1) / 2.0;
  double sum_mixed = 0, sumsq_mixed = 0, sum_graph = 0, sumsq_graph = 0;
  for (int s = 0; s < samples; ++s) {
    const double em = static_cast<double>(
        symmetric_subgraph(mc::sample_mixed(n, 0.5, rng)).edge_count());
    const double eg =
        static_cast<double>(mc::sample_graph(n, 0.25, rng).edge_count());
    sum_mixed += em;
    sumsq_mixed += em * em;
    sum_graph += eg;
    sumsq_graph += eg * eg;
  }
  const double expected_mean = pairs * 0.25;
  const double expected_var = pairs * 0.25 * 0.75;
  const double mean_sigma = std::sqrt(expected_var / samples);
  const double var_sigma = expected_var * std::sqrt(2.0 / (samples - 1));
  for (auto [sum, sumsq] : {std::pair{sum_mixed, sumsq_mixed},
                            std::pair{sum_graph, sumsq_graph}}) {
    const double mean = sum / samples;
    const double var = sumsq / samples - mean * mean;
    CHECK(std::abs(mean - expected_mean) <= 5 * mean_sigma);
    CHECK(std::abs(var - expected_var) <= 5 * var_sigma);
  }
}

TEST_CASE("asymmetry experiment on degenerate orders") {
  ExperimentConfig config;
  config.p = 0.25;
  config.trials = 50;
  config.seed = 7;

  config.n = 1;
  CHECK(mc::run_asymmetry_experiment(config).estimate == 1.0);
  config.n = 2;
  CHECK(mc::run_asymmetry_experiment(config).estimate == 0.0);
}

TEST_CASE("selfconverse experiment is certain at n = 2") {
  ExperimentConfig config;
  config.n = 2;
  config.p = 0.5;
  config.trials = 100;
  config.seed = 7;
  const ExperimentReport report = mc::run_selfconverse_experiment(config);
  CHECK(report.estimate == 1.0);
  CHECK(report.successes == 100);
}

TEST_CASE("report fields satisfy their defining identities") {
  ExperimentConfig config;
  config.n = 5;
  config.p = 0.5;
  config.trials = 173;
  config.seed = 99;
  const ExperimentReport report = mc::run_selfconverse_experiment(config);
  CHECK(report.trials == 173);
  CHECK(report.successes <= report.trials);
  CHECK(report.estimate ==
        static_cast<double>(report.successes) / 173.0);
  CHECK(report.standard_error ==
        std::sqrt(report.estimate * (1.0 - report.estimate) / 173.0));
}

TEST_CASE("lemma1 experiment basics") {
  ExperimentConfig config;
  config.n = 2;
  config.p = 0.25;
  config.trials = 200;
  config.seed = 11;
  const ExperimentReport report = mc::run_lemma1_experiment(config);
  // No pair of 2 vertices has a common neighbor.
  const auto& codegrees = report.histograms.at("max_codegree");
  REQUIRE(codegrees.size() == 1);
  CHECK(codegrees.count(0) == 1);

  config.n = 50;
  config.epsilon = 0.5;
  const ExperimentReport wide = mc::run_lemma1_experiment(config);
  const double expected = 49.0 / 4.0;
  const double sigma =
      2.0 * std::sqrt((50.0 * 49.0 / 2.0) * 200.0 * 0.25 * 0.75) /
      (50.0 * 200.0);
  CHECK(std::abs(wide.scalars.at("mean_degree") - expected) <= 5 * sigma);
}

TEST_CASE("config validation") {
  ExperimentConfig config;
  config.n = 4;
  config.trials = 0;
  CHECK_THROWS_AS(mc::run_asymmetry_experiment(config), std::invalid_argument);
  config.trials = 10;
  config.p = 1.5;
  CHECK_THROWS_AS(mc::run_asymmetry_experiment(config), std::invalid_argument);
  config.p = 0.5;
  config.epsilon = 1.0;
  CHECK_THROWS_AS(mc::run_asymmetry_experiment(config), std::invalid_argument);
  config.epsilon = 0.1;
  CHECK_THROWS_AS(mc::run_lemma1_experiment(config), std::invalid_argument);
}

TEST_CASE("reports are deterministic for any worker count") {
  ExperimentConfig config;
  config.n = 6;
  config.p = 0.5;
  config.trials = 300;
  config.seed = 12345;

  const std::string serial =
      mc::to_json(mc::run_selfconverse_experiment_serial(config)).dump();
  const int max_threads = omp_get_max_threads();
  for (int threads : {1, 2, 3}) {
    omp_set_num_threads(threads);
    CHECK(mc::to_json(mc::run_selfconverse_experiment(config)).dump() ==
          serial);
  }
  omp_set_num_threads(max_threads);

  config.p = 0.25;
  const std::string asym_serial =
      mc::to_json(mc::run_asymmetry_experiment_serial(config)).dump();
  CHECK(mc::to_json(mc::run_asymmetry_experiment(config)).dump() ==
        asym_serial);

  config.n = 40;
  config.trials = 30;
  config.epsilon = 0.5;
  const std::string lemma_serial =
      mc::to_json(mc::run_lemma1_experiment_serial(config)).dump();
  CHECK(mc::to_json(mc::run_lemma1_experiment(config)).dump() == lemma_serial);
}

TEST_CASE("report JSON carries the schema version and echoes the config") {
  ExperimentConfig config;
  config.n = 5;
  config.p = 0.5;
  config.trials = 64;
  config.seed = 0xDEADBEEFCAFEF00DULL;
  const nlohmann::json doc =
      mc::to_json(mc::run_selfconverse_experiment(config));
  CHECK(doc["schema"] == 1);
  CHECK(doc["experiment"] == "selfconverse");
  CHECK(doc["config"]["n"] == 5);
  CHECK(doc["config"]["p"] == 0.5);
  CHECK(doc["config"]["trials"] == 64);
  CHECK(doc["config"]["seed"] == 0xDEADBEEFCAFEF00DULL);
  CHECK(doc["trials"] == 64);
  CHECK(doc["successes"].get<std::uint64_t>() <= 64);
  const double estimate = doc["estimate"].get<double>();
  CHECK(estimate >= 0.0);
  CHECK(estimate <= 1.0);
}

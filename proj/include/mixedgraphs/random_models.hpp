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

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "mixedgraphs/graph.hpp"
#include "mixedgraphs/rng.hpp"

namespace mixedgraphs::mc {

struct ExperimentConfig {
  int n = 0;
  double p = 0.5;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  double epsilon = 0.1;  // tolerance parameter for the degree/codegree bounds
};

// Bucketed counts of an integer-valued statistic, sorted by value.
using Histogram = std::map<long long, std::uint64_t>;

struct ExperimentReport {
  std::string experiment;
  ExperimentConfig config;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double estimate = 0.0;
  double standard_error = 0.0;  // sqrt(estimate*(1-estimate)/trials)
  std::map<std::string, Histogram> histograms;
  std::map<std::string, double> scalars;
};

// schema 1; deterministic byte-for-byte for a given report.
nlohmann::json to_json(const ExperimentReport& report);

// Each unordered pair {u,v} is included independently with probability p.
// Consumes exactly C(n,2) uniform draws in lexicographic pair order.
Graph sample_graph(int n, double p, SplitMix64& rng);

// Two independent coin flips per pair, (min,max) orientation first: both
// hits form an edge, a single hit forms that arc, no hit leaves the pair
// non-adjacent. Consumes exactly 2*C(n,2) draws.
MixedGraph sample_mixed(int n, double p, SplitMix64& rng);

// Fraction of sampled graphs with no non-identity automorphism.
// Trials run on per-trial substreams and aggregate in trial order, so the
// report is identical for any thread count. The _serial variants are the
// single-threaded reference implementations.
ExperimentReport run_asymmetry_experiment(const ExperimentConfig& config);
ExperimentReport run_asymmetry_experiment_serial(const ExperimentConfig& config);

// Fraction of trials where min degree >= (n/4)(1-eps) and max codegree
// <= (n/8)(1+eps), both bounds taken literally; requires p = 1/4. The raw
// min-degree and max-codegree distributions are reported alongside.
ExperimentReport run_lemma1_experiment(const ExperimentConfig& config);
ExperimentReport run_lemma1_experiment_serial(const ExperimentConfig& config);

// Fraction of sampled mixed graphs isomorphic to their converse.
ExperimentReport run_selfconverse_experiment(const ExperimentConfig& config);
ExperimentReport run_selfconverse_experiment_serial(
    const ExperimentConfig& config);

}  // namespace mixedgraphs::mc

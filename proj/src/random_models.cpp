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

#include "mixedgraphs/random_models.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <vector>

#include "mixedgraphs/iso.hpp"

namespace mixedgraphs::mc {

namespace {

void check_config(const ExperimentConfig& config) {
  if (config.n < 0) throw std::invalid_argument("order must be non-negative");
  if (!(config.p >= 0.0 && config.p <= 1.0)) {
    throw std::invalid_argument("probability must lie in [0,1]");
  }
  if (config.trials < 1) throw std::invalid_argument("need at least one trial");
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0,1)");
  }
}

// Runs fn(t) for t in [0, trials), parallel or not. Exceptions from worker
// iterations are captured and rethrown after the loop so OpenMP regions
// never unwind.
template <typename Fn>
void run_trials(std::uint64_t trials, bool parallel, const Fn& fn) {
  std::exception_ptr error = nullptr;
  if (parallel) {
    const long long count = static_cast<long long>(trials);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long t = 0; t < count; ++t) {
      try {
        fn(static_cast<std::uint64_t>(t));
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
  } else {
    for (std::uint64_t t = 0; t < trials; ++t) {
      try {
        fn(t);
      } catch (...) {
        if (!error) error = std::current_exception();
        break;
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

// Aggregates per-trial values in trial-index order: identical output for
// any schedule.
ExperimentReport finalize(std::string name, const ExperimentConfig& config,
                          const std::vector<std::uint8_t>& success) {
  ExperimentReport report;
  report.experiment = std::move(name);
  report.config = config;
  report.trials = success.size();
  for (std::uint8_t s : success) report.successes += s;
  report.estimate =
      static_cast<double>(report.successes) / static_cast<double>(report.trials);
  report.standard_error = std::sqrt(report.estimate * (1.0 - report.estimate) /
                                    static_cast<double>(report.trials));
  return report;
}

Histogram histogram_of(const std::vector<long long>& values) {
  Histogram h;
  for (long long v : values) ++h[v];
  return h;
}

ExperimentReport asymmetry_impl(const ExperimentConfig& config, bool parallel) {
  check_config(config);
  std::vector<std::uint8_t> success(config.trials, 0);
  std::vector<long long> moved(config.trials, -1);
  run_trials(config.trials, parallel, [&](std::uint64_t t) {
    SplitMix64 rng = SplitMix64::substream(config.seed, t);
    const Graph g = sample_graph(config.n, config.p, rng);
    const auto witness = iso::find_nonidentity_automorphism(g);
    success[t] = witness ? 0 : 1;
    if (witness) moved[t] = witness->moved_count();
  });
  ExperimentReport report = finalize("asymmetry", config, success);
  std::vector<long long> moved_found;
  for (long long m : moved) {
    if (m >= 0) moved_found.push_back(m);
  }
  if (!moved_found.empty()) {
    report.histograms["moved_vertices"] = histogram_of(moved_found);
  }
  return report;
}

ExperimentReport lemma1_impl(const ExperimentConfig& config, bool parallel) {
  check_config(config);
  if (config.p != 0.25) {
    throw std::invalid_argument(
        "the degree/codegree experiment is defined for p = 1/4");
  }
  const double degree_bound = (config.n / 4.0) * (1.0 - config.epsilon);
  const double codegree_bound = (config.n / 8.0) * (1.0 + config.epsilon);

  std::vector<std::uint8_t> success(config.trials, 0);
  std::vector<long long> min_degree(config.trials, 0);
  std::vector<long long> max_codegree(config.trials, 0);
  std::vector<long long> edge_count(config.trials, 0);
  run_trials(config.trials, parallel, [&](std::uint64_t t) {
    SplitMix64 rng = SplitMix64::substream(config.seed, t);
    const Graph g = sample_graph(config.n, config.p, rng);
    const auto [mind, maxcod] = neighborhood_stats(g);
    min_degree[t] = mind;
    max_codegree[t] = maxcod;
    edge_count[t] = static_cast<long long>(g.edge_count());
    success[t] =
        (mind >= degree_bound && maxcod <= codegree_bound) ? 1 : 0;
  });
  ExperimentReport report = finalize("lemma1", config, success);
  report.histograms["min_degree"] = histogram_of(min_degree);
  report.histograms["max_codegree"] = histogram_of(max_codegree);
  long long total_edges = 0;
  for (long long e : edge_count) total_edges += e;
  if (config.n > 0) {
    report.scalars["mean_degree"] =
        2.0 * static_cast<double>(total_edges) /
        (static_cast<double>(config.n) * static_cast<double>(config.trials));
  }
  return report;
}

ExperimentReport selfconverse_impl(const ExperimentConfig& config,
                                   bool parallel) {
  check_config(config);
  std::vector<std::uint8_t> success(config.trials, 0);
  std::vector<long long> moved(config.trials, -1);
  run_trials(config.trials, parallel, [&](std::uint64_t t) {
    SplitMix64 rng = SplitMix64::substream(config.seed, t);
    const MixedGraph x = sample_mixed(config.n, config.p, rng);
    const iso::IsoWitness witness = iso::is_self_converse(x);
    success[t] = witness.found ? 1 : 0;
    if (witness.found) moved[t] = witness.map->moved_count();
  });
  ExperimentReport report = finalize("selfconverse", config, success);
  std::vector<long long> moved_found;
  for (long long m : moved) {
    if (m >= 0) moved_found.push_back(m);
  }
  if (!moved_found.empty()) {
    report.histograms["witness_moved_vertices"] = histogram_of(moved_found);
  }
  return report;
}

}  // namespace

Graph sample_graph(int n, double p, SplitMix64& rng) {
  std::vector<VertexPair> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

MixedGraph sample_mixed(int n, double p, SplitMix64& rng) {
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool forward = rng.bernoulli(p);
      const bool backward = rng.bernoulli(p);
      if (forward && backward) {
        edges.emplace_back(u, v);
      } else if (forward) {
        arcs.emplace_back(u, v);
      } else if (backward) {
        arcs.emplace_back(v, u);
      }
    }
  }
  return MixedGraph(n, std::move(edges), std::move(arcs));
}

ExperimentReport run_asymmetry_experiment(const ExperimentConfig& config) {
  return asymmetry_impl(config, true);
}

ExperimentReport run_asymmetry_experiment_serial(
    const ExperimentConfig& config) {
  return asymmetry_impl(config, false);
}

ExperimentReport run_lemma1_experiment(const ExperimentConfig& config) {
  return lemma1_impl(config, true);
}

ExperimentReport run_lemma1_experiment_serial(const ExperimentConfig& config) {
  return lemma1_impl(config, false);
}

ExperimentReport run_selfconverse_experiment(const ExperimentConfig& config) {
  return selfconverse_impl(config, true);
}

ExperimentReport run_selfconverse_experiment_serial(
    const ExperimentConfig& config) {
  return selfconverse_impl(config, false);
}

nlohmann::json to_json(const ExperimentReport& report) {
  nlohmann::json histograms = nlohmann::json::object();
  for (const auto& [name, hist] : report.histograms) {
    nlohmann::json buckets = nlohmann::json::array();
    for (const auto& [value, count] : hist) {
      buckets.push_back(nlohmann::json::array({value, count}));
    }
    histograms[name] = std::move(buckets);
  }
  nlohmann::json scalars = nlohmann::json::object();
  for (const auto& [name, value] : report.scalars) scalars[name] = value;
  return nlohmann::json{
      {"schema", 1},
      {"experiment", report.experiment},
      {"config",
       {{"n", report.config.n},
        {"p", report.config.p},
        {"trials", report.config.trials},
        {"seed", report.config.seed},
        {"epsilon", report.config.epsilon}}},
      {"successes", report.successes},
      {"trials", report.trials},
      {"estimate", report.estimate},
      {"stderr", report.standard_error},
      {"auxiliary", {{"histograms", histograms}, {"scalars", scalars}}},
  };
}

}  // namespace mixedgraphs::mc

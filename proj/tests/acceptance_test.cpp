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

// Acceptance suite: one pass/fail line per criterion. Exercises the library
// directly and the CLI binary (passed via --cli) where the criterion is
// about the command-line surface.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "mixedgraphs/census.hpp"
#include "mixedgraphs/iso.hpp"
#include "mixedgraphs/oracle.hpp"
#include "mixedgraphs/pair_code.hpp"
#include "mixedgraphs/random_models.hpp"
#include "mixedgraphs/rng.hpp"
#include "mixedgraphs/spectral.hpp"
#include "test_util.hpp"

using namespace mixedgraphs;

namespace {

using testutil::CommandResult;
using testutil::quoted;
using testutil::run_command;

class Suite {
 public:
  void criterion(int number, const std::string& label, bool ok,
                 const std::string& detail, double seconds) {
    std::string line = "criterion " + std::to_string(number) + " (" + label +
                       "): " + (ok ? "PASS" : "FAIL");
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, " [%.1fs]", seconds);
    line += elapsed;
    if (!detail.empty()) line += " | " + detail;
    std::puts(line.c_str());
    std::fflush(stdout);
    if (!ok) ++failures_;
  }

  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Reference fractions f(3)..f(20); same table the CLI embeds for --verify.
const std::vector<std::pair<int, std::string>> kReference = {
    {3, "6.25e-1"},  {4, "3.21e-1"},  {5, "7.36e-2"},   {6, "9.87e-3"},
    {7, "6.16e-4"},  {8, "2.20e-5"},  {9, "3.89e-7"},   {10, "3.79e-9"},
    {11, "1.85e-11"}, {12, "4.89e-14"}, {13, "6.50e-17"}, {14, "4.58e-20"},
    {15, "1.63e-23"}, {16, "3.06e-27"}, {17, "2.90e-31"}, {18, "1.43e-35"},
    {19, "3.59e-40"}, {20, "4.64e-45"},
};

void criterion1_table(Suite& suite, const std::string& cli) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  for (const auto& [n, expected] : kReference) {
    const std::string rendered = census::selfconverse_fraction(n).rendered;
    if (rendered != expected) {
      ok = false;
      detail = "library f(" + std::to_string(n) + ") = " + rendered +
               ", expected " + expected;
      break;
    }
  }

  const CommandResult verify =
      run_command(quoted(cli) + " census --min-n 3 --max-n 20 --verify");
  if (verify.exit_code != 0) {
    ok = false;
    detail = "CLI --verify exited " + std::to_string(verify.exit_code);
  } else if (verify.output.find("verify: all 18 reference values match") ==
             std::string::npos) {
    ok = false;
    detail = "CLI --verify did not report a full match";
  }
  suite.criterion(1, "Table reproduction, census --verify vs 18 references",
                  ok, detail, seconds_since(start));
}

void criterion2_oracle(Suite& suite) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 4 && ok; ++n) {
    const oracle::OracleCensus brute = oracle::brute_force_census(n);
    const census::CensusResult burnside = census::selfconverse_fraction(n);
    if (BigInt(brute.unlabeled_total) != burnside.mixed_count ||
        BigInt(brute.unlabeled_selfconverse) != burnside.selfconverse_count) {
      ok = false;
      detail = "disagreement at n = " + std::to_string(n);
    }
  }
  suite.criterion(2, "oracle/census equivalence for n in {1,2,3,4}", ok,
                  detail, seconds_since(start));
}

void criterion2b_oracle_n5(Suite& suite) {
  const auto start = std::chrono::steady_clock::now();
  oracle::OracleOptions options;
  options.allow_n5 = true;
  const oracle::OracleCensus brute = oracle::brute_force_census(5, options);
  const census::CensusResult burnside = census::selfconverse_fraction(5);
  const bool ok =
      BigInt(brute.unlabeled_total) == burnside.mixed_count &&
      BigInt(brute.unlabeled_selfconverse) == burnside.selfconverse_count;
  const std::string detail =
      "oracle M=" + std::to_string(brute.unlabeled_total) +
      " S=" + std::to_string(brute.unlabeled_selfconverse) + ", census M=" +
      burnside.mixed_count.str() + " S=" + burnside.selfconverse_count.str();
  suite.criterion(2, "oracle/census equivalence for n = 5 (opt-in)", ok,
                  detail, seconds_since(start));
}

void criterion3_n3_classes(Suite& suite) {
  const auto start = std::chrono::steady_clock::now();
  // Route 1: iso module over class representatives of all 64 labeled graphs.
  std::set<std::string> classes;
  int selfconverse = 0;
  for (PairCode code = 0; code < 64; ++code) {
    const MixedGraph x = decode_pair_states(3, code);
    if (classes.insert(iso::canonical_form(x)).second &&
        iso::is_self_converse(x).found) {
      ++selfconverse;
    }
  }
  // Route 2: the Burnside census.
  const bool ok = classes.size() == 16 && selfconverse == 10 &&
                  census::count_mixed_graphs(3) == 16 &&
                  census::count_selfconverse(3) == 10;
  const std::string detail = "iso route: " + std::to_string(classes.size()) +
                             " classes, " + std::to_string(selfconverse) +
                             " self-converse";
  suite.criterion(3, "n=3: 10 of 16 classes self-converse, two routes", ok,
                  detail, seconds_since(start));
}

void criterion4_cospectral(Suite& suite) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  const auto check_graph = [&](const MixedGraph& x) {
    if (!spectral::are_cospectral(x, converse(x))) {
      ok = false;
      detail = "cospectrality failed at n = " + std::to_string(x.order());
      return;
    }
    const spectral::CharPoly poly =
        spectral::char_poly(spectral::hermitian_adjacency(x));
    const int n = x.order();
    if (n >= 2 &&
        poly.coeffs[n - 2] != -BigInt(x.edge_count() + x.arc_count())) {
      ok = false;
      detail = "coefficient identity failed at n = " + std::to_string(n);
    }
  };

  for (PairCode code = 0; code < 64 && ok; ++code) {
    check_graph(decode_pair_states(3, code));
  }
  for (int n = 2; n <= 8 && ok; ++n) {
    SplitMix64 rng = SplitMix64::substream(2026, n);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      check_graph(mc::sample_mixed(n, 0.5, rng));
    }
  }
  suite.criterion(4,
                  "converse cospectrality, 64 exhaustive + 1000 random per "
                  "n in 2..8",
                  ok, detail, seconds_since(start));
}

void criterion5_witnesses(Suite& suite) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  int checked = 0;
  for (int trial = 0; trial < 10000 && ok; ++trial) {
    const int n = 2 + trial % 6;  // 2..7
    SplitMix64 rng = SplitMix64::substream(555, trial);
    const MixedGraph x = testutil::random_mixed_graph(n, rng);
    const Permutation f = testutil::random_permutation(n, rng);
    const MixedGraph y = apply_permutation(x, f);

    const iso::IsoWitness mapped = iso::find_isomorphism(x, y);
    if (!mapped.found || apply_permutation(x, *mapped.map) != y) {
      ok = false;
      detail = "isomorphism witness failed at trial " + std::to_string(trial);
      break;
    }
    const iso::IsoWitness sc = iso::is_self_converse(x);
    if (sc.found) {
      const Graph sym = symmetric_subgraph(x);
      if (apply_permutation(x, *sc.map) != converse(x) ||
          apply_permutation(sym, *sc.map) != sym) {
        ok = false;
        detail = "self-converse witness failed at trial " +
                 std::to_string(trial);
        break;
      }
    }
    ++checked;
  }
  suite.criterion(5,
                  "witness soundness over 10^4 random instances, n <= 7", ok,
                  detail.empty() ? std::to_string(checked) + " checked"
                                 : detail,
                  seconds_since(start));
}

void criterion6_asymmetry_trend(Suite& suite) {
  const auto start = std::chrono::steady_clock::now();
  mc::ExperimentConfig config;
  config.p = 0.25;
  config.trials = 500;
  config.seed = 1;  // frozen after the pilot run

  std::vector<double> estimates;
  for (int n : {10, 20, 40}) {
    config.n = n;
    estimates.push_back(mc::run_asymmetry_experiment(config).estimate);
  }
  const bool ok = estimates[0] <= estimates[1] &&
                  estimates[1] <= estimates[2] && estimates[2] >= 0.95;
  const std::string detail =
      "estimates " + std::to_string(estimates[0]) + " <= " +
      std::to_string(estimates[1]) + " <= " + std::to_string(estimates[2]);
  suite.criterion(6, "asymmetric fraction non-decreasing over n in "
                     "{10,20,40}, >= 0.95 at 40",
                  ok, detail, seconds_since(start));
}

void criterion7_degree_codegree(Suite& suite) {
  const auto start = std::chrono::steady_clock::now();
  mc::ExperimentConfig config;
  config.n = 400;
  config.p = 0.25;
  config.trials = 100;
  config.seed = 1;
  config.epsilon = 0.5;
  const mc::ExperimentReport report = mc::run_lemma1_experiment(config);

  // Mean degree of the pooled sample vs (n-1)/4, with the exact binomial
  // standard error of the pooled estimate.
  const double pairs = 400.0 * 399.0 / 2.0;
  const double expected = 399.0 / 4.0;
  const double sigma =
      2.0 * std::sqrt(pairs * 100.0 * 0.25 * 0.75) / (400.0 * 100.0);
  const double mean_degree = report.scalars.at("mean_degree");
  const bool ok = report.estimate == 1.0 &&
                  std::abs(mean_degree - expected) <= 5.0 * sigma;
  const std::string detail =
      "violations " + std::to_string(report.trials - report.successes) +
      ", mean degree " + std::to_string(mean_degree);
  suite.criterion(7, "degree/codegree bounds at n=400, eps=0.5: zero "
                     "violations, mean degree within 5 sigma",
                  ok, detail, seconds_since(start));
}

void criterion8_selfconverse_vanishing(Suite& suite) {
  const auto start = std::chrono::steady_clock::now();
  mc::ExperimentConfig config;
  config.p = 0.5;
  config.trials = 10000;
  config.seed = 1;

  config.n = 2;
  const double est2 = mc::run_selfconverse_experiment(config).estimate;
  config.n = 3;
  const double est3 = mc::run_selfconverse_experiment(config).estimate;
  config.n = 4;
  const double est4 = mc::run_selfconverse_experiment(config).estimate;
  config.n = 8;
  const double est8 = mc::run_selfconverse_experiment(config).estimate;

  // Exact labeled reference from the exhaustive oracle.
  const BigRational q3 = oracle::labeled_selfconverse_fraction(3);
  const double q3d = static_cast<double>(q3);
  const double sigma3 = std::sqrt(q3d * (1.0 - q3d) / 10000.0);

  const bool ok = est2 == 1.0 && std::abs(est3 - q3d) <= 3.0 * sigma3 &&
                  est8 < est4 && est4 < est2;
  const std::string detail = "est(2)=" + std::to_string(est2) + ", est(3)=" +
                             std::to_string(est3) + " vs exact " +
                             std::to_string(q3d) + ", est(4)=" +
                             std::to_string(est4) + ", est(8)=" +
                             std::to_string(est8);
  suite.criterion(8, "labeled self-converse estimates vanish with n", ok,
                  detail, seconds_since(start));
}

void criterion9_determinism(Suite& suite, const std::string& cli) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  const std::vector<std::string> configs = {
      " mc selfconverse --n 6 --trials 300 --seed 42 --format json",
      " mc asymmetry --n 12 --trials 200 --seed 9 --format json",
      " mc lemma1 --n 60 --trials 50 --seed 5 --epsilon 0.5 --format json",
  };
  for (const std::string& args : configs) {
    std::vector<std::string> runs;
    for (const std::string& prefix :
         {std::string(""), std::string("OMP_NUM_THREADS=1 "),
          std::string("OMP_NUM_THREADS=2 ")}) {
      for (const std::string threads : {"", " --threads 1", " --threads 2"}) {
        const CommandResult r =
            run_command(prefix + quoted(cli) + args + threads);
        if (r.exit_code != 0) {
          ok = false;
          detail = "command failed:" + args;
        }
        runs.push_back(r.output);
      }
    }
    // The serial reference must emit the identical report too.
    const CommandResult serial =
        run_command(quoted(cli) + args + " --serial");
    if (serial.exit_code != 0) ok = false;
    runs.push_back(serial.output);
    for (const std::string& run : runs) {
      if (run != runs.front()) {
        ok = false;
        detail = "outputs differ for" + args;
      }
    }
  }
  suite.criterion(9, "byte-identical mc JSON for any worker count", ok,
                  detail, seconds_since(start));
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  bool only_n5 = false;
  bool with_n5 = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else if (arg == "--only-n5") {
      only_n5 = true;
    } else if (arg == "--with-n5") {
      with_n5 = true;
    } else {
      std::cerr << "usage: acceptance_test --cli PATH [--only-n5|--with-n5]\n";
      return 2;
    }
  }
  if (cli.empty() && !only_n5) {
    std::cerr << "acceptance_test: --cli PATH is required\n";
    return 2;
  }

  Suite suite;
  if (only_n5) {
    criterion2b_oracle_n5(suite);
  } else {
    criterion1_table(suite, cli);
    criterion2_oracle(suite);
    if (with_n5) criterion2b_oracle_n5(suite);
    criterion3_n3_classes(suite);
    criterion4_cospectral(suite);
    criterion5_witnesses(suite);
    criterion6_asymmetry_trend(suite);
    criterion7_degree_codegree(suite);
    criterion8_selfconverse_vanishing(suite);
    criterion9_determinism(suite, cli);
  }

  if (suite.failures() == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", suite.failures());
  return 1;
}

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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixedgraphs/census.hpp"
#include "mixedgraphs/iso.hpp"
#include "mixedgraphs/oracle.hpp"
#include "mixedgraphs/random_models.hpp"
#include "mixedgraphs/rng.hpp"
#include "mixedgraphs/spectral.hpp"

namespace {

using nlohmann::json;

// Known self-converse fractions f(n) for 3 <= n <= 20, used by --verify.
struct ReferenceFraction {
  int n;
  const char* rendered;
};
constexpr ReferenceFraction kReferenceFractions[] = {
    {3, "6.25e-1"},  {4, "3.21e-1"},  {5, "7.36e-2"},  {6, "9.87e-3"},
    {7, "6.16e-4"},  {8, "2.20e-5"},  {9, "3.89e-7"},  {10, "3.79e-9"},
    {11, "1.85e-11"}, {12, "4.89e-14"}, {13, "6.50e-17"}, {14, "4.58e-20"},
    {15, "1.63e-23"}, {16, "3.06e-27"}, {17, "2.90e-31"}, {18, "1.43e-35"},
    {19, "3.59e-40"}, {20, "4.64e-45"},
};

const char* reference_rendered(int n) {
  for (const auto& ref : kReferenceFractions) {
    if (ref.n == n) return ref.rendered;
  }
  return nullptr;
}

std::string double_repr(double value) { return json(value).dump(); }

struct OutputOptions {
  std::string format = "table";
  std::string path;  // empty = stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions* out) {
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", out->path, "Write the report to a file");
}

void emit(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + out.path);
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open input file " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string text;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) text += "  ";
      text.append(width[c] - row[c].size(), ' ');
      text += row[c];
    }
    text += "\n";
  }
  return text;
}

// ---------------------------------------------------------------------------
// census

struct CensusArgs {
  int min_n = 3;
  int max_n = 20;
  int guard = mixedgraphs::census::kDefaultCensusLimit;
  bool exact = false;
  bool verify = false;
  bool serial = false;
  OutputOptions out;
};

int run_census(const CensusArgs& args) {
  namespace census = mixedgraphs::census;
  if (args.min_n < 1 || args.max_n < args.min_n) {
    throw std::invalid_argument("need 1 <= min-n <= max-n");
  }
  std::vector<census::CensusResult> results;
  for (int n = args.min_n; n <= args.max_n; ++n) {
    results.push_back(args.serial
                          ? census::selfconverse_fraction_serial(n, args.guard)
                          : census::selfconverse_fraction(n, args.guard));
  }

  struct Mismatch {
    int n;
    std::string computed;
    std::string expected;
  };
  std::vector<Mismatch> mismatches;
  int checked = 0;
  if (args.verify) {
    for (const auto& result : results) {
      const char* expected = reference_rendered(result.n);
      if (!expected) continue;
      ++checked;
      if (result.rendered != expected) {
        mismatches.push_back({result.n, result.rendered, expected});
      }
    }
  }

  std::string text;
  if (args.out.format == "json") {
    json rows = json::array();
    for (const auto& result : results) rows.push_back(census::to_json(result));
    json doc{{"schema", 1}, {"command", "census"}, {"rows", rows}};
    if (args.verify) {
      json bad = json::array();
      for (const auto& m : mismatches) {
        bad.push_back(json{{"n", m.n},
                           {"computed", m.computed},
                           {"expected", m.expected}});
      }
      doc["verify"] = json{{"checked", checked}, {"mismatches", bad}};
    }
    text = doc.dump(2) + "\n";
  } else if (args.out.format == "csv") {
    text = std::string(census::kCensusCsvHeader) + "\n";
    for (const auto& result : results) {
      text += census::to_csv_row(result) + "\n";
    }
  } else {
    std::vector<std::vector<std::string>> rows;
    rows.push_back(args.exact
                       ? std::vector<std::string>{"n", "M(n)", "S(n)",
                                                  "S(n)/M(n)", "f(n)"}
                       : std::vector<std::string>{"n", "M(n)", "S(n)", "f(n)"});
    for (const auto& result : results) {
      std::vector<std::string> row{std::to_string(result.n),
                                   result.mixed_count.str(),
                                   result.selfconverse_count.str()};
      if (args.exact) {
        row.push_back(result.selfconverse_count.str() + "/" +
                      result.mixed_count.str());
      }
      row.push_back(result.rendered);
      rows.push_back(std::move(row));
    }
    text = render_table(rows);
    if (args.verify) {
      if (mismatches.empty()) {
        text += "verify: all " + std::to_string(checked) +
                " reference values match\n";
      } else {
        for (const auto& m : mismatches) {
          text += "verify: n=" + std::to_string(m.n) + " computed " +
                  m.computed + " expected " + m.expected + "\n";
        }
      }
    }
  }
  emit(args.out, text);

  if (args.verify && !mismatches.empty()) {
    std::cerr << "error: " << mismatches.size()
              << " census value(s) disagree with the reference table\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  int n = 3;
  bool allow_n5 = false;
  bool serial = false;
  OutputOptions out;
};

int run_oracle(const OracleArgs& args) {
  namespace oracle = mixedgraphs::oracle;
  oracle::OracleOptions options;
  options.allow_n5 = args.allow_n5;
  const oracle::OracleCensus census =
      args.serial ? oracle::brute_force_census_serial(args.n, options)
                  : oracle::brute_force_census(args.n, options);

  std::string text;
  if (args.out.format == "json") {
    json doc{{"schema", 1},
             {"command", "oracle"},
             {"rows", json::array({oracle::to_json(census)})}};
    text = doc.dump(2) + "\n";
  } else if (args.out.format == "csv") {
    text = std::string(oracle::kOracleCsvHeader) + "\n" +
           oracle::to_csv_row(census) + "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "labeled", "L(n)", "M(n)", "S(n)"});
    rows.push_back({std::to_string(census.n),
                    std::to_string(census.labeled_total),
                    std::to_string(census.labeled_selfconverse),
                    std::to_string(census.unlabeled_total),
                    std::to_string(census.unlabeled_selfconverse)});
    text = render_table(rows);
  }
  emit(args.out, text);
  return 0;
}

// ---------------------------------------------------------------------------
// mc

struct McArgs {
  std::string experiment;
  int n = 0;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::optional<double> p;
  double epsilon = 0.1;
  bool serial = false;
  OutputOptions out;
};

int run_mc(const McArgs& args) {
  namespace mc = mixedgraphs::mc;
  mc::ExperimentConfig config;
  config.n = args.n;
  config.trials = args.trials;
  config.seed = args.seed;
  config.epsilon = args.epsilon;
  config.p = args.p.value_or(args.experiment == "selfconverse" ? 0.5 : 0.25);

  mc::ExperimentReport report;
  if (args.experiment == "asymmetry") {
    report = args.serial ? mc::run_asymmetry_experiment_serial(config)
                         : mc::run_asymmetry_experiment(config);
  } else if (args.experiment == "lemma1") {
    report = args.serial ? mc::run_lemma1_experiment_serial(config)
                         : mc::run_lemma1_experiment(config);
  } else {
    report = args.serial ? mc::run_selfconverse_experiment_serial(config)
                         : mc::run_selfconverse_experiment(config);
  }

  std::string text;
  if (args.out.format == "json") {
    text = mc::to_json(report).dump(2) + "\n";
  } else if (args.out.format == "csv") {
    text =
        "experiment,n,p,trials,seed,epsilon,successes,estimate,stderr\n" +
        report.experiment + "," + std::to_string(report.config.n) + "," +
        double_repr(report.config.p) + "," +
        std::to_string(report.config.trials) + "," +
        std::to_string(report.config.seed) + "," +
        double_repr(report.config.epsilon) + "," +
        std::to_string(report.successes) + "," +
        double_repr(report.estimate) + "," +
        double_repr(report.standard_error) + "\n";
  } else {
    text = "experiment: " + report.experiment + "\n" +
           "n: " + std::to_string(report.config.n) +
           "  p: " + double_repr(report.config.p) +
           "  trials: " + std::to_string(report.config.trials) +
           "  seed: " + std::to_string(report.config.seed) +
           "  epsilon: " + double_repr(report.config.epsilon) + "\n" +
           "successes: " + std::to_string(report.successes) + "\n" +
           "estimate: " + double_repr(report.estimate) + "\n" +
           "stderr: " + double_repr(report.standard_error) + "\n";
    for (const auto& [name, value] : report.scalars) {
      text += name + ": " + double_repr(value) + "\n";
    }
  }
  emit(args.out, text);
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumArgs {
  std::string input;
  bool random = false;
  int n = 6;
  std::uint64_t seed = 0;
  double p = 0.5;
  int guard = mixedgraphs::spectral::kDefaultSpectralLimit;
  OutputOptions out;
};

json coeff_list(const mixedgraphs::spectral::CharPoly& poly) {
  json coeffs = json::array();
  for (const auto& c : poly.coeffs) coeffs.push_back(c.str());
  return coeffs;
}

std::string coeff_text(const mixedgraphs::spectral::CharPoly& poly) {
  std::string text = "[";
  for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
    if (k > 0) text += ", ";
    text += poly.coeffs[k].str();
  }
  return text + "]";
}

int run_spectrum(const SpectrumArgs& args) {
  namespace spectral = mixedgraphs::spectral;
  if (!args.random && args.input.empty()) {
    throw std::invalid_argument("spectrum needs --input FILE or --random");
  }
  mixedgraphs::MixedGraph x;
  if (args.random) {
    mixedgraphs::SplitMix64 rng(args.seed);
    x = mixedgraphs::mc::sample_mixed(args.n, args.p, rng);
  } else {
    x = mixedgraphs::mixed_graph_from_text(read_file(args.input));
  }
  const mixedgraphs::MixedGraph xc = converse(x);
  const spectral::CharPoly poly =
      spectral::char_poly(spectral::hermitian_adjacency(x), args.guard);
  const spectral::CharPoly poly_converse =
      spectral::char_poly(spectral::hermitian_adjacency(xc), args.guard);
  const bool cospectral = poly == poly_converse;

  std::string text;
  if (args.out.format == "json") {
    json doc{{"schema", 1},
             {"command", "spectrum"},
             {"graph", to_text(x)},
             {"charpoly", coeff_list(poly)},
             {"charpoly_converse", coeff_list(poly_converse)},
             {"cospectral_with_converse", cospectral}};
    if (args.random) doc["seed"] = args.seed;
    text = doc.dump(2) + "\n";
  } else if (args.out.format == "csv") {
    text = "n,cospectral_with_converse,charpoly,charpoly_converse\n" +
           std::to_string(x.order()) + "," + (cospectral ? "true" : "false") +
           ",\"" + coeff_text(poly) + "\",\"" + coeff_text(poly_converse) +
           "\"\n";
  } else {
    text = to_text(x);
    if (args.random) text += "seed: " + std::to_string(args.seed) + "\n";
    text += "charpoly (constant term first): " + coeff_text(poly) + "\n";
    text += "charpoly of converse:           " + coeff_text(poly_converse) +
            "\n";
    text += std::string("cospectral with converse: ") +
            (cospectral ? "yes" : "no") + "\n";
  }
  emit(args.out, text);
  return 0;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::string input;
  OutputOptions out;
};

int run_check(const CheckArgs& args) {
  const mixedgraphs::MixedGraph x =
      mixedgraphs::mixed_graph_from_text(read_file(args.input));
  const mixedgraphs::iso::IsoWitness witness = mixedgraphs::iso::is_self_converse(x);
  const std::string witness_text =
      witness.found ? (witness.map->is_identity() ? "identity"
                                                  : witness.map->cycle_notation())
                    : "";

  std::string text;
  if (args.out.format == "json") {
    json doc{{"schema", 1},
             {"command", "check"},
             {"self_converse", witness.found}};
    if (witness.found) doc["witness"] = witness_text;
    text = doc.dump(2) + "\n";
  } else if (args.out.format == "csv") {
    text = "self_converse,witness\n" +
           std::string(witness.found ? "true" : "false") + "," + witness_text +
           "\n";
  } else {
    text = witness.found ? "self-converse: yes, witness " + witness_text + "\n"
                         : "self-converse: no\n";
  }
  emit(args.out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact census, search and simulation for mixed graphs"};
  app.require_subcommand(1);

  int threads = 0;
  const auto add_threads_flag = [&threads](CLI::App* cmd) {
    cmd->add_option("--threads", threads,
                    "Worker threads for parallel kernels (0 = runtime default)");
  };

  CensusArgs census_args;
  CLI::App* census_cmd = app.add_subcommand(
      "census", "Exact unlabeled census of mixed graphs: M(n), S(n), f(n)");
  census_cmd->add_option("--min-n", census_args.min_n, "Smallest order")
      ->capture_default_str();
  census_cmd->add_option("--max-n", census_args.max_n, "Largest order")
      ->capture_default_str();
  census_cmd->add_option("--guard", census_args.guard, "Order guard limit")
      ->capture_default_str();
  census_cmd->add_flag("--exact", census_args.exact,
                       "Include the exact S(n)/M(n) column in table output");
  census_cmd->add_flag("--verify", census_args.verify,
                       "Compare f(n) against the embedded reference values");
  census_cmd->add_flag("--serial", census_args.serial,
                       "Use the serial reference implementation");
  add_output_flags(census_cmd, &census_args.out);
  add_threads_flag(census_cmd);

  OracleArgs oracle_args;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Brute-force census by exhaustive enumeration (small n)");
  oracle_cmd->add_option("--n", oracle_args.n, "Order")->required();
  oracle_cmd->add_flag("--allow-n5", oracle_args.allow_n5,
                       "Opt in to the n = 5 run (about 10^6 graphs)");
  oracle_cmd->add_flag("--serial", oracle_args.serial,
                       "Use the serial reference implementation");
  add_output_flags(oracle_cmd, &oracle_args.out);
  add_threads_flag(oracle_cmd);

  McArgs mc_args;
  CLI::App* mc_cmd =
      app.add_subcommand("mc", "Monte Carlo experiments on random models");
  mc_cmd->add_option("experiment", mc_args.experiment, "Experiment name")
      ->required()
      ->check(CLI::IsMember({"asymmetry", "lemma1", "selfconverse"}));
  mc_cmd->add_option("--n", mc_args.n, "Order")->required();
  mc_cmd->add_option("--trials", mc_args.trials, "Trial count")
      ->capture_default_str();
  mc_cmd->add_option("--seed", mc_args.seed, "Master seed")
      ->capture_default_str();
  mc_cmd->add_option("--p", mc_args.p,
                     "Arc/edge probability (default 1/4; 1/2 for selfconverse)");
  mc_cmd->add_option("--epsilon", mc_args.epsilon,
                     "Tolerance for the degree/codegree bounds")
      ->capture_default_str();
  mc_cmd->add_flag("--serial", mc_args.serial,
                   "Use the serial reference implementation");
  add_output_flags(mc_cmd, &mc_args.out);
  add_threads_flag(mc_cmd);

  SpectrumArgs spectrum_args;
  CLI::App* spectrum_cmd = app.add_subcommand(
      "spectrum",
      "Exact characteristic polynomial and converse-cospectrality verdict");
  CLI::Option* spectrum_input = spectrum_cmd->add_option(
      "--input", spectrum_args.input, "Graph file in the text format");
  CLI::Option* spectrum_random = spectrum_cmd->add_flag(
      "--random", spectrum_args.random, "Sample a random mixed graph instead");
  spectrum_input->excludes(spectrum_random);
  spectrum_random->excludes(spectrum_input);
  spectrum_cmd->add_option("--n", spectrum_args.n, "Order for --random")
      ->capture_default_str();
  spectrum_cmd->add_option("--seed", spectrum_args.seed, "Seed for --random")
      ->capture_default_str();
  spectrum_cmd->add_option("--p", spectrum_args.p, "Probability for --random")
      ->capture_default_str();
  spectrum_cmd->add_option("--guard", spectrum_args.guard,
                           "Dimension guard limit")
      ->capture_default_str();
  add_output_flags(spectrum_cmd, &spectrum_args.out);

  CheckArgs check_args;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "Self-converse verdict with witness permutation");
  check_cmd->add_option("--input", check_args.input, "Graph file")->required();
  add_output_flags(check_cmd, &check_args.out);

  CLI11_PARSE(app, argc, argv);

  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (census_cmd->parsed()) return run_census(census_args);
    if (oracle_cmd->parsed()) return run_oracle(oracle_args);
    if (mc_cmd->parsed()) return run_mc(mc_args);
    if (spectrum_cmd->parsed()) return run_spectrum(spectrum_args);
    if (check_cmd->parsed()) return run_check(check_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

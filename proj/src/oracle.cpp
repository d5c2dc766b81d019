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

#include "mixedgraphs/oracle.hpp"

#include <exception>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mixedgraphs/census.hpp"
#include "mixedgraphs/iso.hpp"
#include "mixedgraphs/pair_code.hpp"

namespace mixedgraphs::oracle {

namespace {

int checked_order(int n, const OracleOptions& options) {
  if (n < 1) throw std::invalid_argument("oracle census requires n >= 1");
  const int limit = options.allow_n5 ? 5 : 4;
  if (n > limit) {
    throw SizeLimitError(
        "brute-force census is limited to n <= " + std::to_string(limit) +
        (options.allow_n5 ? "" : " (n = 5 needs the explicit opt-in)") +
        ", got n = " + std::to_string(n));
  }
  return n;
}

using ClassSizes = std::unordered_map<PairCode, std::uint64_t>;

OracleCensus census_from_classes(int n, std::uint64_t total,
                                 const ClassSizes& classes) {
  OracleCensus census;
  census.n = n;
  census.labeled_total = total;
  census.unlabeled_total = classes.size();
  for (const auto& [code, size] : classes) {
    const MixedGraph representative = decode_pair_states(n, code);
    if (iso::is_self_converse(representative).found) {
      ++census.unlabeled_selfconverse;
      census.labeled_selfconverse += size;
    }
  }
  return census;
}

}  // namespace

OracleCensus brute_force_census_serial(int n, const OracleOptions& options) {
  checked_order(n, options);
  const PairPermutationTables tables(n);
  const PairIndexer indexer(n);
  const std::uint64_t total = std::uint64_t{1} << (2 * indexer.pair_count());
  ClassSizes classes;
  for (std::uint64_t code = 0; code < total; ++code) {
    ++classes[tables.canonical(code)];
  }
  return census_from_classes(n, total, classes);
}

OracleCensus brute_force_census(int n, const OracleOptions& options) {
  checked_order(n, options);
  const PairPermutationTables tables(n);
  const PairIndexer indexer(n);
  const std::uint64_t total = std::uint64_t{1} << (2 * indexer.pair_count());

  ClassSizes classes;
#pragma omp parallel
  {
    ClassSizes local;
#pragma omp for schedule(static)
    for (long long code = 0; code < static_cast<long long>(total); ++code) {
      ++local[tables.canonical(static_cast<PairCode>(code))];
    }
#pragma omp critical
    for (const auto& [key, count] : local) classes[key] += count;
  }
  return census_from_classes(n, total, classes);
}

BigRational labeled_selfconverse_fraction(int n, const OracleOptions& options) {
  const OracleCensus census = brute_force_census(n, options);
  return BigRational(BigInt(census.labeled_selfconverse),
                     BigInt(census.labeled_total));
}

std::string to_csv_row(const OracleCensus& census) {
  const BigRational fraction(BigInt(census.unlabeled_selfconverse),
                             BigInt(census.unlabeled_total));
  const BigRational labeled(BigInt(census.labeled_selfconverse),
                            BigInt(census.labeled_total));
  return std::to_string(census.n) + "," +
         std::to_string(census.unlabeled_total) + "," +
         std::to_string(census.unlabeled_selfconverse) + "," +
         std::to_string(census.unlabeled_selfconverse) + "/" +
         std::to_string(census.unlabeled_total) + "," +
         census::render_scientific(fraction) + "," +
         std::to_string(census.labeled_total) + "," +
         std::to_string(census.labeled_selfconverse) + "," +
         std::to_string(census.labeled_selfconverse) + "/" +
         std::to_string(census.labeled_total) + "," +
         census::render_scientific(labeled);
}

nlohmann::json to_json(const OracleCensus& census) {
  const BigRational fraction(BigInt(census.unlabeled_selfconverse),
                             BigInt(census.unlabeled_total));
  const BigRational labeled(BigInt(census.labeled_selfconverse),
                            BigInt(census.labeled_total));
  return nlohmann::json{
      {"n", census.n},
      {"mixed", std::to_string(census.unlabeled_total)},
      {"selfconverse", std::to_string(census.unlabeled_selfconverse)},
      {"fraction_exact", std::to_string(census.unlabeled_selfconverse) + "/" +
                             std::to_string(census.unlabeled_total)},
      {"fraction", census::render_scientific(fraction)},
      {"labeled_total", std::to_string(census.labeled_total)},
      {"labeled_selfconverse", std::to_string(census.labeled_selfconverse)},
      {"labeled_fraction_exact",
       std::to_string(census.labeled_selfconverse) + "/" +
           std::to_string(census.labeled_total)},
      {"labeled_fraction", census::render_scientific(labeled)},
  };
}

}  // namespace mixedgraphs::oracle

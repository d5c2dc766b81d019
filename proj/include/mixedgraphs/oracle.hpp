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
#include <string>

#include <json.hpp>

#include "mixedgraphs/bigint.hpp"
#include "mixedgraphs/errors.hpp"

namespace mixedgraphs::oracle {

struct OracleOptions {
  // n = 5 iterates 4^10 labeled graphs against 120 relabelings; opt in.
  bool allow_n5 = false;
};

struct OracleCensus {
  int n = 0;
  std::uint64_t labeled_total = 0;         // 4^C(n,2)
  std::uint64_t labeled_selfconverse = 0;  // L(n)
  std::uint64_t unlabeled_total = 0;       // M(n)
  std::uint64_t unlabeled_selfconverse = 0;  // S(n)
};

// Ground truth by exhaustion: every labeled mixed graph of order n is
// enumerated as a base-4 pair-state counter; isomorphism classes are keyed
// by the minimum relabeled code, and each class representative is decided
// by the backtracking self-converse test. Self-conversality is a class
// invariant, so L(n) is the total size of the self-converse classes.
// Guarded to n <= 4 unless options.allow_n5. OpenMP-parallel over the
// enumeration range; the _serial variant is the reference implementation.
OracleCensus brute_force_census(int n, const OracleOptions& options = {});
OracleCensus brute_force_census_serial(int n, const OracleOptions& options = {});

// L(n) / 4^C(n,2) in lowest terms.
BigRational labeled_selfconverse_fraction(int n,
                                          const OracleOptions& options = {});

// Same row schema as the census emitters plus the labeled columns.
std::string to_csv_row(const OracleCensus& census);
nlohmann::json to_json(const OracleCensus& census);

inline constexpr const char* kOracleCsvHeader =
    "n,mixed,selfconverse,fraction_exact,fraction,labeled_total,"
    "labeled_selfconverse,labeled_fraction_exact,labeled_fraction";

}  // namespace mixedgraphs::oracle

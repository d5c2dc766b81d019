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

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mixedgraphs/bigint.hpp"
#include "mixedgraphs/errors.hpp"

namespace mixedgraphs::census {

// Census evaluation is guarded; cost grows like p(n) * O(n^2) big-int work.
inline constexpr int kDefaultCensusLimit = 64;

// A partition of n: positive parts, stored sorted descending. Partitions
// index the conjugacy classes of the symmetric group, and every count below
// is evaluated per class.
class Partition {
 public:
  Partition() = default;  // the empty partition of 0
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int sum() const { return sum_; }

  // (part value, multiplicity), descending by part value.
  std::vector<std::pair<int, int>> multiplicities() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

// Orbit structure of the permutation induced on unordered vertex pairs by
// any permutation of a given cycle type. An orbit is "swapping" when the
// power that closes it exchanges the two endpoints of the pair.
struct PairOrbitGroup {
  long long length = 0;
  bool swapping = false;
  long long count = 0;

  friend bool operator==(const PairOrbitGroup&, const PairOrbitGroup&) =
      default;
};

class PairOrbitProfile {
 public:
  void add(long long length, bool swapping, long long count);

  // Sorted by (length, swapping), multiplicities merged.
  const std::vector<PairOrbitGroup>& groups() const;
  long long total_length_mass() const;
  long long orbit_count(bool swapping) const;

 private:
  mutable std::vector<PairOrbitGroup> groups_;
  mutable bool normalized_ = true;
  void normalize() const;
};

// Every partition of n exactly once, in descending lexicographic order.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> partitions(int n);

// n! / prod(c^m_c * m_c!) over part values c with multiplicities m_c.
BigInt conjugacy_class_size(const Partition& lambda);

// Orbits of the induced pair permutation, computed per cycle type:
// within a length-c cycle, (c-1)/2 non-swapping orbits of length c for odd
// c, and for even c, c/2-1 non-swapping orbits of length c plus one
// swapping orbit of length c/2; between cycles of lengths c and d,
// gcd(c,d) non-swapping orbits of length lcm(c,d).
PairOrbitProfile pair_orbit_profile(const Partition& lambda);

// Labeled mixed graphs fixed by a permutation of class lambda: each
// non-swapping orbit admits all 4 pair states, each swapping orbit only the
// 2 swap-invariant ones.
BigInt fixed_count_mixed(const Partition& lambda);

// Labeled X mapped onto their converse by a permutation of class lambda.
// Closing an orbit of length L composes the endpoint action with L arc
// reversals: even L gives (4 non-swapping / 2 swapping) admissible states,
// odd L gives (2 non-swapping / 4 swapping).
BigInt fixed_count_selfconverse(const Partition& lambda);

// Isomorphism classes of mixed graphs of order n (Burnside average of
// fixed_count_mixed over all classes). OpenMP-parallel over partitions;
// the _serial variant is the reference implementation.
BigInt count_mixed_graphs(int n, int max_n = kDefaultCensusLimit);
BigInt count_mixed_graphs_serial(int n, int max_n = kDefaultCensusLimit);

// Self-converse isomorphism classes of order n (Burnside average of
// fixed_count_selfconverse; orbits fixed by the converse involution).
BigInt count_selfconverse(int n, int max_n = kDefaultCensusLimit);
BigInt count_selfconverse_serial(int n, int max_n = kDefaultCensusLimit);

struct CensusResult {
  int n = 0;
  BigInt mixed_count;         // M(n)
  BigInt selfconverse_count;  // S(n)
  BigRational fraction;       // S(n)/M(n), lowest terms
  std::string rendered;       // 3 significant digits, "d.dde<exp>"
};

CensusResult selfconverse_fraction(int n, int max_n = kDefaultCensusLimit);
CensusResult selfconverse_fraction_serial(int n,
                                          int max_n = kDefaultCensusLimit);

// Scientific rendering of a positive rational, truncated toward zero at the
// requested precision, e.g. 5/8 -> "6.25e-1". Truncation matches the
// convention of the reference fraction tables. Exact integer arithmetic.
std::string render_scientific(const BigRational& value,
                              int significant_digits = 3);

inline constexpr const char* kCensusCsvHeader =
    "n,mixed,selfconverse,fraction_exact,fraction";

std::string to_csv_row(const CensusResult& result);
nlohmann::json to_json(const CensusResult& result);

}  // namespace mixedgraphs::census

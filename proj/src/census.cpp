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

#include "mixedgraphs/census.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mixedgraphs::census {

namespace {

void check_census_args(int n, int max_n) {
  if (n < 0) throw std::invalid_argument("census order must be non-negative");
  if (n > max_n) {
    throw SizeLimitError("census is limited to n <= " + std::to_string(max_n) +
                         ", got n = " + std::to_string(n));
  }
}

// Partitions of `remaining` with parts <= `bound`, largest part first.
template <typename Fn>
void emit_partitions(int remaining, int bound, std::vector<int>& acc,
                     const Fn& fn) {
  if (remaining == 0) {
    fn(acc);
    return;
  }
  for (int part = std::min(bound, remaining); part >= 1; --part) {
    acc.push_back(part);
    emit_partitions(remaining - part, part, acc, fn);
    acc.pop_back();
  }
}

struct BurnsideSums {
  BigInt mixed = 0;
  BigInt selfconverse = 0;
};

BurnsideSums class_term(const Partition& lambda) {
  const BigInt size = conjugacy_class_size(lambda);
  return {size * fixed_count_mixed(lambda),
          size * fixed_count_selfconverse(lambda)};
}

BurnsideSums burnside_sums_serial(int n) {
  BurnsideSums sums;
  for_each_partition(n, [&](const Partition& lambda) {
    const BurnsideSums term = class_term(lambda);
    sums.mixed += term.mixed;
    sums.selfconverse += term.selfconverse;
  });
  return sums;
}

// Partitions are split by largest part; per-part subtotals are exact, so
// the merged result is identical for any schedule or thread count.
BurnsideSums burnside_sums_parallel(int n) {
  if (n == 0) return burnside_sums_serial(0);
  std::vector<BurnsideSums> by_largest(n + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (int largest = 1; largest <= n; ++largest) {
    BurnsideSums local;
    std::vector<int> acc{largest};
    emit_partitions(n - largest, largest, acc, [&](const std::vector<int>& p) {
      Partition lambda(p);
      const BurnsideSums term = class_term(lambda);
      local.mixed += term.mixed;
      local.selfconverse += term.selfconverse;
    });
    by_largest[largest] = std::move(local);
  }
  BurnsideSums sums;
  for (int largest = n; largest >= 1; --largest) {
    sums.mixed += by_largest[largest].mixed;
    sums.selfconverse += by_largest[largest].selfconverse;
  }
  return sums;
}

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator) {
  BigInt q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0) {
    throw std::logic_error("Burnside sum is not divisible by the group order");
  }
  return q;
}

CensusResult make_result(int n, const BurnsideSums& sums) {
  const BigInt group_order = factorial(n);
  CensusResult result;
  result.n = n;
  result.mixed_count = exact_quotient(sums.mixed, group_order);
  result.selfconverse_count = exact_quotient(sums.selfconverse, group_order);
  result.fraction =
      BigRational(result.selfconverse_count, result.mixed_count);
  result.rendered = render_scientific(result.fraction);
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part < 1) throw std::invalid_argument("partition parts must be >= 1");
    sum_ += part;
  }
  std::sort(parts_.rbegin(), parts_.rend());
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int part : parts_) {
    if (!out.empty() && out.back().first == part) {
      ++out.back().second;
    } else {
      out.emplace_back(part, 1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// PairOrbitProfile

void PairOrbitProfile::add(long long length, bool swapping, long long count) {
  if (count == 0) return;
  groups_.push_back({length, swapping, count});
  normalized_ = false;
}

void PairOrbitProfile::normalize() const {
  if (normalized_) return;
  std::sort(groups_.begin(), groups_.end(),
            [](const PairOrbitGroup& a, const PairOrbitGroup& b) {
              return std::tie(a.length, a.swapping) <
                     std::tie(b.length, b.swapping);
            });
  std::vector<PairOrbitGroup> merged;
  for (const auto& g : groups_) {
    if (!merged.empty() && merged.back().length == g.length &&
        merged.back().swapping == g.swapping) {
      merged.back().count += g.count;
    } else {
      merged.push_back(g);
    }
  }
  groups_ = std::move(merged);
  normalized_ = true;
}

const std::vector<PairOrbitGroup>& PairOrbitProfile::groups() const {
  normalize();
  return groups_;
}

long long PairOrbitProfile::total_length_mass() const {
  long long mass = 0;
  for (const auto& g : groups()) mass += g.length * g.count;
  return mass;
}

long long PairOrbitProfile::orbit_count(bool swapping) const {
  long long total = 0;
  for (const auto& g : groups()) {
    if (g.swapping == swapping) total += g.count;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Partition generation

void for_each_partition(int n,
                        const std::function<void(const Partition&)>& fn) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative value");
  std::vector<int> acc;
  emit_partitions(n, n, acc, [&](const std::vector<int>& parts) {
    fn(Partition(parts));
  });
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

// ---------------------------------------------------------------------------
// Per-class counts

BigInt conjugacy_class_size(const Partition& lambda) {
  BigInt denominator = 1;
  for (const auto& [part, mult] : lambda.multiplicities()) {
    denominator *= boost::multiprecision::pow(BigInt(part), mult);
    denominator *= factorial(mult);
  }
  return exact_quotient(factorial(lambda.sum()), denominator);
}

PairOrbitProfile pair_orbit_profile(const Partition& lambda) {
  PairOrbitProfile profile;
  const auto mults = lambda.multiplicities();
  for (std::size_t i = 0; i < mults.size(); ++i) {
    const auto [c, m] = mults[i];
    // Pairs inside one cycle of length c.
    if (c % 2 == 1) {
      profile.add(c, false, static_cast<long long>(m) * ((c - 1) / 2));
    } else {
      profile.add(c, false, static_cast<long long>(m) * (c / 2 - 1));
      profile.add(c / 2, true, m);
    }
    // Pairs between two distinct cycles of the same length c.
    const long long same_pairs = static_cast<long long>(m) * (m - 1) / 2;
    profile.add(c, false, same_pairs * c);
    // Pairs between cycles of different lengths c and d.
    for (std::size_t j = i + 1; j < mults.size(); ++j) {
      const auto [d, md] = mults[j];
      const long long orbits = std::gcd(c, d);
      const long long length = std::lcm<long long>(c, d);
      profile.add(length, false,
                  orbits * static_cast<long long>(m) * md);
    }
  }
  return profile;
}

BigInt fixed_count_mixed(const Partition& lambda) {
  const PairOrbitProfile profile = pair_orbit_profile(lambda);
  const long long quads = profile.orbit_count(false);
  const long long pairs = profile.orbit_count(true);
  return boost::multiprecision::pow(BigInt(2), 2 * quads + pairs);
}

BigInt fixed_count_selfconverse(const Partition& lambda) {
  const PairOrbitProfile profile = pair_orbit_profile(lambda);
  long long quads = 0, pairs = 0;
  for (const auto& g : profile.groups()) {
    const bool even_length = g.length % 2 == 0;
    if (even_length != g.swapping) {
      quads += g.count;  // even non-swapping or odd swapping: all 4 states
    } else {
      pairs += g.count;  // otherwise only the 2 converse-invariant states
    }
  }
  return boost::multiprecision::pow(BigInt(2), 2 * quads + pairs);
}

// ---------------------------------------------------------------------------
// Burnside counts

BigInt count_mixed_graphs(int n, int max_n) {
  check_census_args(n, max_n);
  return make_result(n, burnside_sums_parallel(n)).mixed_count;
}

BigInt count_mixed_graphs_serial(int n, int max_n) {
  check_census_args(n, max_n);
  return make_result(n, burnside_sums_serial(n)).mixed_count;
}

BigInt count_selfconverse(int n, int max_n) {
  check_census_args(n, max_n);
  return make_result(n, burnside_sums_parallel(n)).selfconverse_count;
}

BigInt count_selfconverse_serial(int n, int max_n) {
  check_census_args(n, max_n);
  return make_result(n, burnside_sums_serial(n)).selfconverse_count;
}

CensusResult selfconverse_fraction(int n, int max_n) {
  check_census_args(n, max_n);
  return make_result(n, burnside_sums_parallel(n));
}

CensusResult selfconverse_fraction_serial(int n, int max_n) {
  check_census_args(n, max_n);
  return make_result(n, burnside_sums_serial(n));
}

// ---------------------------------------------------------------------------
// Rendering and emission

std::string render_scientific(const BigRational& value,
                              int significant_digits) {
  if (significant_digits < 1) {
    throw std::invalid_argument("need at least one significant digit");
  }
  if (value <= 0) {
    throw std::invalid_argument("scientific rendering expects a positive value");
  }
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  int exponent = 0;
  while (num < den) {
    num *= 10;
    --exponent;
  }
  while (num >= 10 * den) {
    den *= 10;
    ++exponent;
  }
  // num/den is now in [1, 10); truncate toward zero at the requested
  // precision. Truncation is the convention of the reference tables this
  // census is compared against.
  BigInt scaled = num;
  for (int i = 1; i < significant_digits; ++i) scaled *= 10;
  BigInt q, r;
  boost::multiprecision::divide_qr(scaled, den, q, r);
  std::string digits = q.str();
  std::string mantissa = digits.substr(0, 1);
  if (significant_digits > 1) mantissa += "." + digits.substr(1);
  return mantissa + "e" + std::to_string(exponent);
}

std::string to_csv_row(const CensusResult& result) {
  return std::to_string(result.n) + "," + result.mixed_count.str() + "," +
         result.selfconverse_count.str() + "," +
         result.selfconverse_count.str() + "/" + result.mixed_count.str() +
         "," + result.rendered;
}

nlohmann::json to_json(const CensusResult& result) {
  return nlohmann::json{
      {"n", result.n},
      {"mixed", result.mixed_count.str()},
      {"selfconverse", result.selfconverse_count.str()},
      {"fraction_exact",
       result.selfconverse_count.str() + "/" + result.mixed_count.str()},
      {"fraction", result.rendered},
  };
}

}  // namespace mixedgraphs::census

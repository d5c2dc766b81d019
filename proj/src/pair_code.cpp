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

#include "mixedgraphs/pair_code.hpp"

#include <algorithm>
#include <numeric>

#include "mixedgraphs/errors.hpp"

namespace mixedgraphs {

namespace {

void check_code_order(int n) {
  if (n < 0 || n > kMaxPairCodeOrder) {
    throw SizeLimitError("pair codes support 0 <= n <= " +
                         std::to_string(kMaxPairCodeOrder) + ", got " +
                         std::to_string(n));
  }
}

constexpr std::uint64_t kHighBits = 0xAAAAAAAAAAAAAAAAULL;

}  // namespace

PairIndexer::PairIndexer(int n) : n_(n) {
  check_code_order(n);
  offset_.resize(n > 0 ? n : 0, 0);
  for (int u = 0; u < n; ++u) {
    offset_[u] = static_cast<int>(pairs_.size());
    for (int v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
  }
}

int PairIndexer::index(int u, int v) const {
  if (u > v) std::swap(u, v);
  return offset_[u] + (v - u - 1);
}

PairCode encode_pair_states(const MixedGraph& x) {
  check_code_order(x.order());
  PairIndexer idx(x.order());
  PairCode code = 0;
  for (const auto& [u, v] : x.edges()) {
    code |= PairCode{1} << (2 * idx.index(u, v));
  }
  for (const auto& [u, v] : x.arcs()) {
    const PairCode d = u < v ? 2 : 3;
    code |= d << (2 * idx.index(u, v));
  }
  return code;
}

MixedGraph decode_pair_states(int n, PairCode code) {
  PairIndexer idx(n);
  std::vector<VertexPair> edges, arcs;
  for (int i = 0; i < idx.pair_count(); ++i) {
    const auto [u, v] = idx.pair(i);
    switch ((code >> (2 * i)) & 3) {
      case 0:
        break;
      case 1:
        edges.emplace_back(u, v);
        break;
      case 2:
        arcs.emplace_back(u, v);
        break;
      case 3:
        arcs.emplace_back(v, u);
        break;
    }
  }
  return MixedGraph(n, std::move(edges), std::move(arcs));
}

PairCode converse_code(int n, PairCode code) {
  check_code_order(n);
  // XOR the low bit of every digit whose high bit is set: 2<->3, 0/1 fixed.
  return code ^ ((code & kHighBits) >> 1);
}

PairCode permute_code(int n, PairCode code, const Permutation& f) {
  if (f.size() != n) {
    throw ValidationError(ValidationError::Kind::kSizeMismatch,
                          "permutation length does not match code order");
  }
  PairIndexer idx(n);
  PairCode out = 0;
  for (int i = 0; i < idx.pair_count(); ++i) {
    const auto [u, v] = idx.pair(i);
    const int a = f(u), b = f(v);
    std::uint64_t d = (code >> (2 * i)) & 3;
    if (a > b) d ^= (d >> 1);
    out |= d << (2 * idx.index(a, b));
  }
  return out;
}

PairPermutationTables::PairPermutationTables(int n) : n_(n) {
  check_code_order(n);
  PairIndexer idx(n);
  pair_count_ = idx.pair_count();
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  do {
    for (int i = 0; i < pair_count_; ++i) {
      const auto [u, v] = idx.pair(i);
      const int a = images[u], b = images[v];
      entries_.push_back(
          Entry{static_cast<std::uint8_t>(idx.index(a, b)),
                static_cast<std::uint8_t>(a > b ? 1 : 0)});
    }
  } while (std::next_permutation(images.begin(), images.end()));
  if (pair_count_ == 0) {
    // n <= 1: one permutation, no pairs; keep one empty table slot.
    pair_count_ = 1;
    entries_.assign(1, Entry{0, 0});
  }
}

PairCode PairPermutationTables::canonical(PairCode code) const {
  PairCode best = ~PairCode{0};
  const std::size_t count = permutation_count();
  for (std::size_t p = 0; p < count; ++p) {
    best = std::min(best, apply(p, code));
  }
  return best;
}

}  // namespace mixedgraphs

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
#include <vector>

#include "mixedgraphs/graph.hpp"

namespace mixedgraphs {

// Compact pair-state encoding of a mixed graph: each unordered pair {u,v},
// u < v, taken in lexicographic order, stores one base-4 digit (2 bits):
//   0 non-adjacent, 1 edge, 2 arc u->v, 3 arc v->u.
// Enumerating all labeled mixed graphs on n vertices is then a counter
// increment over [0, 4^C(n,2)). Fits in 64 bits for n <= 8 (28 pairs).
using PairCode = std::uint64_t;

inline constexpr int kMaxPairCodeOrder = 8;

class PairIndexer {
 public:
  explicit PairIndexer(int n);

  int order() const { return n_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }

  int index(int u, int v) const;         // unordered; u != v
  VertexPair pair(int index) const { return pairs_[index]; }

 private:
  int n_;
  std::vector<VertexPair> pairs_;
  std::vector<int> offset_;  // offset_[u] = index of pair (u, u+1)
};

PairCode encode_pair_states(const MixedGraph& x);
MixedGraph decode_pair_states(int n, PairCode code);

// Swaps the two arc digits of every pair (2 <-> 3): the code of the converse.
PairCode converse_code(int n, PairCode code);

PairCode permute_code(int n, PairCode code, const Permutation& f);

// Precomputed action of every permutation in S_n on pair indices, with a
// flip bit where the image pair reverses orientation. Built once, then
// applying a permutation to a code is a tight digit loop.
class PairPermutationTables {
 public:
  explicit PairPermutationTables(int n);

  int order() const { return n_; }
  std::size_t permutation_count() const { return entries_.size() / pair_count_; }

  PairCode apply(std::size_t perm_index, PairCode code) const {
    const Entry* map = entries_.data() + perm_index * pair_count_;
    PairCode out = 0;
    for (int i = 0; i < pair_count_; ++i) {
      std::uint64_t d = (code >> (2 * i)) & 3;
      d ^= map[i].flip & (d >> 1);  // 2 <-> 3 when the pair reverses
      out |= d << (2 * map[i].target);
    }
    return out;
  }

  // Minimum of apply over all permutations: a per-class key (equal codes
  // iff the graphs are isomorphic).
  PairCode canonical(PairCode code) const;

 private:
  struct Entry {
    std::uint8_t target;
    std::uint8_t flip;  // 0 or 1
  };
  int n_;
  int pair_count_;
  std::vector<Entry> entries_;
};

}  // namespace mixedgraphs

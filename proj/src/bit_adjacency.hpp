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

#include <bit>
#include <cstdint>
#include <vector>

#include "mixedgraphs/graph.hpp"

namespace mixedgraphs {

// Word-packed adjacency rows for degree/codegree and neighborhood compares.
class BitAdjacency {
 public:
  explicit BitAdjacency(const Graph& g)
      : n_(g.order()), words_((n_ + 63) / 64), rows_(n_ * words_, 0) {
    for (const auto& [u, v] : g.edges()) {
      set(u, v);
      set(v, u);
    }
  }

  bool adjacent(int u, int v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1;
  }

  int degree(int v) const {
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
  }

  int codegree(int u, int v) const {
    int d = 0;
    const std::uint64_t* a = row(u);
    const std::uint64_t* b = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(a[w] & b[w]);
    return d;
  }

  // True when N(u)\{v} == N(v)\{u}; swapping such twins is an automorphism.
  bool twins(int u, int v) const {
    const std::uint64_t* a = row(u);
    const std::uint64_t* b = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t diff = a[w] ^ b[w];
      if (w == (u >> 6)) diff &= ~(std::uint64_t{1} << (u & 63));
      if (w == (v >> 6)) diff &= ~(std::uint64_t{1} << (v & 63));
      if (diff != 0) return false;
    }
    return true;
  }

  int order() const { return n_; }

 private:
  const std::uint64_t* row(int v) const { return rows_.data() + v * words_; }
  void set(int u, int v) {
    rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace mixedgraphs

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
#include <optional>
#include <string>

#include "mixedgraphs/graph.hpp"

namespace mixedgraphs::iso {

inline constexpr int kDefaultAutomorphismLimit = 10;
inline constexpr int kDefaultCanonicalLimit = 8;

struct IsoWitness {
  bool found = false;
  std::optional<Permutation> map;
};

// Backtracking search for a bijection f with apply_permutation(x, f) == y.
// Partial assignments are pruned by (undirected degree, out-degree,
// in-degree) compatibility; vertices and candidate images are tried in
// ascending index order, so the witness is deterministic. A size mismatch
// is simply "not isomorphic".
IsoWitness find_isomorphism(const MixedGraph& x, const MixedGraph& y);

// First non-identity automorphism in search order, if any.
std::optional<Permutation> find_nonidentity_automorphism(const Graph& g);

// True iff the identity is the only automorphism. Exits early on the first
// non-identity automorphism found.
bool is_asymmetric(const Graph& g);

// Exact automorphism group order by exhaustive pruned search.
// Throws SizeLimitError above the guard.
std::uint64_t automorphism_count(const MixedGraph& x,
                                 int max_n = kDefaultAutomorphismLimit);
std::uint64_t automorphism_count(const Graph& g,
                                 int max_n = kDefaultAutomorphismLimit);

// Witness that x is isomorphic to its converse. Every returned witness is
// re-verified internally, including that it fixes the symmetric subgraph.
IsoWitness is_self_converse(const MixedGraph& x);

// Minimum over all relabelings of the text serialization; equal byte
// strings iff isomorphic. Throws SizeLimitError above the guard.
std::string canonical_form(const MixedGraph& x,
                           int max_n = kDefaultCanonicalLimit);

}  // namespace mixedgraphs::iso

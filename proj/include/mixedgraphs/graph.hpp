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

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixedgraphs/errors.hpp"

namespace mixedgraphs {

// Vertices are 0-indexed integers in [0, n).
using VertexPair = std::pair<int, int>;

// A bijection on {0..n-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Cycle lengths, sorted descending. The cycle type of a permutation is a
  // partition of n indexing its conjugacy class.
  std::vector<int> cycle_type() const;

  int moved_count() const;

  // "(0 1)(2 4 3)" for non-trivial cycles, "()" for the identity.
  std::string cycle_notation() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// f then g on application order apply(apply(X, g), f): returns f∘g.
Permutation compose(const Permutation& f, const Permutation& g);

// Simple undirected graph: no loops, no multi-edges. Immutable value type;
// edges are normalized to u < v and kept sorted.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<VertexPair> edges);

  int order() const { return n_; }
  const std::vector<VertexPair>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int u, int v) const;
  std::vector<int> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class MixedGraph;
  struct Unchecked {};
  Graph(Unchecked, int n, std::vector<VertexPair> edges);
  friend Graph apply_permutation(const Graph&, const Permutation&);
  friend Graph symmetric_subgraph(const class MixedGraph&);
  friend Graph underlying_graph(const class MixedGraph&);

  int n_ = 0;
  std::vector<VertexPair> edges_;
};

// Mixed graph: each adjacent vertex pair carries either an undirected edge
// or a single directed arc. A pair with both orientations is an edge by
// definition and is rejected as arc input, so every labeled object has one
// representation. Immutable value type.
class MixedGraph {
 public:
  MixedGraph() = default;
  MixedGraph(int n, std::vector<VertexPair> edges, std::vector<VertexPair> arcs);

  int order() const { return n_; }
  const std::vector<VertexPair>& edges() const { return edges_; }
  const std::vector<VertexPair>& arcs() const { return arcs_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  bool has_edge(int u, int v) const;
  bool has_arc(int u, int v) const;

  // Per-vertex (undirected degree, out-degree, in-degree).
  std::vector<std::array<int, 3>> degree_triples() const;

  friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

 private:
  struct Unchecked {};
  MixedGraph(Unchecked, int n, std::vector<VertexPair> edges,
             std::vector<VertexPair> arcs);
  friend MixedGraph converse(const MixedGraph&);
  friend MixedGraph apply_permutation(const MixedGraph&, const Permutation&);

  int n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<VertexPair> arcs_;
};

// Reverses every arc; edges are kept. An involution.
MixedGraph converse(const MixedGraph& x);

// The undirected part E(X) only.
Graph symmetric_subgraph(const MixedGraph& x);

// All adjacencies with arc orientations forgotten.
Graph underlying_graph(const MixedGraph& x);

// Relabels vertices: edge {u,v} -> {f(u),f(v)}, arc (u,v) -> (f(u),f(v)).
MixedGraph apply_permutation(const MixedGraph& x, const Permutation& f);
Graph apply_permutation(const Graph& g, const Permutation& f);

// (min degree, max common-neighborhood size over vertex pairs).
// For n < 2 the codegree is 0.
std::pair<int, int> neighborhood_stats(const Graph& g);

// Text interchange format. Line 1: "n <n> e <|E|> a <|A|>", then one line
// per edge "E u v" (u < v) and per arc "A u v", all record lines sorted
// lexicographically as byte strings. ASCII, newline-terminated.
std::string to_text(const MixedGraph& x);
MixedGraph mixed_graph_from_text(std::string_view text);

}  // namespace mixedgraphs

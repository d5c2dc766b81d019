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

#include "mixedgraphs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "bit_adjacency.hpp"

namespace mixedgraphs {

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_endpoints(int n, int u, int v, const char* what) {
  if (u == v) {
    throw ValidationError(ValidationError::Kind::kSelfLoop,
                          std::string(what) + " " + pair_str(u, v) +
                              " is a self-loop");
  }
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw ValidationError(ValidationError::Kind::kEndpointOutOfRange,
                          std::string(what) + " " + pair_str(u, v) +
                              " has an endpoint outside [0," +
                              std::to_string(n) + ")");
  }
}

void sort_and_reject_duplicates(std::vector<VertexPair>& pairs,
                                const char* what) {
  std::sort(pairs.begin(), pairs.end());
  auto dup = std::adjacent_find(pairs.begin(), pairs.end());
  if (dup != pairs.end()) {
    throw ValidationError(ValidationError::Kind::kDuplicate,
                          std::string("duplicate ") + what + " " +
                              pair_str(dup->first, dup->second));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v]) {
      throw ValidationError(ValidationError::Kind::kBadPermutation,
                            "image array is not a bijection on {0.." +
                                std::to_string(n - 1) + "}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int v = 0; v < size(); ++v) inv[images_[v]] = v;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (int v = 0; v < size(); ++v) {
    if (seen[v]) continue;
    int len = 0;
    for (int w = v; !seen[w]; w = images_[w]) {
      seen[w] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int Permutation::moved_count() const {
  int moved = 0;
  for (int v = 0; v < size(); ++v) {
    if (images_[v] != v) ++moved;
  }
  return moved;
}

std::string Permutation::cycle_notation() const {
  std::vector<bool> seen(images_.size(), false);
  std::string out;
  for (int v = 0; v < size(); ++v) {
    if (seen[v] || images_[v] == v) {
      seen[v] = true;
      continue;
    }
    out += "(";
    bool first = true;
    for (int w = v; !seen[w]; w = images_[w]) {
      seen[w] = true;
      if (!first) out += " ";
      out += std::to_string(w);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) {
    throw ValidationError(ValidationError::Kind::kSizeMismatch,
                          "composed permutations have different sizes");
  }
  std::vector<int> images(g.size());
  for (int v = 0; v < g.size(); ++v) images[v] = f(g(v));
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n, std::vector<VertexPair> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) {
    throw ValidationError(ValidationError::Kind::kEndpointOutOfRange,
                          "vertex count must be non-negative");
  }
  for (auto& [u, v] : edges_) {
    check_endpoints(n_, u, v, "edge");
    if (u > v) std::swap(u, v);
  }
  sort_and_reject_duplicates(edges_, "edge");
}

Graph::Graph(Unchecked, int n, std::vector<VertexPair> edges)
    : n_(n), edges_(std::move(edges)) {}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), VertexPair{u, v});
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

// ---------------------------------------------------------------------------
// MixedGraph

MixedGraph::MixedGraph(int n, std::vector<VertexPair> edges,
                       std::vector<VertexPair> arcs)
    : n_(n), edges_(std::move(edges)), arcs_(std::move(arcs)) {
  if (n < 0) {
    throw ValidationError(ValidationError::Kind::kEndpointOutOfRange,
                          "vertex count must be non-negative");
  }
  for (auto& [u, v] : edges_) {
    check_endpoints(n_, u, v, "edge");
    if (u > v) std::swap(u, v);
  }
  sort_and_reject_duplicates(edges_, "edge");
  for (const auto& [u, v] : arcs_) {
    check_endpoints(n_, u, v, "arc");
  }
  sort_and_reject_duplicates(arcs_, "arc");
  for (const auto& [u, v] : arcs_) {
    if (std::binary_search(arcs_.begin(), arcs_.end(), VertexPair{v, u})) {
      throw ValidationError(
          ValidationError::Kind::kBidirectedArcPair,
          "arcs " + pair_str(u, v) + " and " + pair_str(v, u) +
              " together form an edge; declare the edge instead");
    }
    VertexPair key{std::min(u, v), std::max(u, v)};
    if (std::binary_search(edges_.begin(), edges_.end(), key)) {
      throw ValidationError(ValidationError::Kind::kEdgeArcOverlap,
                            "arc " + pair_str(u, v) +
                                " overlaps edge {" + std::to_string(key.first) +
                                "," + std::to_string(key.second) + "}");
    }
  }
}

MixedGraph::MixedGraph(Unchecked, int n, std::vector<VertexPair> edges,
                       std::vector<VertexPair> arcs)
    : n_(n), edges_(std::move(edges)), arcs_(std::move(arcs)) {}

bool MixedGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), VertexPair{u, v});
}

bool MixedGraph::has_arc(int u, int v) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), VertexPair{u, v});
}

std::vector<std::array<int, 3>> MixedGraph::degree_triples() const {
  std::vector<std::array<int, 3>> deg(n_, {0, 0, 0});
  for (const auto& [u, v] : edges_) {
    ++deg[u][0];
    ++deg[v][0];
  }
  for (const auto& [u, v] : arcs_) {
    ++deg[u][1];
    ++deg[v][2];
  }
  return deg;
}

// ---------------------------------------------------------------------------
// Structural operations

MixedGraph converse(const MixedGraph& x) {
  std::vector<VertexPair> reversed;
  reversed.reserve(x.arcs_.size());
  for (const auto& [u, v] : x.arcs_) reversed.emplace_back(v, u);
  std::sort(reversed.begin(), reversed.end());
  return MixedGraph(MixedGraph::Unchecked{}, x.n_, x.edges_,
                    std::move(reversed));
}

Graph symmetric_subgraph(const MixedGraph& x) {
  return Graph(Graph::Unchecked{}, x.order(), x.edges());
}

Graph underlying_graph(const MixedGraph& x) {
  std::vector<VertexPair> edges = x.edges();
  edges.reserve(edges.size() + x.arcs().size());
  for (const auto& [u, v] : x.arcs()) {
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  return Graph(Graph::Unchecked{}, x.order(), std::move(edges));
}

MixedGraph apply_permutation(const MixedGraph& x, const Permutation& f) {
  if (f.size() != x.order()) {
    throw ValidationError(ValidationError::Kind::kSizeMismatch,
                          "permutation length does not match vertex count");
  }
  std::vector<VertexPair> edges;
  edges.reserve(x.edges().size());
  for (const auto& [u, v] : x.edges()) {
    const int a = f(u), b = f(v);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<VertexPair> arcs;
  arcs.reserve(x.arcs().size());
  for (const auto& [u, v] : x.arcs()) arcs.emplace_back(f(u), f(v));
  std::sort(edges.begin(), edges.end());
  std::sort(arcs.begin(), arcs.end());
  return MixedGraph(MixedGraph::Unchecked{}, x.order(), std::move(edges),
                    std::move(arcs));
}

Graph apply_permutation(const Graph& g, const Permutation& f) {
  if (f.size() != g.order()) {
    throw ValidationError(ValidationError::Kind::kSizeMismatch,
                          "permutation length does not match vertex count");
  }
  std::vector<VertexPair> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    const int a = f(u), b = f(v);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  return Graph(Graph::Unchecked{}, g.order(), std::move(edges));
}

std::pair<int, int> neighborhood_stats(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {0, 0};
  BitAdjacency adj(g);
  int min_degree = n;
  for (int v = 0; v < n; ++v) min_degree = std::min(min_degree, adj.degree(v));
  int max_codegree = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      max_codegree = std::max(max_codegree, adj.codegree(u, v));
    }
  }
  return {min_degree, max_codegree};
}

// ---------------------------------------------------------------------------
// Text format

std::string to_text(const MixedGraph& x) {
  std::vector<std::string> lines;
  lines.reserve(x.edge_count() + x.arc_count());
  for (const auto& [u, v] : x.edges()) {
    lines.push_back("E " + std::to_string(u) + " " + std::to_string(v));
  }
  for (const auto& [u, v] : x.arcs()) {
    lines.push_back("A " + std::to_string(u) + " " + std::to_string(v));
  }
  std::sort(lines.begin(), lines.end());
  std::string out = "n " + std::to_string(x.order()) + " e " +
                    std::to_string(x.edge_count()) + " a " +
                    std::to_string(x.arc_count()) + "\n";
  for (const auto& line : lines) {
    out += line;
    out += "\n";
  }
  return out;
}

namespace {

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected an integer in " + std::string(context) +
                     ", got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ') ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

}  // namespace

MixedGraph mixed_graph_from_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty graph record");

  auto header = split_tokens(lines[0]);
  if (header.size() != 6 || header[0] != "n" || header[2] != "e" ||
      header[4] != "a") {
    throw ParseError("header must be 'n <n> e <edges> a <arcs>'");
  }
  const int n = parse_int(header[1], "header vertex count");
  const int edge_count = parse_int(header[3], "header edge count");
  const int arc_count = parse_int(header[5], "header arc count");
  if (n < 0 || edge_count < 0 || arc_count < 0) {
    throw ParseError("header counts must be non-negative");
  }
  if (static_cast<std::size_t>(edge_count + arc_count) != lines.size() - 1) {
    throw ParseError("header declares " +
                     std::to_string(edge_count + arc_count) +
                     " record lines, found " +
                     std::to_string(lines.size() - 1));
  }

  std::vector<VertexPair> edges, arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tokens = split_tokens(lines[i]);
    if (tokens.size() != 3 || (tokens[0] != "E" && tokens[0] != "A")) {
      throw ParseError("record line must be 'E u v' or 'A u v', got '" +
                       std::string(lines[i]) + "'");
    }
    const int u = parse_int(tokens[1], "record line");
    const int v = parse_int(tokens[2], "record line");
    if (tokens[0] == "E") {
      if (u >= v) throw ParseError("edge line requires u < v");
      edges.emplace_back(u, v);
    } else {
      arcs.emplace_back(u, v);
    }
  }
  if (edges.size() != static_cast<std::size_t>(edge_count) ||
      arcs.size() != static_cast<std::size_t>(arc_count)) {
    throw ParseError("header counts do not match record lines");
  }
  return MixedGraph(n, std::move(edges), std::move(arcs));
}

}  // namespace mixedgraphs

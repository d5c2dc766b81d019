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

#include "mixedgraphs/iso.hpp"

#include <algorithm>
#include <numeric>

#include "bit_adjacency.hpp"

namespace mixedgraphs::iso {

namespace {

// Ordered pair-state matrix: 0 none, 1 edge, 2 arc u->v, 3 arc v->u.
std::vector<std::uint8_t> state_matrix(const MixedGraph& x) {
  const int n = x.order();
  std::vector<std::uint8_t> s(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [u, v] : x.edges()) {
    s[u * n + v] = 1;
    s[v * n + u] = 1;
  }
  for (const auto& [u, v] : x.arcs()) {
    s[u * n + v] = 2;
    s[v * n + u] = 3;
  }
  return s;
}

struct IsoSearch {
  int n;
  const std::vector<std::uint8_t>& sx;
  const std::vector<std::uint8_t>& sy;
  const std::vector<std::array<int, 3>>& tx;
  const std::vector<std::array<int, 3>>& ty;
  std::vector<int> image;
  std::vector<bool> used;

  bool extend(int u) {
    if (u == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || tx[u] != ty[w]) continue;
      bool ok = true;
      for (int j = 0; j < u; ++j) {
        if (sx[j * n + u] != sy[image[j] * n + w]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[u] = w;
      used[w] = true;
      if (extend(u + 1)) return true;
      used[w] = false;
    }
    return false;
  }
};

}  // namespace

IsoWitness find_isomorphism(const MixedGraph& x, const MixedGraph& y) {
  if (x.order() != y.order() || x.edge_count() != y.edge_count() ||
      x.arc_count() != y.arc_count()) {
    return {};
  }
  const int n = x.order();
  if (n == 0) return {true, Permutation::identity(0)};

  const auto tx = x.degree_triples();
  const auto ty = y.degree_triples();
  auto sorted_tx = tx, sorted_ty = ty;
  std::sort(sorted_tx.begin(), sorted_tx.end());
  std::sort(sorted_ty.begin(), sorted_ty.end());
  if (sorted_tx != sorted_ty) return {};

  const auto sx = state_matrix(x);
  const auto sy = state_matrix(y);
  IsoSearch search{n, sx, sy, tx, ty, std::vector<int>(n, -1),
                   std::vector<bool>(n, false)};
  if (!search.extend(0)) return {};
  return {true, Permutation(std::move(search.image))};
}

namespace {

struct AutSearch {
  const BitAdjacency& adj;
  const std::vector<int>& deg;
  int n;
  std::vector<int> image;
  std::vector<bool> used;
  bool identity_so_far = true;

  // Depth-first over assignments in ascending order; reports the first
  // complete non-identity assignment and skips the identity itself.
  bool extend(int u, Permutation* out) {
    if (u == n) {
      if (identity_so_far) return false;
      *out = Permutation(image);
      return true;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || deg[u] != deg[w]) continue;
      bool ok = true;
      for (int j = 0; j < u; ++j) {
        if (adj.adjacent(j, u) != adj.adjacent(image[j], w)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const bool was_identity = identity_so_far;
      image[u] = w;
      used[w] = true;
      identity_so_far = was_identity && (w == u);
      if (extend(u + 1, out)) return true;
      used[w] = false;
      identity_so_far = was_identity;
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> find_nonidentity_automorphism(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  BitAdjacency adj(g);
  const auto deg = g.degrees();

  // Twin shortcut: equal neighborhoods away from each other give a swap.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (deg[u] == deg[v] && adj.twins(u, v)) {
        auto images = Permutation::identity(n).images();
        std::swap(images[u], images[v]);
        return Permutation(std::move(images));
      }
    }
  }

  AutSearch search{adj, deg, n, std::vector<int>(n, -1),
                   std::vector<bool>(n, false), true};
  Permutation found;
  if (search.extend(0, &found)) return found;
  return std::nullopt;
}

bool is_asymmetric(const Graph& g) {
  return !find_nonidentity_automorphism(g).has_value();
}

namespace {

struct AutCount {
  int n;
  const std::vector<std::uint8_t>& s;
  const std::vector<std::array<int, 3>>& t;
  std::vector<int> image;
  std::vector<bool> used;
  std::uint64_t count = 0;

  void extend(int u) {
    if (u == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || t[u] != t[w]) continue;
      bool ok = true;
      for (int j = 0; j < u; ++j) {
        if (s[j * n + u] != s[image[j] * n + w]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[u] = w;
      used[w] = true;
      extend(u + 1);
      used[w] = false;
    }
  }
};

}  // namespace

std::uint64_t automorphism_count(const MixedGraph& x, int max_n) {
  const int n = x.order();
  if (n > max_n) {
    throw SizeLimitError("automorphism_count is limited to n <= " +
                         std::to_string(max_n) + ", got n = " +
                         std::to_string(n));
  }
  if (n == 0) return 1;
  const auto s = state_matrix(x);
  const auto t = x.degree_triples();
  AutCount search{n, s, t, std::vector<int>(n, -1),
                  std::vector<bool>(n, false), 0};
  search.extend(0);
  return search.count;
}

std::uint64_t automorphism_count(const Graph& g, int max_n) {
  return automorphism_count(MixedGraph(g.order(), g.edges(), {}), max_n);
}

IsoWitness is_self_converse(const MixedGraph& x) {
  const MixedGraph xc = converse(x);
  IsoWitness witness = find_isomorphism(x, xc);
  if (witness.found) {
    // Any isomorphism onto the converse must verify exactly and must fix
    // the symmetric subgraph; a failure here is an implementation bug.
    const Permutation& f = *witness.map;
    if (apply_permutation(x, f) != xc) {
      throw std::logic_error("self-converse witness failed verification");
    }
    const Graph sym = symmetric_subgraph(x);
    if (apply_permutation(sym, f) != sym) {
      throw std::logic_error(
          "self-converse witness is not an automorphism of the symmetric "
          "subgraph");
    }
  }
  return witness;
}

std::string canonical_form(const MixedGraph& x, int max_n) {
  const int n = x.order();
  if (n > max_n) {
    throw SizeLimitError("canonical_form is limited to n <= " +
                         std::to_string(max_n) + ", got n = " +
                         std::to_string(n));
  }
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::string best;
  do {
    std::string text = to_text(apply_permutation(x, Permutation(images)));
    if (best.empty() || text < best) best = std::move(text);
  } while (std::next_permutation(images.begin(), images.end()));
  return best;
}

}  // namespace mixedgraphs::iso

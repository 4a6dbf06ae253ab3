// Copyright 2026 The seidelg Authors
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

#ifndef SEIDELG_CANONICAL_HPP
#define SEIDELG_CANONICAL_HPP

#include <cstdint>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

/// Isomorphism key for small graphs: the minimum upper-triangle adjacency
/// encoding over all vertex permutations. Equal codes <=> isomorphic.
struct CanonicalCode {
  int n = 0;
  std::uint64_t bits = 0;  // column-major upper triangle, first pair most significant

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

inline constexpr int kCanonicalMaxVertices = 10;

namespace detail {

// Column-major pair index: pairs ordered (0,1), (0,2), (1,2), (0,3), ...
inline int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

struct CodeSearch {
  const Graph* g;
  int n;
  int total_bits;
  std::uint64_t best;
  std::vector<int> perm;       // perm[p] = original vertex placed at position p
  std::vector<char> used;

  // Assign position p given the first p positions contribute `prefix`
  // (p*(p-1)/2 bits). Standard branch-and-bound on the bit string.
  void assign(int p, std::uint64_t prefix) {
    if (p == n) {
      if (prefix < best) best = prefix;
      return;
    }
    int col_bits = p;
    int prefix_bits = p * (p - 1) / 2;
    std::uint64_t best_here = best >> (total_bits - prefix_bits - col_bits);
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::uint64_t col = 0;
      for (int q = 0; q < p; ++q) col = (col << 1) | (g->adjacent(perm[q], v) ? 1 : 0);
      std::uint64_t cand = (prefix << col_bits) | col;
      if (cand > best_here) continue;
      used[v] = 1;
      perm[p] = v;
      assign(p + 1, cand);
      used[v] = 0;
    }
  }
};

}  // namespace detail

inline CanonicalCode canonical_code(const Graph& g) {
  int n = g.vertex_count();
  if (n > kCanonicalMaxVertices)
    throw Error("canonical_code supports at most " + std::to_string(kCanonicalMaxVertices) +
                " vertices, got " + std::to_string(n));
  if (n <= 1) return CanonicalCode{n, 0};
  detail::CodeSearch search;
  search.g = &g;
  search.n = n;
  search.total_bits = n * (n - 1) / 2;
  search.best = ~std::uint64_t{0} >> (64 - search.total_bits);
  search.perm.assign(n, 0);
  search.used.assign(n, 0);
  search.assign(0, 0);
  return CanonicalCode{n, search.best};
}

/// Rebuilds the canonically labeled representative from its code.
inline Graph graph_from_code(const CanonicalCode& code) {
  int n = code.n;
  int total = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> e;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      int idx = detail::pair_index(i, j);
      if ((code.bits >> (total - 1 - idx)) & 1) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace seidel

#endif  // SEIDELG_CANONICAL_HPP

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

#ifndef SEIDELG_SEIDEL_HPP
#define SEIDELG_SEIDEL_HPP

#include <utility>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

/// How the vertex pairs of G fall relative to a pivot v. Seidel
/// complementation at v keeps e1 and e2, destroys `removed`, and creates e3:
///   e1      edges with both ends in N[v]
///   e2      edges with both ends outside N[v]
///   removed edges between N(v) and V - N[v]
///   e3      non-edge pairs between N(v) and V - N[v]
/// All lists hold (u, v) pairs with u < v in lexicographic order.
struct SeidelEdgeClassification {
  std::vector<std::pair<int, int>> e1, e2, e3, removed;
};

inline SeidelEdgeClassification classify_edges(const Graph& g, int v) {
  int n = g.vertex_count();
  if (v < 0 || v >= n) throw Error("pivot vertex out of range");
  VertexSet inside = closed_neighborhood(g, v);
  SeidelEdgeClassification c;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool edge = g.adjacent(a, b);
      bool a_in = inside.contains(a), b_in = inside.contains(b);
      if (a_in && b_in) {
        if (edge) c.e1.emplace_back(a, b);
      } else if (!a_in && !b_in) {
        if (edge) c.e2.emplace_back(a, b);
      } else if (a != v && b != v) {
        // One endpoint in N(v), the other outside N[v]: the flip zone.
        if (edge)
          c.removed.emplace_back(a, b);
        else
          c.e3.emplace_back(a, b);
      }
      // Non-edge pairs at v itself stay non-edges: v keeps its neighborhood.
    }
  }
  return c;
}

/// Seidel complementation at v: inverts all adjacencies between N(v) and
/// V - N[v], keeps everything else. Readable classify-then-rebuild path;
/// the XOR fast path below must produce identical graphs.
inline Graph seidel_complement(const Graph& g, int v) {
  SeidelEdgeClassification c = classify_edges(g, v);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(c.e1.size() + c.e2.size() + c.e3.size());
  edges.insert(edges.end(), c.e1.begin(), c.e1.end());
  edges.insert(edges.end(), c.e2.begin(), c.e2.end());
  edges.insert(edges.end(), c.e3.begin(), c.e3.end());
  return Graph(g.vertex_count(), edges);
}

/// Same operator via row XOR against the cross rectangle.
inline Graph seidel_complement_fast(const Graph& g, int v) {
  int n = g.vertex_count();
  if (v < 0 || v >= n) throw Error("pivot vertex out of range");
  Graph out = g;
  int words = g.row_words();
  std::vector<std::uint64_t> nv(words, 0), outside(words, 0);
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    if (g.adjacent(v, u))
      nv[u >> 6] |= std::uint64_t{1} << (u & 63);
    else
      outside[u >> 6] |= std::uint64_t{1} << (u & 63);
  }
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    std::uint64_t* row = out.rows_.data() + static_cast<std::size_t>(u) * words;
    const std::uint64_t* mask = g.adjacent(v, u) ? outside.data() : nv.data();
    for (int w = 0; w < words; ++w) row[w] ^= mask[w];
  }
  return out;
}

}  // namespace seidel

#endif  // SEIDELG_SEIDEL_HPP

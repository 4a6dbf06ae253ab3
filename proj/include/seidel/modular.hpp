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

#ifndef SEIDELG_MODULAR_HPP
#define SEIDELG_MODULAR_HPP

#include <string>
#include <utility>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

/// True iff every vertex outside S sees all of S or none of S.
inline bool is_module(const Graph& g, const VertexSet& s) {
  std::vector<int> members = s.to_vector();
  if (members.size() <= 1) return true;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (s.contains(u)) continue;
    bool first = g.adjacent(u, members[0]);
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (g.adjacent(u, members[i]) != first) return false;
    }
  }
  return true;
}

/// Smallest module containing both u and v: grow by pulling in every
/// splitter (a vertex adjacent to only part of the set) until none remain.
inline VertexSet minimal_module_containing(const Graph& g, int u, int v) {
  int n = g.vertex_count();
  VertexSet s(n);
  s.add(u);
  s.add(v);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> members = s.to_vector();
    for (int z = 0; z < n && !grew; ++z) {
      if (s.contains(z)) continue;
      bool first = g.adjacent(z, members[0]);
      for (std::size_t i = 1; i < members.size(); ++i) {
        if (g.adjacent(z, members[i]) != first) {
          s.add(z);
          grew = true;
          break;
        }
      }
    }
  }
  return s;
}

/// Prime with respect to modular decomposition: no module S with
/// 1 < |S| < n. Graphs on fewer than 4 vertices are not prime.
inline bool is_prime(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4) return false;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (minimal_module_containing(g, u, v).count() < n) return false;
    }
  }
  return true;
}

enum class MDKind { Leaf, Series, Parallel, Prime };

inline const char* md_kind_name(MDKind k) {
  switch (k) {
    case MDKind::Leaf: return "LEAF";
    case MDKind::Series: return "SERIES";
    case MDKind::Parallel: return "PARALLEL";
    case MDKind::Prime: return "PRIME";
  }
  return "?";
}

struct MDNode {
  MDKind kind = MDKind::Leaf;
  VertexSet vertices;            // in original labels
  std::vector<MDNode> children;  // empty iff Leaf
};

inline bool has_prime_node(const MDNode& node) {
  if (node.kind == MDKind::Prime) return true;
  for (const MDNode& c : node.children) {
    if (has_prime_node(c)) return true;
  }
  return false;
}

namespace detail {

inline MDNode md_tree_rec(const Graph& g, const std::vector<int>& labels, int original_n) {
  int n = g.vertex_count();
  MDNode node;
  node.vertices = VertexSet(original_n);
  for (int lab : labels) node.vertices.add(lab);

  if (n == 1) {
    node.kind = MDKind::Leaf;
    return node;
  }

  auto recurse_parts = [&](const std::vector<VertexSet>& parts, MDKind kind) {
    node.kind = kind;
    for (const VertexSet& part : parts) {
      InducedSubgraph sub = induced_subgraph(g, part);
      std::vector<int> sub_labels;
      sub_labels.reserve(sub.index_map.size());
      for (int local : sub.index_map) sub_labels.push_back(labels[local]);
      node.children.push_back(md_tree_rec(sub.graph, sub_labels, original_n));
    }
  };

  std::vector<VertexSet> comps = connected_components(g);
  if (comps.size() > 1) {
    recurse_parts(comps, MDKind::Parallel);
    return node;
  }
  std::vector<VertexSet> cocomps = connected_components(complement(g));
  if (cocomps.size() > 1) {
    recurse_parts(cocomps, MDKind::Series);
    return node;
  }

  // Connected and co-connected: the maximal proper modules partition the
  // vertex set and the quotient is prime. Every proper module containing v
  // lies inside v's block, so the block is the union of the proper minimal
  // modules through v (pair closures alone can undershoot when the block
  // itself decomposes degenerately).
  std::vector<VertexSet> blocks;
  std::vector<char> assigned(n, 0);
  for (int v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    VertexSet block(n);
    block.add(v);
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      VertexSet m = minimal_module_containing(g, v, u);
      if (m.count() < n) block |= m;
    }
    for (int x : block.to_vector()) assigned[x] = 1;
    blocks.push_back(std::move(block));
  }
  recurse_parts(blocks, MDKind::Prime);
  return node;
}

}  // namespace detail

/// Modular decomposition tree; leaves biject with the vertices.
inline MDNode md_tree(const Graph& g) {
  if (g.vertex_count() < 1) throw Error("md_tree requires at least one vertex");
  std::vector<int> labels(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) labels[v] = v;
  return detail::md_tree_rec(g, labels, g.vertex_count());
}

}  // namespace seidel

#endif  // SEIDELG_MODULAR_HPP

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

#ifndef SEIDELG_TESTS_TEST_SUPPORT_HPP
#define SEIDELG_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/modular.hpp"
#include "seidel/recognition.hpp"

namespace testsupport {

using seidel::Graph;
using seidel::MDKind;
using seidel::MDNode;
using seidel::PatternKind;
using seidel::VertexSet;

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph edgeless_graph(int n) { return Graph(n, {}); }

// Subset-and-permutation oracle for induced pattern detection; the
// production search must agree with this on existence.
inline bool naive_has_induced(const Graph& host, PatternKind kind) {
  const Graph& pat = seidel::pattern(kind).graph;
  int k = pat.vertex_count(), n = host.vertex_count();
  if (n < k) return false;
  std::vector<int> subset(k);
  std::vector<char> take(n, 0);
  std::fill(take.begin(), take.begin() + k, 1);
  std::sort(take.begin(), take.end());  // lowest combinations first via next_permutation
  do {
    int t = 0;
    for (int v = 0; v < n; ++v) {
      if (take[v]) subset[t++] = v;
    }
    std::vector<int> order = subset;
    std::sort(order.begin(), order.end());
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        for (int j = i + 1; j < k && ok; ++j)
          ok = host.adjacent(order[i], order[j]) == pat.adjacent(i, j);
      if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
  } while (std::next_permutation(take.begin(), take.end()));
  return false;
}

// 2^n subset scan; the ground truth for primality at tiny sizes.
inline bool brute_is_prime(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4) return false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= 1 || size == n) continue;
    VertexSet s(n);
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) s.add(v);
    }
    if (seidel::is_module(g, s)) return false;
  }
  return true;
}

// Full invariant check of a decomposition tree against its graph: children
// partition the node, are modules inside it, the quotient matches the node
// kind, and block-to-block adjacency is uniform (so expanding quotients
// reproduces the adjacency exactly).
inline bool validate_md_tree(const Graph& g, const MDNode& node, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<int> verts = node.vertices.to_vector();
  if (verts.empty()) return fail("empty node");
  if (node.kind == MDKind::Leaf)
    return node.children.empty() && verts.size() == 1 ? true : fail("bad leaf");
  if (node.children.size() < 2) return fail("internal node with < 2 children");

  VertexSet seen(g.vertex_count());
  for (const MDNode& c : node.children) {
    for (int v : c.vertices.to_vector()) {
      if (!node.vertices.contains(v) || seen.contains(v)) return fail("children do not partition");
      seen.add(v);
    }
  }
  if (!(seen == node.vertices)) return fail("children miss vertices");

  // Uniform adjacency between blocks, with the value dictated by the kind.
  std::size_t p = node.children.size();
  std::vector<std::vector<int>> blocks;
  for (const MDNode& c : node.children) blocks.push_back(c.vertices.to_vector());
  std::vector<std::pair<int, int>> quotient_edges;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      bool first = g.adjacent(blocks[i][0], blocks[j][0]);
      for (int u : blocks[i])
        for (int v : blocks[j])
          if (g.adjacent(u, v) != first) return fail("block adjacency not uniform");
      if (node.kind == MDKind::Series && !first) return fail("series quotient not complete");
      if (node.kind == MDKind::Parallel && first) return fail("parallel quotient not edgeless");
      if (first) quotient_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  if (node.kind == MDKind::Prime) {
    Graph quotient(static_cast<int>(p), quotient_edges);
    if (!brute_is_prime(quotient)) return fail("prime quotient has a nontrivial module");
  }
  for (const MDNode& c : node.children) {
    if (!validate_md_tree(g, c, why)) return false;
  }
  return true;
}

}  // namespace testsupport

#endif  // SEIDELG_TESTS_TEST_SUPPORT_HPP

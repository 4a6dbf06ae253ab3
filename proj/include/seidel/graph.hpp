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

#ifndef SEIDELG_GRAPH_HPP
#define SEIDELG_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seidel {

/// Library-wide error type: construction errors, contract violations,
/// unsupported sizes, parse failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Subset of the vertices {0..n-1} of some graph, stored as a bitset.
class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(int n) : n_(n), bits_(words(n), 0) {}

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.add(v);
    return s;
  }

  int universe_size() const { return n_; }

  void add(int v) {
    check(v);
    bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void remove(int v) {
    check(v);
    bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  bool contains(int v) const {
    if (v < 0 || v >= n_) return false;
    return (bits_[v >> 6] >> (v & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : bits_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (std::uint64_t w : bits_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool is_subset_of(const VertexSet& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] & ~other.bits_[i]) return false;
    }
    return true;
  }
  bool intersects(const VertexSet& other) const {
    std::size_t m = std::min(bits_.size(), other.bits_.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (bits_[i] & other.bits_[i]) return true;
    }
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  /// Members in ascending order.
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      std::uint64_t w = bits_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64) + __builtin_ctzll(w));
        w &= w - 1;
      }
    }
    return out;
  }

  const std::vector<std::uint64_t>& words_view() const { return bits_; }

 private:
  static std::size_t words(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }
  void check(int v) const {
    if (v < 0 || v >= n_) throw Error("vertex " + std::to_string(v) + " out of range");
  }

  int n_;
  std::vector<std::uint64_t> bits_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a symmetric bit matrix with an empty diagonal, stored as one
/// bitset row per vertex, so edge tests are O(1) and row operations cost
/// O(n/64). Values are safe to share across threads after construction.
class Graph {
 public:
  Graph() : n_(0), words_(0) {}

  /// Builds a graph with exactly the given edges; duplicates collapse.
  /// Throws on self-loops or out-of-range endpoints.
  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw Error("edge endpoint out of range: (" + std::to_string(u) + "," +
                    std::to_string(v) + ") with n=" + std::to_string(n));
      if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
      set_edge(u, v);
    }
  }

  int vertex_count() const { return n_; }

  bool adjacent(int u, int v) const {
    check(u);
    check(v);
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
  }

  int degree(int v) const {
    check(v);
    int c = 0;
    for (int i = 0; i < words_; ++i)
      c += __builtin_popcountll(rows_[static_cast<std::size_t>(v) * words_ + i]);
    return c;
  }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (adjacent(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

  const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  int row_words() const { return words_; }

 private:
  static int checked_count(int n) {
    if (n < 0) throw Error("negative vertex count");
    return n;
  }

  explicit Graph(int n)
      : n_(checked_count(n)),
        words_((n + 63) / 64),
        rows_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

  void set_edge(int u, int v) {
    rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  }
  void check(int v) const {
    if (v < 0 || v >= n_) throw Error("vertex " + std::to_string(v) + " out of range");
  }

  friend Graph complement(const Graph&);
  friend Graph seidel_complement_fast(const Graph&, int);

  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;
};

inline Graph new_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph(n, edges);
}

/// Open neighborhood N(v).
inline VertexSet neighborhood(const Graph& g, int v) {
  VertexSet s(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g.adjacent(v, u)) s.add(u);
  }
  return s;
}

/// Closed neighborhood N(v) plus v itself.
inline VertexSet closed_neighborhood(const Graph& g, int v) {
  VertexSet s = neighborhood(g, v);
  s.add(v);
  return s;
}

/// Vertices outside the closed neighborhood: V minus (N(v) and v).
inline VertexSet non_neighbors(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw Error("vertex out of range");
  VertexSet s(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u != v && !g.adjacent(v, u)) s.add(u);
  }
  return s;
}

/// Edge-complement; an involution.
inline Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> index_map;  // position i holds the original label of new vertex i
};

/// Subgraph induced on S, relabeled 0..|S|-1 in ascending original order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> verts = s.to_vector();
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (g.adjacent(verts[i], verts[j])) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return InducedSubgraph{Graph(static_cast<int>(verts.size()), e), std::move(verts)};
}

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& verts_in) {
  VertexSet s(g.vertex_count());
  for (int v : verts_in) s.add(v);
  return induced_subgraph(g, s);
}

inline bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (!seen[v] && g.adjacent(u, v)) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp(n);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.add(u);
      for (int v = 0; v < n; ++v) {
        if (!seen[v] && g.adjacent(u, v)) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

struct Bipartition {
  VertexSet left, right;
};

struct BipartiteCheck {
  std::optional<Bipartition> bipartition;
  std::vector<int> odd_cycle;  // nonempty iff not bipartite; closed walk of odd length
};

/// Two-colors every component by BFS. The lowest vertex of each component
/// goes to the left side. On failure returns an odd cycle built from the
/// two BFS paths meeting at a conflict edge.
inline BipartiteCheck check_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // Walk both endpoints up to their lowest common ancestor.
          std::vector<int> pu{u}, pv{v};
          int a = u, b = v;
          while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
          while (depth[b] > depth[a]) pv.push_back(b = parent[b]);
          while (a != b) {
            pu.push_back(a = parent[a]);
            pv.push_back(b = parent[b]);
          }
          std::vector<int> cycle(pu.begin(), pu.end());
          for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
          return BipartiteCheck{std::nullopt, std::move(cycle)};
        }
      }
    }
  }
  Bipartition parts{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v) {
    if (color[v] == 0)
      parts.left.add(v);
    else
      parts.right.add(v);
  }
  return BipartiteCheck{std::move(parts), {}};
}

inline std::optional<Bipartition> is_bipartite(const Graph& g) {
  return check_bipartite(g).bipartition;
}

}  // namespace seidel

#endif  // SEIDELG_GRAPH_HPP

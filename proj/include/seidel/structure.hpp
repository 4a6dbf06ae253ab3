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

#ifndef SEIDELG_STRUCTURE_HPP
#define SEIDELG_STRUCTURE_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "seidel/canonical.hpp"
#include "seidel/graph.hpp"
#include "seidel/modular.hpp"
#include "seidel/recognition.hpp"

namespace seidel {

/// Circular 5-partition around a C5: consecutive classes are complete to
/// each other, non-consecutive classes have no edges, and the classes are
/// maximal for these properties. Indices are mod 5.
struct BuoyPartition {
  std::array<VertexSet, 5> classes;

  VertexSet union_set() const {
    VertexSet u = classes[0];
    for (int i = 1; i < 5; ++i) u |= classes[i];
    return u;
  }
};

namespace detail {

// Class index i fits x iff x is complete to classes i-1 and i+1 and has no
// edge into classes i+2 and i+3. Adjacency inside class i is unconstrained.
inline bool class_fits(const Graph& g, const std::array<VertexSet, 5>& classes, int i, int x) {
  for (int d : {1, 4}) {
    for (int y : classes[(i + d) % 5].to_vector()) {
      if (!g.adjacent(x, y)) return false;
    }
  }
  for (int d : {2, 3}) {
    for (int y : classes[(i + d) % 5].to_vector()) {
      if (g.adjacent(x, y)) return false;
    }
  }
  return true;
}

inline void validate_buoy(const Graph& g, const BuoyPartition& b) {
  for (int i = 0; i < 5; ++i) {
    if (b.classes[i].empty()) throw Error("buoy class " + std::to_string(i + 1) + " is empty");
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      int dist = std::min(j - i, 5 - (j - i));
      for (int x : b.classes[i].to_vector()) {
        for (int y : b.classes[j].to_vector()) {
          bool edge = g.adjacent(x, y);
          if (dist == 1 && !edge)
            throw Error("buoy violation: missing edge " + std::to_string(x) + "-" +
                        std::to_string(y) + " between consecutive classes");
          if (dist == 2 && edge)
            throw Error("buoy violation: edge " + std::to_string(x) + "-" + std::to_string(y) +
                        " between non-consecutive classes");
        }
      }
    }
  }
  VertexSet covered = b.union_set();
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (covered.contains(x)) continue;
    for (int i = 0; i < 5; ++i) {
      if (class_fits(g, b.classes, i, x))
        throw Error("buoy not maximal: vertex " + std::to_string(x) + " fits class " +
                    std::to_string(i + 1));
    }
  }
}

}  // namespace detail

/// Grows the buoy around an induced C5: start from the cycle's singletons
/// and repeatedly absorb any vertex whose attachment pattern fits exactly
/// one class, until fixpoint. Validates the result and the dichotomy that
/// the buoy covers the whole graph or forms a module.
///
/// Requires a (P5, House)-free host and a valid C5 match. The host may be
/// disconnected; the dichotomy then holds per component.
inline BuoyPartition find_buoy(const Graph& g, const PatternMatch& start) {
  if (start.pattern != PatternKind::C5 || !match_is_valid(g, start))
    throw Error("find_buoy: start is not an induced C5 of the host");
  if (FreeCheck fc = is_free(g, p5_p5bar()); !fc.free) {
    throw Error(std::string("find_buoy: host contains an induced ") +
                pattern_name(fc.witness->pattern));
  }

  int n = g.vertex_count();
  BuoyPartition buoy;
  VertexSet assigned(n);
  for (int i = 0; i < 5; ++i) {
    buoy.classes[i] = VertexSet(n);
    buoy.classes[i].add(start.vertices[i]);
    assigned.add(start.vertices[i]);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n && !changed; ++x) {
      if (assigned.contains(x)) continue;
      int fit = -1, fits = 0;
      for (int i = 0; i < 5; ++i) {
        if (detail::class_fits(g, buoy.classes, i, x)) {
          fit = i;
          ++fits;
        }
      }
      if (fits > 1)
        throw Error("buoy ambiguity: vertex " + std::to_string(x) + " fits " +
                    std::to_string(fits) + " classes");
      if (fits == 1) {
        buoy.classes[fit].add(x);
        assigned.add(x);
        changed = true;
      }
    }
  }

  detail::validate_buoy(g, buoy);
  VertexSet u = buoy.union_set();
  if (u.count() != n && !is_module(g, u))
    throw Error("buoy dichotomy violated: union is neither V nor a module");
  return buoy;
}

// --- prime classification -------------------------------------------------

enum class PrimeClassCondition { C5Iso, BipartiteP5Free, CobipartiteP5Free };

inline const char* condition_name(PrimeClassCondition c) {
  switch (c) {
    case PrimeClassCondition::C5Iso: return "C5_ISO";
    case PrimeClassCondition::BipartiteP5Free: return "BIPARTITE_P5FREE";
    case PrimeClassCondition::CobipartiteP5Free: return "COBIPARTITE_P5FREE";
  }
  return "?";
}

/// Which of the three structural conditions a prime graph satisfies. The
/// conditions are not mutually exclusive (P4 satisfies the last two). An
/// empty set comes with the forbidden-pattern witness instead.
struct ClassReport {
  std::vector<PrimeClassCondition> conditions;  // sorted, no duplicates
  std::optional<std::vector<int>> c5_map;       // host vertices in cycle order
  std::optional<Bipartition> bipartition;
  std::optional<Bipartition> complement_bipartition;
  std::optional<PatternMatch> violation;

  bool in_class() const { return !conditions.empty(); }
  bool has(PrimeClassCondition c) const {
    return std::find(conditions.begin(), conditions.end(), c) != conditions.end();
  }
};

inline ClassReport classify_prime(const Graph& g) {
  if (!is_prime(g)) throw Error("classify_prime requires a prime input graph");
  ClassReport report;
  if (g.vertex_count() == 5 && is_isomorphic(g, pattern(PatternKind::C5).graph)) {
    report.conditions.push_back(PrimeClassCondition::C5Iso);
    report.c5_map = find_induced(g, PatternKind::C5)->vertices;
  }
  if (auto parts = is_bipartite(g); parts && !find_induced(g, PatternKind::P5)) {
    report.conditions.push_back(PrimeClassCondition::BipartiteP5Free);
    report.bipartition = std::move(parts);
  }
  Graph co = complement(g);
  if (auto parts = is_bipartite(co); parts && !find_induced(co, PatternKind::P5)) {
    report.conditions.push_back(PrimeClassCondition::CobipartiteP5Free);
    report.complement_bipartition = std::move(parts);
  }
  if (report.conditions.empty()) report.violation = is_free(g, p5_house_bull()).witness;
  return report;
}

// --- staircase (half-graph) form -------------------------------------------

/// The canonical form of a prime P5-free bipartite graph: two stable sides
/// of size k ordered by decreasing degree, with b_i adjacent to exactly
/// w_1..w_{k-i+1}.
struct HalfGraphForm {
  int k = 0;
  std::vector<int> b_order, w_order;  // host labels, rank 1 first
};

/// The staircase graph on 2k vertices: b_i = i-1, w_j = k+j-1, and
/// b_i ~ w_j iff i + j <= k + 1. Rejects k < 2 (K2 is not prime).
inline Graph make_halfgraph(int k) {
  if (k < 2) throw Error("make_halfgraph requires k >= 2 (k = 1 gives K2, which is not prime)");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j + i <= k + 1; ++j) e.emplace_back(i - 1, k + j - 1);
  }
  return Graph(2 * k, e);
}

inline Graph halfgraph_form_graph(const HalfGraphForm& form) {
  int k = form.k;
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j + i <= k + 1; ++j) e.emplace_back(form.b_order[i - 1], form.w_order[j - 1]);
  }
  return Graph(2 * k, e);
}

/// Accepts exactly the prime P5-free bipartite graphs. Degrees on each side
/// are forced to be k, k-1, ..., 1, so sorting by decreasing degree yields
/// the unique candidate ordering, which is then verified in full.
inline std::optional<HalfGraphForm> recognize_halfgraph(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4 || n % 2 != 0) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;
  auto parts = is_bipartite(g);
  if (!parts) return std::nullopt;
  int k = n / 2;
  if (parts->left.count() != k || parts->right.count() != k) return std::nullopt;

  // The side containing vertex 0 plays B; the staircase is symmetric under
  // swapping sides, so one choice suffices.
  std::vector<int> b = parts->left.contains(0) ? parts->left.to_vector() : parts->right.to_vector();
  std::vector<int> w = parts->left.contains(0) ? parts->right.to_vector() : parts->left.to_vector();
  auto by_degree_desc = [&](int x, int y) {
    int dx = g.degree(x), dy = g.degree(y);
    return dx != dy ? dx > dy : x < y;
  };
  std::sort(b.begin(), b.end(), by_degree_desc);
  std::sort(w.begin(), w.end(), by_degree_desc);
  for (int i = 1; i <= k; ++i) {
    if (g.degree(b[i - 1]) != k - i + 1 || g.degree(w[i - 1]) != k - i + 1) return std::nullopt;
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (g.adjacent(b[i - 1], w[j - 1]) != (i + j <= k + 1)) return std::nullopt;
    }
  }
  return HalfGraphForm{k, std::move(b), std::move(w)};
}

}  // namespace seidel

#endif  // SEIDELG_STRUCTURE_HPP

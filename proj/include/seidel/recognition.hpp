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

#ifndef SEIDELG_RECOGNITION_HPP
#define SEIDELG_RECOGNITION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

/// The fixed small patterns this library detects as induced subgraphs.
enum class PatternKind { P4, P5, House, Bull, C5, TwoK2 };

inline const char* pattern_name(PatternKind k) {
  switch (k) {
    case PatternKind::P4: return "P4";
    case PatternKind::P5: return "P5";
    case PatternKind::House: return "HOUSE";
    case PatternKind::Bull: return "BULL";
    case PatternKind::C5: return "C5";
    case PatternKind::TwoK2: return "TWO_K2";
  }
  return "?";
}

inline std::optional<PatternKind> pattern_from_name(const std::string& name) {
  for (PatternKind k : {PatternKind::P4, PatternKind::P5, PatternKind::House, PatternKind::Bull,
                        PatternKind::C5, PatternKind::TwoK2}) {
    if (name == pattern_name(k)) return k;
  }
  return std::nullopt;
}

struct Pattern {
  PatternKind kind;
  Graph graph;
};

inline const Pattern& pattern(PatternKind k) {
  // House is the complement of P5; Bull is a triangle with two pendants.
  static const std::array<Pattern, 6> table = {
      Pattern{PatternKind::P4, new_graph(4, {{0, 1}, {1, 2}, {2, 3}})},
      Pattern{PatternKind::P5, new_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})},
      Pattern{PatternKind::House, complement(new_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}))},
      Pattern{PatternKind::Bull, new_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}})},
      Pattern{PatternKind::C5, new_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})},
      Pattern{PatternKind::TwoK2, new_graph(4, {{0, 1}, {2, 3}})},
  };
  return table[static_cast<int>(k)];
}

struct PatternMatch {
  PatternKind pattern;
  std::vector<int> vertices;  // host vertices, in pattern vertex order
};

/// True iff the ordered host tuple realizes the pattern with exact adjacency.
inline bool match_is_valid(const Graph& g, const PatternMatch& m) {
  const Graph& p = pattern(m.pattern).graph;
  int k = p.vertex_count();
  if (static_cast<int>(m.vertices.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    int hi = m.vertices[i];
    if (hi < 0 || hi >= g.vertex_count()) return false;
    for (int j = i + 1; j < k; ++j) {
      if (m.vertices[j] == hi) return false;
      if (g.adjacent(hi, m.vertices[j]) != p.adjacent(i, j)) return false;
    }
  }
  return true;
}

namespace detail {

struct InducedSearch {
  const Graph* host;
  const Graph* pat;
  int k;
  std::vector<int> chosen;
  std::vector<char> used;
  std::vector<int> pat_degree;

  bool extend(int depth) {
    if (depth == k) return true;
    for (int v = 0; v < host->vertex_count(); ++v) {
      if (used[v]) continue;
      if (host->degree(v) < pat_degree[depth]) continue;
      bool ok = true;
      for (int q = 0; q < depth && ok; ++q)
        ok = host->adjacent(chosen[q], v) == pat->adjacent(q, depth);
      if (!ok) continue;
      chosen[depth] = v;
      used[v] = 1;
      if (extend(depth + 1)) return true;
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace detail

/// First induced occurrence of the pattern, as the lexicographically
/// smallest host tuple in pattern vertex order, or nothing.
inline std::optional<PatternMatch> find_induced(const Graph& g, PatternKind kind) {
  const Graph& p = pattern(kind).graph;
  int k = p.vertex_count();
  if (g.vertex_count() < k) return std::nullopt;
  detail::InducedSearch s;
  s.host = &g;
  s.pat = &p;
  s.k = k;
  s.chosen.assign(k, -1);
  s.used.assign(g.vertex_count(), 0);
  s.pat_degree.resize(k);
  for (int i = 0; i < k; ++i) s.pat_degree[i] = p.degree(i);
  if (!s.extend(0)) return std::nullopt;
  return PatternMatch{kind, s.chosen};
}

struct FreeCheck {
  bool free = true;
  std::optional<PatternMatch> witness;
};

/// True iff none of the patterns occurs induced in g. On failure the witness
/// is the first match under the given pattern order.
inline FreeCheck is_free(const Graph& g, const std::vector<PatternKind>& patterns) {
  for (PatternKind k : patterns) {
    if (auto m = find_induced(g, k)) return FreeCheck{false, std::move(m)};
  }
  return FreeCheck{};
}

/// The forbidden patterns of the graph class this library studies.
inline const std::vector<PatternKind>& p5_house_bull() {
  static const std::vector<PatternKind> v{PatternKind::P5, PatternKind::House, PatternKind::Bull};
  return v;
}

/// P5 and its complement (the House).
inline const std::vector<PatternKind>& p5_p5bar() {
  static const std::vector<PatternKind> v{PatternKind::P5, PatternKind::House};
  return v;
}

/// Cographs are exactly the P4-free graphs.
inline bool is_cograph(const Graph& g) { return !find_induced(g, PatternKind::P4).has_value(); }

}  // namespace seidel

#endif  // SEIDELG_RECOGNITION_HPP

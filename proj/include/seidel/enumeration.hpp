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

#ifndef SEIDELG_ENUMERATION_HPP
#define SEIDELG_ENUMERATION_HPP

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "seidel/canonical.hpp"
#include "seidel/graph.hpp"

namespace seidel {

inline constexpr int kExhaustiveMaxVertices = 7;

inline std::uint64_t labeled_graph_count(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

/// Graph for one edge-subset bitmask; bit t covers the t-th pair in
/// column-major order (0,1), (0,2), (1,2), (0,3), ...
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> e;
  int t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      if ((mask >> t) & 1) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

/// All labeled graphs on n vertices, each exactly once, in bitmask order.
template <typename F>
void for_each_labeled_graph(int n, F&& fn) {
  if (n < 0 || n > kExhaustiveMaxVertices)
    throw Error("exhaustive enumeration supports 0 <= n <= " +
                std::to_string(kExhaustiveMaxVertices));
  std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(graph_from_mask(n, mask));
}

/// Streaming isomorphism filter backed by canonical codes.
class IsoDeduper {
 public:
  /// True iff the graph's class was not seen before.
  bool insert(const Graph& g) { return seen_.insert(canonical_code(g).bits).second; }
  std::size_t classes() const { return seen_.size(); }

 private:
  std::unordered_set<std::uint64_t> seen_;
};

/// One representative per isomorphism class, keeping first occurrences.
inline std::vector<Graph> dedup_by_isomorphism(const std::vector<Graph>& graphs) {
  IsoDeduper dedup;
  std::vector<Graph> out;
  for (const Graph& g : graphs) {
    if (dedup.insert(g)) out.push_back(g);
  }
  return out;
}

/// Canonical representatives of all isomorphism classes on n vertices,
/// sorted by code. Built by extending the classes on n-1 vertices with one
/// new vertex per attachment mask, far cheaper than canonizing all labeled
/// graphs.
inline std::vector<Graph> iso_classes(int n) {
  if (n < 1 || n > 8) throw Error("iso_classes supports 1 <= n <= 8");
  std::vector<CanonicalCode> codes{CanonicalCode{1, 0}};
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<std::uint64_t> next;
    for (const CanonicalCode& code : codes) {
      Graph base = graph_from_code(code);
      std::vector<std::pair<int, int>> edges = base.edges();
      for (std::uint64_t attach = 0; attach < (std::uint64_t{1} << (m - 1)); ++attach) {
        std::vector<std::pair<int, int>> e = edges;
        for (int u = 0; u < m - 1; ++u) {
          if ((attach >> u) & 1) e.emplace_back(u, m - 1);
        }
        next.insert(canonical_code(Graph(m, e)).bits);
      }
    }
    codes.clear();
    codes.reserve(next.size());
    for (std::uint64_t bits : next) codes.push_back(CanonicalCode{m, bits});
  }
  std::sort(codes.begin(), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const CanonicalCode& c : codes) out.push_back(graph_from_code(c));
  return out;
}

// --- deterministic sampling -------------------------------------------------

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Counter-based sampled graph: a pure function of (seed, index), so
/// parallel schedules see identical graphs.
inline Graph sampled_graph(int n, std::uint64_t seed, std::uint64_t index) {
  if (n < 0 || n > 32) throw Error("sampled graphs support n <= 32");
  std::uint64_t key = detail::splitmix64(seed ^ detail::splitmix64(index + 1));
  std::vector<std::pair<int, int>> e;
  int t = 0;
  std::uint64_t word = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      if (t % 64 == 0) word = detail::splitmix64(key + static_cast<std::uint64_t>(t) / 64);
      if ((word >> (t % 64)) & 1) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

/// Deterministic stream of vertex labels in [0, bound), keyed like
/// sampled_graph.
inline std::vector<int> sampled_labels(int bound, std::size_t count, std::uint64_t seed,
                                       std::uint64_t index) {
  std::uint64_t key = detail::splitmix64(seed ^ detail::splitmix64(index + 0x51ED270B));
  std::vector<int> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(static_cast<int>(detail::splitmix64(key + i) % static_cast<std::uint64_t>(bound)));
  }
  return out;
}

}  // namespace seidel

#endif  // SEIDELG_ENUMERATION_HPP

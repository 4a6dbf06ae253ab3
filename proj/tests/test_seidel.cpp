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

#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "seidel/canonical.hpp"
#include "seidel/enumeration.hpp"
#include "seidel/seidel.hpp"
#include "test_support.hpp"

using namespace seidel;
using namespace testsupport;

using EdgeList = std::vector<std::pair<int, int>>;

TEST_CASE("edge classification on worked examples", "[seidel]") {
  Graph c5 = cycle_graph(5);
  SeidelEdgeClassification c = classify_edges(c5, 0);
  CHECK(c.e1 == EdgeList{{0, 1}, {0, 4}});
  CHECK(c.e2 == EdgeList{{2, 3}});
  CHECK(c.e3 == EdgeList{{1, 3}, {2, 4}});
  CHECK(c.removed == EdgeList{{1, 2}, {3, 4}});

  SeidelEdgeClassification k = classify_edges(complete_graph(4), 0);
  CHECK(k.e1.size() == 6);
  CHECK(k.e2.empty());
  CHECK(k.e3.empty());
  CHECK(k.removed.empty());

  SeidelEdgeClassification e = classify_edges(edgeless_graph(4), 0);
  CHECK(e.e1.empty());
  CHECK(e.e2.empty());
  CHECK(e.e3.empty());
  CHECK(e.removed.empty());

  CHECK_THROWS_AS(classify_edges(c5, 5), Error);
}

TEST_CASE("classification invariants hold everywhere", "[seidel]") {
  for (int n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      for (int v = 0; v < n; ++v) {
        SeidelEdgeClassification c = classify_edges(g, v);
        VertexSet nv = neighborhood(g, v);
        VertexSet out = non_neighbors(g, v);

        // e1, e2, removed partition E(G); e3 is disjoint from E(G).
        const EdgeList edge_vec = g.edges();
        std::set<std::pair<int, int>> edges(edge_vec.begin(), edge_vec.end());
        std::size_t covered = 0;
        for (const auto* part : {&c.e1, &c.e2, &c.removed}) {
          for (auto pr : *part) {
            REQUIRE(edges.count(pr) == 1);
            ++covered;
          }
        }
        REQUIRE(covered == edges.size());
        for (auto pr : c.e3) REQUIRE(edges.count(pr) == 0);

        // Cross pairs straddle N(v) and the outside; v only ever shows in e1.
        for (const auto* part : {&c.e3, &c.removed}) {
          for (auto [a, b] : *part) {
            REQUIRE(a != v);
            REQUIRE(b != v);
            REQUIRE((nv.contains(a) ? out.contains(b) : nv.contains(b) && out.contains(a)));
          }
        }

        // |e3| = |N(v)| * |V - N[v]| - |removed|.
        REQUIRE(static_cast<int>(c.e3.size()) ==
                nv.count() * out.count() - static_cast<int>(c.removed.size()));

        // The rebuilt edge set is exactly e1 + e2 + e3.
        Graph image = seidel_complement(g, v);
        REQUIRE(image.edge_count() ==
                static_cast<int>(c.e1.size() + c.e2.size() + c.e3.size()));
      }
    });
  }
}

TEST_CASE("operator on worked examples", "[seidel]") {
  Graph c5 = cycle_graph(5);
  Graph image = seidel_complement(c5, 0);
  CHECK(image.edges() == EdgeList{{0, 1}, {0, 4}, {1, 3}, {2, 3}, {2, 4}});
  CHECK(is_isomorphic(image, c5));

  Graph c4 = cycle_graph(4);
  CHECK(seidel_complement(c4, 0).edges() == EdgeList{{0, 1}, {0, 3}});

  CHECK_THROWS_AS(seidel_complement(c5, -1), Error);
}

TEST_CASE("involution, commutation and neighborhood fixpoint", "[seidel]") {
  for (int n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      Graph co = complement(g);
      for (int v = 0; v < n; ++v) {
        Graph gv = seidel_complement(g, v);
        REQUIRE(seidel_complement(gv, v) == g);
        REQUIRE(complement(gv) == seidel_complement(co, v));
        REQUIRE(neighborhood(gv, v) == neighborhood(g, v));
      }
    });
  }
}

TEST_CASE("fast XOR path equals the classify-rebuild path", "[seidel]") {
  for (int n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      for (int v = 0; v < n; ++v) REQUIRE(seidel_complement_fast(g, v) == seidel_complement(g, v));
    });
  }
  for (int i = 0; i < 10; ++i) {
    Graph g = sampled_graph(30, 5, i);
    for (int v : {0, 7, 29}) REQUIRE(seidel_complement_fast(g, v) == seidel_complement(g, v));
  }
  for (int i = 0; i < 4; ++i) {
    // Rows wider than one 64-bit word.
    std::vector<int> ends = sampled_labels(70, 400, 9, i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t t = 0; t + 1 < ends.size(); t += 2) {
      if (ends[t] != ends[t + 1]) edges.emplace_back(ends[t], ends[t + 1]);
    }
    Graph big(70, edges);
    for (int v : {0, 31, 69}) REQUIRE(seidel_complement_fast(big, v) == seidel_complement(big, v));
  }
}

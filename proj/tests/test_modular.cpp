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

#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "seidel/enumeration.hpp"
#include "seidel/modular.hpp"
#include "seidel/recognition.hpp"
#include "seidel/seidel.hpp"
#include "test_support.hpp"

using namespace seidel;
using namespace testsupport;

namespace {

// C5 on 0..4 plus a false twin of vertex 0.
Graph c5_with_twin() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 4}});
}

VertexSet set_of(int n, std::vector<int> verts) {
  VertexSet s(n);
  for (int v : verts) s.add(v);
  return s;
}

}  // namespace

TEST_CASE("is_module on worked examples", "[modular]") {
  Graph tw = c5_with_twin();
  CHECK(is_module(tw, set_of(6, {0, 5})));
  CHECK_FALSE(is_module(tw, set_of(6, {0, 1})));

  Graph c5 = cycle_graph(5);
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) CHECK_FALSE(is_module(c5, set_of(5, {u, v})));
  }
  CHECK(is_module(c5, VertexSet::full(5)));
  CHECK(is_module(c5, set_of(5, {3})));
  CHECK(is_module(c5, VertexSet(5)));
}

TEST_CASE("is_prime on worked examples", "[modular]") {
  CHECK(is_prime(path_graph(4)));
  CHECK(is_prime(cycle_graph(5)));
  CHECK_FALSE(is_prime(cycle_graph(4)));  // opposite vertices are twins
  CHECK(is_prime(pattern(PatternKind::Bull).graph));
  CHECK_FALSE(is_prime(complete_graph(3)));
  CHECK_FALSE(is_prime(path_graph(3)));
  CHECK_FALSE(is_prime(edgeless_graph(1)));
}

TEST_CASE("is_prime matches the subset oracle", "[modular]") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) { REQUIRE(is_prime(g) == brute_is_prime(g)); });
  }
}

TEST_CASE("primality is invariant under complement and Seidel moves", "[modular]") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      bool prime = is_prime(g);
      REQUIRE(is_prime(complement(g)) == prime);
      for (int v = 0; v < n; ++v) REQUIRE(is_prime(seidel_complement(g, v)) == prime);
    });
  }
}

TEST_CASE("md_tree on worked examples", "[modular]") {
  MDNode series = md_tree(complete_graph(3));
  CHECK(series.kind == MDKind::Series);
  CHECK(series.children.size() == 3);
  for (const MDNode& c : series.children) CHECK(c.kind == MDKind::Leaf);

  MDNode parallel = md_tree(edgeless_graph(3));
  CHECK(parallel.kind == MDKind::Parallel);
  CHECK(parallel.children.size() == 3);

  MDNode twin = md_tree(c5_with_twin());
  CHECK(twin.kind == MDKind::Prime);
  REQUIRE(twin.children.size() == 5);
  bool found_pair = false;
  for (const MDNode& c : twin.children) {
    if (c.vertices.count() == 2) {
      found_pair = true;
      CHECK(c.vertices == set_of(6, {0, 5}));
      CHECK(c.kind == MDKind::Parallel);  // false twins induce no edge
    }
  }
  CHECK(found_pair);

  CHECK(md_tree(edgeless_graph(1)).kind == MDKind::Leaf);
  CHECK_THROWS_AS(md_tree(edgeless_graph(0)), Error);
}

TEST_CASE("md_tree invariants and reconstruction", "[modular]") {
  std::string why;
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      MDNode root = md_tree(g);
      INFO(why);
      REQUIRE(validate_md_tree(g, root, &why));
    });
  }
  for (int i = 0; i < 200; ++i) {
    Graph g = sampled_graph(9, 13, i);
    MDNode root = md_tree(g);
    INFO(why);
    REQUIRE(validate_md_tree(g, root, &why));
  }
}

TEST_CASE("cographs are exactly the prime-free trees", "[modular]") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(
        n, [&](const Graph& g) { REQUIRE(is_cograph(g) == !has_prime_node(md_tree(g))); });
  }
}

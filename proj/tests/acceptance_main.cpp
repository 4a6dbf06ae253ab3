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
//
// Acceptance suite: each criterion prints one PASS/FAIL line; the exit code
// is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "seidel/seidelg.hpp"

using namespace seidel;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s  criterion %2d  %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// Criterion 1: G*v*v = G and complement(G*v) = complement(G)*v, exhaustive
// over all labeled graphs on 6 vertices and all pivots, under 30 s.
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport inv = verify("INVOLUTION", GraphSpace::exhaustive(6));
  VerificationReport com = verify("COMPLEMENT_COMMUTE", GraphSpace::exhaustive(6));
  double elapsed = seconds_since(t0);
  std::size_t cex = inv.counterexamples.size() + com.counterexamples.size();
  bool pass = cex == 0 && inv.graphs_checked == 32768 && com.graphs_checked == 32768 &&
              elapsed < 30.0;
  report(1, pass,
         "involution + complement commutation: 2x32768 graphs x 6 pivots, " +
             std::to_string(cex) + " violations (" + fmt(elapsed) + " s, target < 30 s)");
}

// Criterion 2: the closure theorem, exhaustive for n <= 6 and over all 1044
// isomorphism classes at n = 7, under 5 min.
void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t cex = 0;
  std::uint64_t checked = 0;
  for (int n = 1; n <= 7; ++n) {
    VerificationReport r = verify("THM1_CLOSURE", GraphSpace::exhaustive(n));
    cex += r.counterexamples.size();
    checked += r.graphs_checked;
  }
  double elapsed = seconds_since(t0);
  std::uint64_t expected = 0;
  for (int n = 1; n <= 6; ++n) expected += labeled_graph_count(n);
  expected += 1044;
  bool pass = cex == 0 && checked == expected && elapsed < 300.0;
  report(2, pass,
         "closure of (P5,House,Bull)-freeness under the operator: " + std::to_string(checked) +
             " graphs (labeled n<=6 + 1044 classes at n=7), " + std::to_string(cex) +
             " counterexamples (" + fmt(elapsed) + " s, target < 300 s)");
}

// Criterion 3: cograph closure and primality preservation, exhaustive n <= 6.
void criterion3() {
  std::size_t cex = 0;
  for (int n = 1; n <= 6; ++n) {
    cex += verify("COGRAPH_CLOSURE", GraphSpace::exhaustive(n)).counterexamples.size();
    cex += verify("PRIME_PRESERVE", GraphSpace::exhaustive(n)).counterexamples.size();
  }
  report(3, cex == 0,
         "cograph closure + primality preservation, labeled n<=6: " + std::to_string(cex) +
             " counterexamples");
}

// Criterion 4: every prime (P5,P5bar)-free graph with n <= 7 is a C5 or C5-free.
void criterion4() {
  std::size_t cex = 0;
  std::uint64_t checked = 0;
  for (int n = 4; n <= 7; ++n) {
    VerificationReport r = verify("COR1", GraphSpace::exhaustive(n));
    cex += r.counterexamples.size();
    checked += r.graphs_checked;
  }
  report(4, cex == 0,
         "prime (P5,P5bar)-free graphs are C5 or C5-free, n<=7: " + std::to_string(checked) +
             " graphs, " + std::to_string(cex) + " counterexamples");
}

// Criterion 5: the classification biconditional with witness re-validation,
// prime graphs n <= 7.
void criterion5() {
  std::size_t cex = 0;
  for (int n = 4; n <= 7; ++n)
    cex += verify("THM3_IFF", GraphSpace::exhaustive(n)).counterexamples.size();
  report(5, cex == 0,
         "prime classification biconditional + witness re-validation, n<=7: " +
             std::to_string(cex) + " mismatches");
}

// Criterion 6: uniqueness of the staircase among prime P5-free bipartite
// graphs for n in {4,6,8}, and recognizer acceptance up to k = 64.
void criterion6() {
  std::string fail;
  std::uint64_t found = 0;

  for (int n : {4, 6}) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!is_prime(g) || !is_bipartite(g) || find_induced(g, PatternKind::P5)) return;
      ++found;
      if (!is_isomorphic(g, make_halfgraph(n / 2)))
        fail = "non-staircase prime P5-free bipartite graph at n=" + std::to_string(n);
    });
  }

  // n = 8 via all side splits: every bipartite graph shows up under some
  // split of its vertex set, so scanning cross-adjacency masks covers the
  // whole bipartite space.
  Graph h4 = make_halfgraph(4);
  for (int a = 1; a <= 4; ++a) {
    int b = 8 - a;
    std::uint64_t masks = std::uint64_t{1} << (a * b);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::vector<std::pair<int, int>> e;
      int bit = 0;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j, ++bit)
          if ((mask >> bit) & 1) e.emplace_back(i, a + j);
      Graph g(8, e);
      if (find_induced(g, PatternKind::P5) || !is_prime(g)) continue;
      ++found;
      if (!is_isomorphic(g, h4)) fail = "non-staircase prime P5-free bipartite graph at n=8";
    }
  }

  bool recognizer_ok = true;
  for (int k = 2; k <= 64; ++k) {
    auto form = recognize_halfgraph(make_halfgraph(k));
    if (!form || form->k != k || !(halfgraph_form_graph(*form) == make_halfgraph(k)))
      recognizer_ok = false;
  }

  bool pass = fail.empty() && found > 0 && recognizer_ok;
  report(6, pass,
         "staircase uniqueness at n=4,6,8 (" + std::to_string(found) +
             " class members, all isomorphic to H_{n/2}) + recognizer accepts H_k up to k=64" +
             (fail.empty() ? "" : ": " + fail));
}

// Criterion 7: descriptor moves match the operator exactly: all single moves
// for k <= 64 and 1000 seeded length-100 sequences at k = 16.
void criterion7() {
  VerificationReport singles = verify("PROP2_EQUIV", GraphSpace::exhaustive(64));
  VerificationReport sequences = verify("PROP2_EQUIV", GraphSpace::sampled(16, 1000, 2026));
  std::size_t cex = singles.counterexamples.size() + sequences.counterexamples.size();
  report(7, cex == 0,
         "O(1) move oracle equivalence: " + std::to_string(singles.graphs_checked) +
             " single moves (k<=64) + 1000 sequences of 100 moves (k=16), " +
             std::to_string(cex) + " mismatches");
}

// Criterion 8: constant-time move: mean descriptor update at k = 2^20 within
// 2x of k = 2^10, no materialization; CSV emitted. One re-measure is allowed
// to ride out scheduler noise.
void criterion8() {
  std::vector<FastMoveBench> rows;
  double small = 0, big = 0, ratio = 0;
  for (int attempt = 0; attempt < 2; ++attempt) {
    rows.clear();
    for (int k : {1 << 10, 1 << 12, 1 << 16, 1 << 20})
      rows.push_back(bench_fastmove(k, 4'000'000, 1));
    small = rows.front().mean_ns;
    big = rows.back().mean_ns;
    ratio = big / small;
    if (ratio <= 2.0) break;
  }
  std::ofstream csv("bench_fastmove.csv");
  csv << bench_csv_header() << "\n";
  for (const FastMoveBench& row : rows) csv << bench_csv_row(row) << "\n";
  report(8, ratio <= 2.0,
         "constant-time move: mean " + fmt(small) + " ns at k=2^10 vs " + fmt(big) +
             " ns at k=2^20, ratio " + fmt(ratio) + " (target <= 2), CSV in bench_fastmove.csv");
}

// Criterion 9: buoy dichotomy over connected (P5,P5bar)-free hosts with an
// induced C5, n <= 7.
void criterion9() {
  std::size_t cex = 0;
  for (int n = 5; n <= 7; ++n)
    cex += verify("BUOY_DICHOTOMY", GraphSpace::exhaustive(n)).counterexamples.size();
  report(9, cex == 0, "buoy dichotomy, n<=7: " + std::to_string(cex) + " failures");
}

// Criterion 10: dropping the created-edge class from the operator must be
// caught by the criterion-1 and criterion-2 sweeps.
void criterion10() {
  std::size_t c1 = verify("INVOLUTION", GraphSpace::exhaustive(6), Mutation::DropE3)
                       .counterexamples.size() +
                   verify("COMPLEMENT_COMMUTE", GraphSpace::exhaustive(6), Mutation::DropE3)
                       .counterexamples.size();
  std::size_t c2 =
      verify("THM1_CLOSURE", GraphSpace::exhaustive(6), Mutation::DropE3).counterexamples.size();
  bool pass = c1 >= 1 && c2 >= 1;
  report(10, pass,
         "mutation sensitivity (operator without created edges): criterion-1 sweep reports " +
             std::to_string(c1) + ", criterion-2 sweep reports " + std::to_string(c2) +
             " counterexamples (>= 1 each)");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "OK" : "NOT OK", failures);
  return failures;
}

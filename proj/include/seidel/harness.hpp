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

#ifndef SEIDELG_HARNESS_HPP
#define SEIDELG_HARNESS_HPP

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "seidel/enumeration.hpp"
#include "seidel/graph.hpp"
#include "seidel/halfgraph_fast.hpp"
#include "seidel/io.hpp"
#include "seidel/modular.hpp"
#include "seidel/recognition.hpp"
#include "seidel/seidel.hpp"
#include "seidel/structure.hpp"

namespace seidel {

// --- graph spaces ----------------------------------------------------------

struct GraphSpace {
  enum class Mode { Exhaustive, Sampled };
  Mode mode = Mode::Exhaustive;
  int n = 0;
  std::uint64_t count = 0;  // Sampled only
  std::uint64_t seed = 0;   // Sampled only

  static GraphSpace exhaustive(int n) { return GraphSpace{Mode::Exhaustive, n, 0, 0}; }
  static GraphSpace sampled(int n, std::uint64_t count, std::uint64_t seed) {
    return GraphSpace{Mode::Sampled, n, count, seed};
  }

  std::string describe() const {
    if (mode == Mode::Exhaustive) return "EXHAUSTIVE(" + std::to_string(n) + ")";
    return "SAMPLED(" + std::to_string(n) + ", count=" + std::to_string(count) +
           ", seed=" + std::to_string(seed) + ")";
  }
};

// --- seeded mutations --------------------------------------------------------
//
// Deliberately broken variants of the machinery under test, used to prove the
// property checks are not vacuous. None is the production path.

enum class Mutation {
  None,
  DropE3,                   // operator forgets the created cross edges
  AsymE1,                   // operator keeps kept-inside edges under an ordered test
  ClassifySkipCobipartite,  // classifier ignores the co-bipartite condition
  C5IsoAlwaysFalse,         // C5 isomorphism stubbed out
  BuoyNoExpansion,          // buoy stays at the bare cycle, skipping the fixpoint
};

struct MutationContext {
  Mutation mutation = Mutation::None;

  Graph apply_seidel(const Graph& g, int v) const {
    if (mutation != Mutation::DropE3 && mutation != Mutation::AsymE1)
      return seidel_complement(g, v);
    SeidelEdgeClassification c = classify_edges(g, v);
    std::vector<std::pair<int, int>> edges;
    if (mutation == Mutation::DropE3) {
      edges.insert(edges.end(), c.e1.begin(), c.e1.end());
    } else {
      VertexSet open = neighborhood(g, v);
      VertexSet closed = closed_neighborhood(g, v);
      for (auto [a, b] : c.e1) {
        if (open.contains(a) && closed.contains(b)) edges.emplace_back(a, b);
      }
    }
    edges.insert(edges.end(), c.e2.begin(), c.e2.end());
    if (mutation != Mutation::DropE3) edges.insert(edges.end(), c.e3.begin(), c.e3.end());
    return Graph(g.vertex_count(), edges);
  }

  ClassReport classify(const Graph& g) const {
    ClassReport r = classify_prime(g);
    if (mutation == Mutation::ClassifySkipCobipartite) {
      auto& c = r.conditions;
      c.erase(std::remove(c.begin(), c.end(), PrimeClassCondition::CobipartiteP5Free), c.end());
      r.complement_bipartition.reset();
      if (c.empty()) r.violation = is_free(g, p5_house_bull()).witness;
    }
    return r;
  }

  bool c5_isomorphic(const Graph& g) const {
    if (mutation == Mutation::C5IsoAlwaysFalse) return false;
    return g.vertex_count() == 5 && is_isomorphic(g, pattern(PatternKind::C5).graph);
  }

  BuoyPartition build_buoy(const Graph& g, const PatternMatch& start) const {
    if (mutation == Mutation::BuoyNoExpansion) {
      BuoyPartition b;
      for (int i = 0; i < 5; ++i) {
        b.classes[i] = VertexSet(g.vertex_count());
        b.classes[i].add(start.vertices[i]);
      }
      return b;
    }
    return find_buoy(g, start);
  }
};

// --- reports -----------------------------------------------------------------

struct Counterexample {
  std::string graph6;
  int vertex = -1;  // -1 when not about a particular vertex
  std::string detail;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
  friend bool operator<(const Counterexample& a, const Counterexample& b) {
    return std::tie(a.graph6, a.vertex, a.detail) < std::tie(b.graph6, b.vertex, b.detail);
  }
};

struct VerificationReport {
  std::string property;
  std::string space;
  std::uint64_t graphs_checked = 0;
  std::vector<Counterexample> counterexamples;
  double elapsed_seconds = 0;

  bool passed() const { return counterexamples.empty(); }
};

// --- property checks -----------------------------------------------------------

namespace detail {

struct Finding {
  int vertex;
  std::string detail;
};

using Findings = std::vector<Finding>;

inline Findings check_involution(const Graph& g, const MutationContext& ctx) {
  Findings out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!(ctx.apply_seidel(ctx.apply_seidel(g, v), v) == g))
      out.push_back({v, "double complementation at v does not restore the graph"});
  }
  return out;
}

inline Findings check_complement_commute(const Graph& g, const MutationContext& ctx) {
  Findings out;
  Graph co = complement(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!(complement(ctx.apply_seidel(g, v)) == ctx.apply_seidel(co, v)))
      out.push_back({v, "complement(G*v) != complement(G)*v"});
  }
  return out;
}

inline Findings check_cograph_closure(const Graph& g, const MutationContext& ctx) {
  Findings out;
  if (!is_cograph(g)) return out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!is_cograph(ctx.apply_seidel(g, v)))
      out.push_back({v, "cograph input, G*v contains an induced P4"});
  }
  return out;
}

inline Findings check_prime_preserve(const Graph& g, const MutationContext& ctx) {
  Findings out;
  bool prime = is_prime(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (is_prime(ctx.apply_seidel(g, v)) != prime)
      out.push_back({v, prime ? "prime input, G*v not prime" : "non-prime input, G*v prime"});
  }
  return out;
}

inline Findings check_thm1_closure(const Graph& g, const MutationContext& ctx) {
  bool lhs = is_free(g, p5_house_bull()).free;
  for (int v = 0; v < g.vertex_count(); ++v) {
    FreeCheck rhs = is_free(ctx.apply_seidel(g, v), p5_house_bull());
    if (lhs && !rhs.free) {
      return {{v, std::string("free input, G*v contains ") + pattern_name(rhs.witness->pattern)}};
    }
  }
  if (!lhs) {
    // Forward direction held vacuously; the converse needs every image free.
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!is_free(ctx.apply_seidel(g, v), p5_house_bull()).free) return {};
    }
    return {{-1, "non-free input, yet G*v is free for every v"}};
  }
  return {};
}

inline Findings check_cor1(const Graph& g, const MutationContext& ctx) {
  if (!is_prime(g) || !is_free(g, p5_p5bar()).free) return {};
  if (ctx.c5_isomorphic(g)) return {};
  if (find_induced(g, PatternKind::C5))
    return {{-1, "prime (P5,House)-free graph is not a C5 but contains one"}};
  return {};
}

inline bool bipartition_valid(const Graph& g, const Bipartition& parts) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    if (parts.left.contains(v) == parts.right.contains(v)) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (parts.left.contains(u) == parts.left.contains(v)) return false;
  }
  return true;
}

inline Findings check_thm3_iff(const Graph& g, const MutationContext& ctx) {
  if (!is_prime(g)) return {};
  ClassReport r = ctx.classify(g);
  bool free = is_free(g, p5_house_bull()).free;
  if (free != r.in_class())
    return {{-1, free ? "free prime graph got an empty report"
                      : "non-free prime graph got a nonempty report"}};
  Findings out;
  if (r.has(PrimeClassCondition::C5Iso)) {
    if (!r.c5_map || !match_is_valid(g, PatternMatch{PatternKind::C5, *r.c5_map}))
      out.push_back({-1, "C5 isomorphism witness does not validate"});
  }
  if (r.has(PrimeClassCondition::BipartiteP5Free)) {
    if (!r.bipartition || !bipartition_valid(g, *r.bipartition) ||
        find_induced(g, PatternKind::P5))
      out.push_back({-1, "bipartite witness does not validate"});
  }
  if (r.has(PrimeClassCondition::CobipartiteP5Free)) {
    Graph co = complement(g);
    if (!r.complement_bipartition || !bipartition_valid(co, *r.complement_bipartition) ||
        find_induced(co, PatternKind::P5))
      out.push_back({-1, "co-bipartite witness does not validate"});
  }
  if (!r.in_class() && (!r.violation || !match_is_valid(g, *r.violation)))
    out.push_back({-1, "forbidden-pattern witness does not validate"});
  return out;
}

// Cycle order of a 5-subset inducing a C5, or nothing.
inline std::optional<PatternMatch> c5_match_of_subset(const Graph& g, const std::vector<int>& s) {
  for (int v : s) {
    int deg = 0;
    for (int u : s) {
      if (u != v && g.adjacent(u, v)) ++deg;
    }
    if (deg != 2) return std::nullopt;
  }
  std::vector<int> cycle{s[0]};
  int prev = -1;
  for (int step = 0; step < 4; ++step) {
    int cur = cycle.back(), next = -1;
    for (int u : s) {
      if (u != prev && u != cur && g.adjacent(cur, u)) {
        if (next == -1 || u < next) next = u;
      }
    }
    if (next == -1) return std::nullopt;
    prev = cur;
    cycle.push_back(next);
  }
  PatternMatch m{PatternKind::C5, cycle};
  if (!match_is_valid(g, m)) return std::nullopt;
  return m;
}

inline Findings check_buoy_dichotomy(const Graph& g, const MutationContext& ctx) {
  if (!is_connected(g) || !is_free(g, p5_p5bar()).free) return {};
  Findings out;
  int n = g.vertex_count();
  std::vector<int> subset;
  std::function<void(int)> scan = [&](int from) {
    if (subset.size() == 5) {
      auto m = c5_match_of_subset(g, subset);
      if (!m) return;
      try {
        BuoyPartition b = ctx.build_buoy(g, *m);
        validate_buoy(g, b);
        VertexSet u = b.union_set();
        if (u.count() != n && !is_module(g, u))
          out.push_back({-1, "buoy union is neither V nor a module"});
      } catch (const Error& e) {
        out.push_back({-1, std::string("buoy construction failed: ") + e.what()});
      }
      return;
    }
    for (int v = from; v < n; ++v) {
      subset.push_back(v);
      scan(v + 1);
      subset.pop_back();
    }
  };
  if (n >= 5) scan(0);
  return out;
}

}  // namespace detail

// --- verify -------------------------------------------------------------------

inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{
      "INVOLUTION",  "COMPLEMENT_COMMUTE", "COGRAPH_CLOSURE", "PRIME_PRESERVE", "THM1_CLOSURE",
      "COR1",        "THM3_IFF",           "BUOY_DICHOTOMY",  "PROP2_EQUIV"};
  return names;
}

namespace detail {

using GraphChecker = Findings (*)(const Graph&, const MutationContext&);

inline GraphChecker graph_checker(const std::string& property) {
  if (property == "INVOLUTION") return &check_involution;
  if (property == "COMPLEMENT_COMMUTE") return &check_complement_commute;
  if (property == "COGRAPH_CLOSURE") return &check_cograph_closure;
  if (property == "PRIME_PRESERVE") return &check_prime_preserve;
  if (property == "THM1_CLOSURE") return &check_thm1_closure;
  if (property == "COR1") return &check_cor1;
  if (property == "THM3_IFF") return &check_thm3_iff;
  if (property == "BUOY_DICHOTOMY") return &check_buoy_dichotomy;
  return nullptr;
}

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("SEIDEL_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs the per-graph checker over an index range [0, total), mapping indices
// to graphs, in parallel chunks; results are merged and canonically sorted so
// the schedule cannot show through.
template <typename GraphOf>
std::vector<Counterexample> run_indexed(std::uint64_t total, int threads, GraphOf&& graph_of,
                                        GraphChecker checker, const MutationContext& ctx) {
  int t = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads),
                                                   std::max<std::uint64_t>(total, 1)));
  std::vector<std::vector<Counterexample>> local(t);
  auto work = [&](int w) {
    std::uint64_t lo = total * w / t, hi = total * (w + 1) / t;
    for (std::uint64_t i = lo; i < hi; ++i) {
      Graph g = graph_of(i);
      for (Finding& f : checker(g, ctx))
        local[w].push_back(Counterexample{to_graph6(g), f.vertex, std::move(f.detail)});
    }
  };
  if (t == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < t; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<Counterexample> merged;
  for (auto& part : local)
    merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  std::sort(merged.begin(), merged.end());
  return merged;
}

inline VerificationReport verify_prop2(const GraphSpace& space, const MutationContext& ctx) {
  VerificationReport report;
  report.property = "PROP2_EQUIV";
  if (space.mode == GraphSpace::Mode::Exhaustive) {
    int kmax = space.n;
    if (kmax < 2 || kmax > 128) throw Error("PROP2_EQUIV exhaustive mode needs 2 <= k <= 128");
    report.space = "all single moves, k=2.." + std::to_string(kmax);
    for (int k = 2; k <= kmax; ++k) {
      HalfGraphDescriptor d0 = HalfGraphDescriptor::initial(k);
      Graph g0 = d0.materialize();
      for (int x = 0; x < 2 * k; ++x) {
        ++report.graphs_checked;
        HalfGraphDescriptor d = fast_seidel_move(d0, x);
        Graph got = d.materialize();
        Graph want = ctx.apply_seidel(g0, x);
        if (!(got == want)) {
          report.counterexamples.push_back(
              {to_graph6(g0), x, "k=" + std::to_string(k) + ": descriptor move != operator"});
        } else if (!recognize_halfgraph(got)) {
          report.counterexamples.push_back(
              {to_graph6(g0), x, "k=" + std::to_string(k) + ": move left the staircase class"});
        }
      }
    }
  } else {
    int k = space.n;
    if (k < 2 || k > 128) throw Error("PROP2_EQUIV sampled mode needs 2 <= k <= 128");
    constexpr int kSequenceLength = 100;
    report.space = "random move sequences of length " + std::to_string(kSequenceLength) +
                   ", k=" + std::to_string(k) + ", count=" + std::to_string(space.count) +
                   ", seed=" + std::to_string(space.seed);
    for (std::uint64_t idx = 0; idx < space.count; ++idx) {
      ++report.graphs_checked;
      std::vector<int> moves = sampled_labels(2 * k, kSequenceLength, space.seed, idx);
      HalfGraphDescriptor d = HalfGraphDescriptor::initial(k);
      Graph g = d.materialize();
      for (int step = 0; step < kSequenceLength; ++step) {
        d.move_at(moves[step]);
        g = ctx.apply_seidel(g, moves[step]);
        if (!(d.materialize() == g)) {
          report.counterexamples.push_back(
              {to_graph6(g), moves[step],
               "sequence " + std::to_string(idx) + " diverges at step " + std::to_string(step)});
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace detail

/// Checks one named property over a graph space; zero counterexamples means
/// the property held everywhere. Exhaustive spaces cover every labeled graph
/// for n <= 6 and one representative per isomorphism class at n = 7 (all the
/// registered properties are isomorphism-invariant).
inline VerificationReport verify(const std::string& property, const GraphSpace& space,
                                 Mutation mutation = Mutation::None, int threads = 0) {
  auto started = std::chrono::steady_clock::now();
  MutationContext ctx{mutation};
  VerificationReport report;

  if (property == "PROP2_EQUIV") {
    report = detail::verify_prop2(space, ctx);
  } else {
    detail::GraphChecker checker = detail::graph_checker(property);
    if (checker == nullptr) throw Error("unknown property \"" + property + "\"");
    report.property = property;
    report.space = space.describe();
    int threads_resolved = detail::resolve_threads(threads);
    if (space.mode == GraphSpace::Mode::Exhaustive) {
      if (space.n < 0 || space.n > kExhaustiveMaxVertices)
        throw Error("exhaustive spaces support n <= " + std::to_string(kExhaustiveMaxVertices));
      if (space.n <= 6) {
        std::uint64_t total = labeled_graph_count(space.n);
        report.graphs_checked = total;
        report.counterexamples = detail::run_indexed(
            total, threads_resolved, [&](std::uint64_t i) { return graph_from_mask(space.n, i); },
            checker, ctx);
      } else {
        std::vector<Graph> classes = iso_classes(space.n);
        report.space += " via " + std::to_string(classes.size()) + " isomorphism classes";
        report.graphs_checked = classes.size();
        report.counterexamples = detail::run_indexed(
            classes.size(), threads_resolved, [&](std::uint64_t i) { return classes[i]; }, checker,
            ctx);
      }
    } else {
      report.graphs_checked = space.count;
      report.counterexamples = detail::run_indexed(
          space.count, threads_resolved,
          [&](std::uint64_t i) { return sampled_graph(space.n, space.seed, i); }, checker, ctx);
    }
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace seidel

#endif  // SEIDELG_HARNESS_HPP

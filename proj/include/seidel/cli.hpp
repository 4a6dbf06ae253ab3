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

#ifndef SEIDELG_CLI_HPP
#define SEIDELG_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "seidel/bench.hpp"
#include "seidel/graph.hpp"
#include "seidel/harness.hpp"
#include "seidel/io.hpp"
#include "seidel/modular.hpp"
#include "seidel/recognition.hpp"
#include "seidel/seidel.hpp"
#include "seidel/structure.hpp"

namespace seidel::cli {

using nlohmann::json;

// Exit codes: 0 success, 1 property violation or counterexample found,
// 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

struct IoOptions {
  std::string in = "-";
  std::string format;  // "", "graph6" or "edgelist"
  std::string out;     // "", "graph6", "json" or "dot"
};

inline void add_input_options(CLI::App* sub, IoOptions& io) {
  sub->add_option("--in", io.in, "input file, or - for stdin")->capture_default_str();
  sub->add_option("--format", io.format, "input format: graph6 or edgelist (default: by extension)")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
}

inline void add_output_option(CLI::App* sub, IoOptions& io, const std::string& def) {
  io.out = def;
  sub->add_option("--out", io.out, "output format")
      ->check(CLI::IsMember({"graph6", "json", "dot"}))
      ->capture_default_str();
}

// Report subcommands always emit JSON; the flag exists for a uniform surface.
inline void add_json_output_option(CLI::App* sub, IoOptions& io) {
  io.out = "json";
  sub->add_option("--out", io.out, "output format (this subcommand emits json)")
      ->check(CLI::IsMember({"json"}))
      ->capture_default_str();
}

inline GraphFormat input_format(const IoOptions& io) {
  if (io.format == "graph6") return GraphFormat::Graph6;
  if (io.format == "edgelist") return GraphFormat::EdgeList;
  auto ends_with = [&](const std::string& suffix) {
    return io.in.size() >= suffix.size() &&
           io.in.compare(io.in.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".edges") || ends_with(".el")) return GraphFormat::EdgeList;
  return GraphFormat::Graph6;
}

inline Graph read_graph(const IoOptions& io, std::istream& in_stream) {
  std::string text;
  if (io.in == "-") {
    std::ostringstream buf;
    buf << in_stream.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(io.in);
    if (!file) throw ParseError("cannot open input file: " + io.in);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  return parse_graph(text, input_format(io));
}

inline json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"schema", "v1"}, {"n", g.vertex_count()}, {"edges", edges}};
}

inline void write_graph(const Graph& g, const IoOptions& io, std::ostream& out) {
  if (io.out == "graph6")
    out << to_graph6(g) << "\n";
  else if (io.out == "dot")
    out << to_dot(g);
  else
    out << graph_json(g).dump(2) << "\n";
}

inline json set_json(const VertexSet& s) { return json(s.to_vector()); }

inline json match_json(const PatternMatch& m) {
  return json{{"pattern", pattern_name(m.pattern)}, {"vertices", m.vertices}};
}

inline json bipartition_json(const Bipartition& b) {
  return json{{"left", set_json(b.left)}, {"right", set_json(b.right)}};
}

inline json md_json(const MDNode& node) {
  json j{{"kind", md_kind_name(node.kind)}, {"vertices", set_json(node.vertices)}};
  if (!node.children.empty()) {
    json kids = json::array();
    for (const MDNode& c : node.children) kids.push_back(md_json(c));
    j["children"] = std::move(kids);
  }
  return j;
}

inline json report_json(const VerificationReport& r, bool with_elapsed) {
  json cexs = json::array();
  for (const Counterexample& c : r.counterexamples) {
    cexs.push_back({{"graph6", c.graph6}, {"vertex", c.vertex}, {"detail", c.detail}});
  }
  json j{{"schema", "v1"},
         {"property", r.property},
         {"space", r.space},
         {"graphs_checked", r.graphs_checked},
         {"counterexamples", std::move(cexs)},
         {"passed", r.passed()}};
  if (with_elapsed) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace detail

/// Full command-line front end; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  using detail::IoOptions;

  CLI::App app{"Seidel complementation toolkit for (P5, House, Bull)-free graphs"};
  app.require_subcommand(1);

  // The option defaults differ between subcommands, so each graph-emitting
  // subcommand gets its own option block.
  IoOptions io;
  IoOptions io_seidel;

  int pivot = 0;
  CLI::App* cmd_seidel = app.add_subcommand("seidel", "apply Seidel complementation at a vertex");
  cmd_seidel->add_option("vertex", pivot, "pivot vertex")->required();
  detail::add_input_options(cmd_seidel, io_seidel);
  detail::add_output_option(cmd_seidel, io_seidel, "graph6");

  CLI::App* cmd_recognize =
      app.add_subcommand("recognize", "test (P5, House, Bull)-freeness, with witness");
  detail::add_input_options(cmd_recognize, io);
  detail::add_json_output_option(cmd_recognize, io);

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "structural classification of a prime graph");
  detail::add_input_options(cmd_classify, io);
  detail::add_json_output_option(cmd_classify, io);

  CLI::App* cmd_mdtree = app.add_subcommand("mdtree", "modular decomposition tree");
  detail::add_input_options(cmd_mdtree, io);
  detail::add_json_output_option(cmd_mdtree, io);

  CLI::App* cmd_buoy = app.add_subcommand("buoy", "buoy around the first induced C5");
  detail::add_input_options(cmd_buoy, io);
  detail::add_json_output_option(cmd_buoy, io);

  CLI::App* cmd_halfgraph =
      app.add_subcommand("halfgraph", "recognize the staircase form of a prime P5-free bipartite graph");
  detail::add_input_options(cmd_halfgraph, io);
  detail::add_json_output_option(cmd_halfgraph, io);

  std::vector<int> moves;
  bool materialize = false;
  CLI::App* cmd_fastmove =
      app.add_subcommand("fastmove", "apply a Seidel move sequence on the O(1) descriptor");
  cmd_fastmove->add_option("moves", moves, "vertex labels to complement at, in order");
  cmd_fastmove->add_flag("--materialize", materialize, "include the materialized graph");
  detail::add_input_options(cmd_fastmove, io);
  detail::add_output_option(cmd_fastmove, io, "json");

  std::string property;
  int verify_n = 0;
  std::uint64_t samples = 0, seed = 0;
  CLI::App* cmd_verify = app.add_subcommand("verify", "check a named property over a graph space");
  cmd_verify->add_option("property", property, "one of: " + [] {
                           std::string s;
                           for (const std::string& p : property_names()) {
                             if (!s.empty()) s += ", ";
                             s += p;
                           }
                           return s;
                         }())
      ->required();
  cmd_verify->add_option("--n", verify_n, "vertex count (or max k for PROP2_EQUIV)")->required();
  cmd_verify->add_option("--samples", samples, "sample count (switches to the sampled space)");
  cmd_verify->add_option("--seed", seed, "seed for the sampled space");
  detail::add_json_output_option(cmd_verify, io);

  std::vector<int> bench_ks{1 << 10, 1 << 20};
  std::size_t bench_moves = 2'000'000;
  std::uint64_t bench_seed = 1;
  std::string bench_csv_path;
  CLI::App* cmd_bench =
      app.add_subcommand("bench-fastmove", "time descriptor updates; emits CSV (k,mean_ns,p99_ns)");
  cmd_bench->add_option("--k", bench_ks, "half-sizes to benchmark")->capture_default_str();
  cmd_bench->add_option("--moves", bench_moves, "moves per half-size")->capture_default_str();
  cmd_bench->add_option("--seed", bench_seed, "label sequence seed")->capture_default_str();
  cmd_bench->add_option("--csv", bench_csv_path, "also write the CSV to this file");

  std::vector<char*> argv;
  std::string prog = "seidelg";
  argv.push_back(prog.data());
  std::vector<std::string> owned = args;
  for (std::string& a : owned) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cmd_seidel->parsed()) {
      Graph g = detail::read_graph(io_seidel, in);
      if (pivot < 0 || pivot >= g.vertex_count()) {
        err << "error: pivot vertex " << pivot << " out of range\n";
        return kExitUsage;
      }
      detail::write_graph(seidel_complement(g, pivot), io_seidel, out);
      return kExitOk;
    }

    if (cmd_recognize->parsed()) {
      Graph g = detail::read_graph(io, in);
      FreeCheck fc = is_free(g, p5_house_bull());
      json j{{"schema", "v1"},
             {"class", "(P5,House,Bull)-free"},
             {"free", fc.free},
             {"witness", fc.witness ? detail::match_json(*fc.witness) : json(nullptr)}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (cmd_classify->parsed()) {
      Graph g = detail::read_graph(io, in);
      if (!is_prime(g)) {
        err << "error: classify requires a prime input graph\n";
        return kExitUsage;
      }
      ClassReport r = classify_prime(g);
      json conditions = json::array();
      for (PrimeClassCondition c : r.conditions) conditions.push_back(condition_name(c));
      json j{{"schema", "v1"}, {"conditions", std::move(conditions)}};
      if (r.c5_map) j["c5_map"] = *r.c5_map;
      if (r.bipartition) j["bipartition"] = detail::bipartition_json(*r.bipartition);
      if (r.complement_bipartition)
        j["complement_bipartition"] = detail::bipartition_json(*r.complement_bipartition);
      j["violation"] = r.violation ? detail::match_json(*r.violation) : json(nullptr);
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (cmd_mdtree->parsed()) {
      Graph g = detail::read_graph(io, in);
      if (g.vertex_count() < 1) {
        err << "error: mdtree requires at least one vertex\n";
        return kExitUsage;
      }
      json j{{"schema", "v1"}, {"tree", detail::md_json(md_tree(g))}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (cmd_buoy->parsed()) {
      Graph g = detail::read_graph(io, in);
      auto start = find_induced(g, PatternKind::C5);
      if (!start) {
        err << "error: input graph has no induced C5\n";
        return kExitUsage;
      }
      BuoyPartition b;
      try {
        b = find_buoy(g, *start);
      } catch (const Error& e) {
        err << "class violation: " << e.what() << "\n";
        return kExitViolation;
      }
      VertexSet u = b.union_set();
      json classes = json::array();
      for (const VertexSet& c : b.classes) classes.push_back(detail::set_json(c));
      json j{{"schema", "v1"},
             {"start", start->vertices},
             {"classes", std::move(classes)},
             {"union_is_graph", u.count() == g.vertex_count()},
             {"union_is_module", is_module(g, u)}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (cmd_halfgraph->parsed()) {
      Graph g = detail::read_graph(io, in);
      auto form = recognize_halfgraph(g);
      json j{{"schema", "v1"}, {"is_halfgraph", form.has_value()}};
      if (form) {
        j["k"] = form->k;
        j["b_order"] = form->b_order;
        j["w_order"] = form->w_order;
      }
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (cmd_fastmove->parsed()) {
      Graph g = detail::read_graph(io, in);
      auto d = HalfGraphDescriptor::from_graph(g);
      if (!d) {
        err << "error: input is neither a staircase graph nor the complement of one\n";
        return kExitUsage;
      }
      for (int x : moves) d->move_at(x);
      if (io.out != "json") {
        detail::write_graph(d->materialize(), io, out);
        return kExitOk;
      }
      HalfGraphForm form = d->implied_form();
      json j{{"schema", "v1"},
             {"k", d->k()},
             {"complemented", d->complemented()},
             {"moves_applied", moves.size()},
             {"b_order", form.b_order},
             {"w_order", form.w_order}};
      if (materialize) j["graph"] = detail::graph_json(d->materialize());
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      const auto& names = property_names();
      if (std::find(names.begin(), names.end(), property) == names.end()) {
        err << "error: unknown property \"" << property << "\"\n";
        return kExitUsage;
      }
      GraphSpace space = cmd_verify->count("--samples") ? GraphSpace::sampled(verify_n, samples, seed)
                                                        : GraphSpace::exhaustive(verify_n);
      VerificationReport report = verify(property, space);
      err << "verified " << report.graphs_checked << " cases in " << report.elapsed_seconds
          << " s\n";
      out << detail::report_json(report, /*with_elapsed=*/false).dump(2) << "\n";
      return report.passed() ? kExitOk : kExitViolation;
    }

    if (cmd_bench->parsed()) {
      std::ostringstream csv;
      csv << bench_csv_header() << "\n";
      for (int k : bench_ks) {
        if (k < 2) {
          err << "error: k must be at least 2\n";
          return kExitUsage;
        }
        csv << bench_csv_row(bench_fastmove(k, bench_moves, bench_seed)) << "\n";
      }
      out << csv.str();
      if (!bench_csv_path.empty()) {
        std::ofstream f(bench_csv_path);
        if (!f) {
          err << "error: cannot write CSV file: " << bench_csv_path << "\n";
          return kExitUsage;
        }
        f << csv.str();
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  err << "error: no subcommand given\n";
  return kExitUsage;
}

}  // namespace seidel::cli

#endif  // SEIDELG_CLI_HPP

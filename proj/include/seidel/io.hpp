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

#ifndef SEIDELG_IO_HPP
#define SEIDELG_IO_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

enum class GraphFormat { Graph6, EdgeList };

// --- graph6 ------------------------------------------------------------
//
// Standard header-less encoding: a size field, then the upper triangle of
// the adjacency matrix in column order, packed big-endian into 6-bit chunks
// offset by 63. Sizes up to 62 use one byte; larger sizes use the 4-byte
// form '~' + 18 bits.

inline std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw Error("graph6 encoding supports at most 258047 vertices");
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(const std::string& text) {
  auto bad = [&](std::size_t offset, const std::string& why) -> ParseError {
    return ParseError("graph6 parse error at offset " + std::to_string(offset) + ": " + why);
  };
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw bad(0, "empty input");
  std::size_t pos = 0;
  long long n;
  if (s[0] == '~') {
    if (s.size() < 4) throw bad(0, "truncated size field");
    if (s[1] == '~') throw bad(1, "8-byte size form not supported");
    n = 0;
    for (int t = 1; t <= 3; ++t) {
      int c = static_cast<unsigned char>(s[t]);
      if (c < 63 || c > 126) throw bad(t, "byte outside graph6 range");
      n = (n << 6) | (c - 63);
    }
    pos = 4;
  } else {
    int c = static_cast<unsigned char>(s[0]);
    if (c < 63 || c > 126) throw bad(0, "byte outside graph6 range");
    n = c - 63;
    pos = 1;
  }
  long long pair_bits = n * (n - 1) / 2;
  std::size_t body = static_cast<std::size_t>((pair_bits + 5) / 6);
  if (s.size() - pos != body)
    throw bad(pos, "expected " + std::to_string(body) + " body bytes, got " +
                       std::to_string(s.size() - pos));
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  int i = 0, j = 1;
  for (std::size_t t = pos; t < s.size(); ++t) {
    int c = static_cast<unsigned char>(s[t]);
    if (c < 63 || c > 126) throw bad(t, "byte outside graph6 range");
    int chunk = c - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      int value = (chunk >> b) & 1;
      if (bit >= pair_bits) {
        if (value != 0) throw bad(t, "nonzero padding bit");
        continue;
      }
      if (value) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(static_cast<int>(n), edges);
}

// --- edge list ----------------------------------------------------------
//
// Line-oriented: "n <count>" first, then one "u v" pair per line.

inline std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

inline Graph from_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto bad = [&](const std::string& why) -> ParseError {
    return ParseError("edge list parse error at line " + std::to_string(lineno) + ": " + why);
  };
  long long n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t c = line.find_first_not_of(" \t\r");
    if (c == std::string::npos) continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string keyword;
      ls >> keyword >> n;
      if (keyword != "n" || ls.fail() || n < 0) throw bad("expected header \"n <count>\"");
      std::string rest;
      if (ls >> rest) throw bad("trailing tokens after header");
      continue;
    }
    long long u, v;
    ls >> u >> v;
    if (ls.fail()) throw bad("expected \"u v\"");
    std::string rest;
    if (ls >> rest) throw bad("trailing tokens after edge");
    if (u < 0 || v < 0 || u >= n || v >= n) throw bad("endpoint out of range");
    if (u == v) throw bad("self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("edge list parse error at line 0: missing \"n <count>\" header");
  return Graph(static_cast<int>(n), edges);
}

// --- dispatch + DOT ------------------------------------------------------

inline Graph parse_graph(const std::string& text, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6:
      return from_graph6(text);
    case GraphFormat::EdgeList:
      return from_edgelist(text);
  }
  throw Error("unknown graph format");
}

inline std::string serialize_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6:
      return to_graph6(g) + "\n";
    case GraphFormat::EdgeList:
      return to_edgelist(g);
  }
  throw Error("unknown graph format");
}

inline std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace seidel

#endif  // SEIDELG_IO_HPP

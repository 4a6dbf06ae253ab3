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

#ifndef SEIDELG_HALFGRAPH_FAST_HPP
#define SEIDELG_HALFGRAPH_FAST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/structure.hpp"

namespace seidel {

/// Mutable representation of a staircase-form graph (or its complement)
/// supporting Seidel complementation at any vertex in O(1).
///
/// The 2k labels sit in a ring of 2k+1 slots, one of which is a gap. Reading
/// 2k slots from `head` in direction `dir` (the gap sits just behind the
/// head, so it is never crossed) yields the order (b_k..b_1, w_1..w_k); two
/// reading positions p < q are adjacent iff p < k <= q and q - p <= k.
///
/// Complementing at a B-side vertex x rewrites that reading as
///   (everything after x) ++ (x) ++ (everything before x),
/// i.e. x is plucked out of the ring into the current gap and the reading
/// restarts at x's old successor, with the vacated slot becoming the new
/// gap. Reversing the reading direction realizes the side-swap symmetry
/// b_i <-> w_i, which reduces W-side moves to B-side moves. Each move
/// therefore touches one pos[] entry, one ring slot, and three scalars.
///
/// State is O(k) words total; a move mutates O(1) of them. A `complemented`
/// bit covers the co-bipartite case, since complementation commutes with the
/// operator.
class HalfGraphDescriptor {
 public:
  /// Staircase with the same labeling make_halfgraph(k) uses.
  static HalfGraphDescriptor initial(int k, bool complemented = false) {
    HalfGraphDescriptor d(k, complemented);
    for (int r = 0; r < 2 * k; ++r) d.slots_[r] = r < k ? k - 1 - r : r;
    d.finish_init();
    return d;
  }

  static HalfGraphDescriptor from_form(const HalfGraphForm& form) {
    if (form.k < 2) throw Error("descriptor requires k >= 2");
    int k = form.k;
    if (static_cast<int>(form.b_order.size()) != k || static_cast<int>(form.w_order.size()) != k)
      throw Error("form orders must each hold k labels");
    HalfGraphDescriptor d(k, false);
    std::vector<char> seen(2 * k, 0);
    for (int x : form.b_order) mark(seen, x);
    for (int x : form.w_order) mark(seen, x);
    for (int r = 0; r < k; ++r) d.slots_[r] = form.b_order[k - 1 - r];
    for (int r = 0; r < k; ++r) d.slots_[k + r] = form.w_order[r];
    d.finish_init();
    return d;
  }

  /// Builds from a graph that is a staircase or the complement of one.
  static std::optional<HalfGraphDescriptor> from_graph(const Graph& g) {
    if (auto form = recognize_halfgraph(g)) return from_form(*form);
    if (auto form = recognize_halfgraph(complement(g))) {
      HalfGraphDescriptor d = from_form(*form);
      d.complemented_ = true;
      return d;
    }
    return std::nullopt;
  }

  int k() const { return k_; }
  int vertex_count() const { return 2 * k_; }
  bool complemented() const { return complemented_; }

  /// Seidel complementation at the given label; O(1).
  void move_at(int x) {
    if (x < 0 || x >= 2 * k_) throw Error("unknown vertex label " + std::to_string(x));
    std::int32_t slot = pos_[x];
    // W-side moves reduce to B-side moves of the reversed reading.
    if (reading_index(slot) >= k_) dir_ = -dir_;
    slots_[gap_] = x;
    pos_[x] = gap_;
    gap_ = slot;
    head_ = wrap(slot + dir_);
  }

  /// Cache hint for an upcoming move_at(x); useful when moves are batched.
  void prefetch(int x) const {
    if (x >= 0 && x < 2 * k_) __builtin_prefetch(&pos_[x], 1, 1);
  }

  /// Reading order (b_k..b_1, w_1..w_k) as labels.
  std::vector<int> reading() const {
    std::vector<int> out(2 * k_);
    std::int32_t s = head_;
    for (int r = 0; r < 2 * k_; ++r) {
      out[r] = slots_[s];
      s = wrap(s + dir_);
    }
    return out;
  }

  /// The staircase orderings implied by the current state. If the
  /// descriptor is complemented, the form describes complement(materialize()).
  HalfGraphForm implied_form() const {
    std::vector<int> order = reading();
    HalfGraphForm form;
    form.k = k_;
    form.b_order.assign(order.rend() - k_, order.rend());  // reversed first half
    form.w_order.assign(order.begin() + k_, order.end());
    return form;
  }

  /// Rebuilds the labeled graph in O(k^2).
  Graph materialize() const {
    HalfGraphForm form = implied_form();
    Graph g = halfgraph_form_graph(form);
    return complemented_ ? complement(g) : g;
  }

 private:
  HalfGraphDescriptor(int k, bool complemented)
      : k_(k), complemented_(complemented), slots_(2 * k + 1, -1), pos_(2 * k, -1) {
    if (k < 2) throw Error("descriptor requires k >= 2");
  }

  void finish_init() {
    head_ = 0;
    dir_ = 1;
    gap_ = 2 * k_;
    for (int r = 0; r < 2 * k_; ++r) pos_[slots_[r]] = r;
  }

  static void mark(std::vector<char>& seen, int x) {
    if (x < 0 || x >= static_cast<int>(seen.size()) || seen[x])
      throw Error("form labels must be a permutation of 0..2k-1");
    seen[x] = 1;
  }

  std::int32_t wrap(std::int32_t s) const {
    std::int32_t m = 2 * k_ + 1;
    if (s >= m) s -= m;
    if (s < 0) s += m;
    return s;
  }
  std::int32_t reading_index(std::int32_t slot) const {
    std::int32_t d = dir_ > 0 ? slot - head_ : head_ - slot;
    return d < 0 ? d + 2 * k_ + 1 : d;
  }

  int k_;
  bool complemented_;
  std::int32_t head_ = 0, gap_ = 0;
  std::int32_t dir_ = 1;
  std::vector<std::int32_t> slots_;  // ring of 2k+1 slots, slots_[gap_] stale
  std::vector<std::int32_t> pos_;    // label -> slot
};

inline HalfGraphDescriptor descriptor_from_form(const HalfGraphForm& form) {
  return HalfGraphDescriptor::from_form(form);
}

inline HalfGraphDescriptor fast_seidel_move(const HalfGraphDescriptor& d, int x) {
  HalfGraphDescriptor out = d;
  out.move_at(x);
  return out;
}

}  // namespace seidel

#endif  // SEIDELG_HALFGRAPH_FAST_HPP

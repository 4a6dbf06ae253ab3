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

#ifndef SEIDELG_BENCH_HPP
#define SEIDELG_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "seidel/enumeration.hpp"
#include "seidel/halfgraph_fast.hpp"

namespace seidel {

struct FastMoveBench {
  int k = 0;
  double mean_ns = 0;
  double p99_ns = 0;
};

/// Times descriptor updates only (no materialization) over a pregenerated
/// uniform label sequence, in batches. Upcoming position lookups are
/// prefetched a fixed distance ahead, so the figure is steady-state
/// throughput per move. p99 is taken over per-batch means.
inline FastMoveBench bench_fastmove(int k, std::size_t moves, std::uint64_t seed) {
  constexpr std::size_t kBatch = 4096;
  constexpr std::size_t kPrefetch = 32;
  std::size_t batches = std::max<std::size_t>(moves / kBatch, 16);

  HalfGraphDescriptor d = HalfGraphDescriptor::initial(k);
  std::vector<int> labels = sampled_labels(2 * k, batches * kBatch + kPrefetch, seed, 0);

  // Warmup pass over one batch.
  for (std::size_t i = 0; i < kBatch; ++i) d.move_at(labels[i]);

  std::vector<double> batch_ns(batches);
  std::size_t cursor = 0;
  for (std::size_t b = 0; b < batches; ++b) {
    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < kBatch; ++i, ++cursor) {
      d.prefetch(labels[cursor + kPrefetch]);
      d.move_at(labels[cursor]);
    }
    auto t1 = std::chrono::steady_clock::now();
    batch_ns[b] = std::chrono::duration<double, std::nano>(t1 - t0).count() / kBatch;
  }

  FastMoveBench out;
  out.k = k;
  double total = 0;
  for (double x : batch_ns) total += x;
  out.mean_ns = total / batches;
  std::sort(batch_ns.begin(), batch_ns.end());
  out.p99_ns = batch_ns[std::min(batches - 1, static_cast<std::size_t>(batches * 0.99))];
  return out;
}

inline std::string bench_csv_header() { return "k,mean_ns,p99_ns"; }

inline std::string bench_csv_row(const FastMoveBench& b) {
  std::ostringstream out;
  out << b.k << "," << b.mean_ns << "," << b.p99_ns;
  return out.str();
}

}  // namespace seidel

#endif  // SEIDELG_BENCH_HPP

// Copyright 2026 The qchdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCHDIST_SEARCH_H
#define QCHDIST_SEARCH_H

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace qchdist {

/// Outcome of a Monte-Carlo maximization run. `trace` samples the running
/// maximum at a fixed log-spaced schedule of trial counts (last entry at
/// `trials`), so best_value always equals the final trace value.
struct SearchResult {
  double best_value = 0.0;
  std::vector<double> best_params;
  std::vector<std::pair<std::uint64_t, double>> trace;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
};

struct ParamRange {
  double lo = 0.0;
  double hi = 1.0;
};

struct SearchOptions {
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  /// 0 = hardware concurrency. The result is identical for every value.
  int threads = 0;
  bool record_trace = true;
  /// Optional deterministic coordinate refinement around the best sample.
  /// Improvements fold into the final trace point. Off by default and for
  /// every acceptance run.
  bool refine = false;
  int refine_rounds = 24;
};

/// Log-spaced running-max checkpoint schedule: ~16 points per decade up to
/// and including `trials`.
std::vector<std::uint64_t> trace_checkpoints(std::uint64_t trials);

/// Uniform random search over a box. Trial t draws its parameters from a
/// counter-based stream keyed by (seed, t), one value per coordinate in
/// order; trials are partitioned into contiguous index ranges across
/// workers and merged by maximum value with ties broken by the lowest
/// trial index. Output is therefore a pure function of (box, objective,
/// trials, seed).
SearchResult random_search(
    std::span<const ParamRange> box,
    const std::function<double(std::span<const double>)>& objective,
    const SearchOptions& options);

}  // namespace qchdist

#endif  // QCHDIST_SEARCH_H

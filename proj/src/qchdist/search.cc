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

#include "qchdist/search.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

#include "qchdist/rng.h"

namespace qchdist {

namespace {

struct BestSample {
  double value = -std::numeric_limits<double>::infinity();
  std::uint64_t trial = std::numeric_limits<std::uint64_t>::max();
  std::vector<double> params;

  // Max by value; ties go to the earliest trial so merges are deterministic.
  bool improves_on(const BestSample& other) const {
    return value > other.value || (value == other.value && trial < other.trial);
  }
};

struct ChunkOutcome {
  BestSample best;
  // Running max over this chunk's own trials, sampled at the global
  // checkpoints that fall inside (begin, end].
  std::vector<double> trace_values;
  std::exception_ptr error;
};

}  // namespace

std::vector<std::uint64_t> trace_checkpoints(std::uint64_t trials) {
  std::vector<std::uint64_t> points;
  const double step = std::pow(10.0, 1.0 / 16.0);
  double x = 1.0;
  std::uint64_t last = 0;
  while (true) {
    const auto c = static_cast<std::uint64_t>(std::llround(x));
    if (c >= trials) break;
    if (c > last) {
      points.push_back(c);
      last = c;
    }
    x *= step;
  }
  points.push_back(trials);
  return points;
}

SearchResult random_search(
    std::span<const ParamRange> box,
    const std::function<double(std::span<const double>)>& objective,
    const SearchOptions& options) {
  if (options.trials < 1) {
    throw std::invalid_argument("random_search: trials must be >= 1");
  }
  if (box.empty()) {
    throw std::invalid_argument("random_search: empty parameter box");
  }
  const std::uint64_t trials = options.trials;
  const int n_params = static_cast<int>(box.size());

  std::vector<std::uint64_t> checkpoints;
  if (options.record_trace) checkpoints = trace_checkpoints(trials);

  unsigned n_threads = options.threads > 0
                           ? static_cast<unsigned>(options.threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(
      std::min<std::uint64_t>(n_threads, std::max<std::uint64_t>(trials / 256, 1)));

  // Contiguous trial ranges per chunk.
  std::vector<std::uint64_t> bounds(n_threads + 1);
  for (unsigned i = 0; i <= n_threads; ++i) {
    bounds[i] = trials * i / n_threads;
  }

  // Per chunk, the half-open range of checkpoint indices in (begin, end].
  std::vector<std::size_t> ck_begin(n_threads), ck_end(n_threads);
  for (unsigned i = 0; i < n_threads; ++i) {
    ck_begin[i] = std::upper_bound(checkpoints.begin(), checkpoints.end(),
                                   bounds[i]) -
                  checkpoints.begin();
    ck_end[i] = std::upper_bound(checkpoints.begin(), checkpoints.end(),
                                 bounds[i + 1]) -
                checkpoints.begin();
  }

  std::vector<ChunkOutcome> outcomes(n_threads);
  const auto run_chunk = [&](unsigned chunk) {
    ChunkOutcome& out = outcomes[chunk];
    try {
      std::vector<double> params(n_params);
      std::size_t ck = ck_begin[chunk];
      out.trace_values.resize(ck_end[chunk] - ck_begin[chunk]);
      for (std::uint64_t t = bounds[chunk]; t < bounds[chunk + 1]; ++t) {
        TrialRng rng(options.seed, t);
        for (int d = 0; d < n_params; ++d) {
          params[d] = rng.uniform(box[d].lo, box[d].hi);
        }
        const double value = objective(params);
        if (value > out.best.value) {
          out.best.value = value;
          out.best.trial = t;
          out.best.params = params;
        }
        while (ck < ck_end[chunk] && checkpoints[ck] == t + 1) {
          out.trace_values[ck - ck_begin[chunk]] = out.best.value;
          ++ck;
        }
      }
    } catch (...) {
      out.error = std::current_exception();
    }
  };

  if (n_threads == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) workers.emplace_back(run_chunk, i);
    for (std::thread& w : workers) w.join();
  }
  for (const ChunkOutcome& out : outcomes) {
    if (out.error) std::rethrow_exception(out.error);
  }

  // Ordered merge: prefix holds the best over all chunks strictly before the
  // current one, so a checkpoint at count c combines exactly trials [0, c).
  SearchResult result;
  result.seed = options.seed;
  result.trials = trials;
  result.trace.reserve(checkpoints.size());
  BestSample prefix;
  std::size_t next_ck = 0;
  for (unsigned chunk = 0; chunk < n_threads; ++chunk) {
    for (std::size_t k = ck_begin[chunk]; k < ck_end[chunk]; ++k) {
      const double local = outcomes[chunk].trace_values[k - ck_begin[chunk]];
      result.trace.emplace_back(checkpoints[k], std::max(prefix.value, local));
      ++next_ck;
    }
    if (outcomes[chunk].best.improves_on(prefix)) prefix = outcomes[chunk].best;
  }
  (void)next_ck;
  result.best_value = prefix.value;
  result.best_params = std::move(prefix.params);

  if (options.refine) {
    std::vector<double> current = result.best_params;
    std::vector<double> steps(n_params);
    for (int d = 0; d < n_params; ++d) steps[d] = (box[d].hi - box[d].lo) / 8.0;
    double best = result.best_value;
    for (int round = 0; round < options.refine_rounds; ++round) {
      for (int d = 0; d < n_params; ++d) {
        for (double direction : {+1.0, -1.0}) {
          std::vector<double> probe = current;
          probe[d] = std::clamp(probe[d] + direction * steps[d], box[d].lo,
                                box[d].hi);
          const double value = objective(probe);
          if (value > best) {
            best = value;
            current = probe;
          }
        }
      }
      for (double& s : steps) s *= 0.6;
    }
    result.best_value = best;
    result.best_params = current;
    if (!result.trace.empty()) result.trace.back().second = best;
  }

  return result;
}

}  // namespace qchdist

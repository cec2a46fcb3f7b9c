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

#ifndef QCHDIST_RNG_H
#define QCHDIST_RNG_H

#include <cstdint>

namespace qchdist {

/// Counter-based splittable RNG: the stream is keyed by (seed, trial), so
/// trial t always sees the same draws no matter which worker evaluates it or
/// in what order. This is what makes search results independent of thread
/// count and scheduling.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial)
      : state_(mix64(mix64(seed ^ 0x2545f4914f6cdd1dULL) +
                     mix64(trial * kGolden + 0x853c49e6748fea9bULL))) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform in [0, 1) with 53 random mantissa bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  // Stafford mix13 finalizer.
  static constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace qchdist

#endif  // QCHDIST_RNG_H

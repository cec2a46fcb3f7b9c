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

#include "qchdist/discrimination.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qchdist/linalg.h"

namespace qchdist {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kReferenceSlack = 1e-9;

double fano_difference_trace_norm(const FanoVector& r1, const FanoVector& r2) {
  std::array<double, 16> diff;
  for (int i = 0; i < 16; ++i) diff[i] = r1.coeffs[i] - r2.coeffs[i];
  return trace_norm(hermitian_from_fano(diff));
}

SearchOptions to_search_options(std::uint64_t trials, std::uint64_t seed,
                                const McOptions& options) {
  SearchOptions s;
  s.trials = trials;
  s.seed = seed;
  s.threads = options.threads;
  s.record_trace = options.record_trace;
  s.refine = options.refine;
  return s;
}

}  // namespace

double distance_for_input(const Channel& e1, const Channel& e2,
                          const DensityMatrix& xi) {
  const ExtendedAffine m1 = extend_with_ancilla(e1.affine);
  const ExtendedAffine m2 = extend_with_ancilla(e2.affine);
  const FanoVector r = fano_from_density(xi);
  return fano_difference_trace_norm(apply_affine(m1, r), apply_affine(m2, r));
}

SearchResult trace_distance_channels(const Channel& e1, const Channel& e2,
                                     std::uint64_t trials, std::uint64_t seed,
                                     const McOptions& options) {
  const AffineChannel a1 = e1.affine;
  const AffineChannel a2 = e2.affine;
  const auto objective = [&a1, &a2](std::span<const double> p) {
    const double theta = p[0];
    const double phi = p[1];
    const SingleQubitFano in = {std::sin(theta) * std::cos(phi),
                                std::sin(theta) * std::sin(phi),
                                std::cos(theta), 1.0};
    const SingleQubitFano out1 = a1.apply(in);
    const SingleQubitFano out2 = a2.apply(in);
    ComplexMatrix diff(2, 2);
    const double dx = 0.5 * (out1[0] - out2[0]);
    const double dy = 0.5 * (out1[1] - out2[1]);
    const double dz = 0.5 * (out1[2] - out2[2]);
    diff(0, 0) = dz;
    diff(0, 1) = Complex(dx, -dy);
    diff(1, 0) = Complex(dx, dy);
    diff(1, 1) = -dz;
    return trace_norm(diff);
  };
  const std::array<ParamRange, 2> box = {{{0.0, std::numbers::pi},
                                          {0.0, kTwoPi}}};
  return random_search(box, objective, to_search_options(trials, seed, options));
}

SearchResult diamond_distance_f(const Channel& e1, const Channel& e2,
                                std::uint64_t trials, std::uint64_t seed,
                                bool real_only, const McOptions& options) {
  const ExtendedAffine m1 = extend_with_ancilla(e1.affine);
  const ExtendedAffine m2 = extend_with_ancilla(e2.affine);
  const auto objective = [&m1, &m2, real_only](std::span<const double> p) {
    FanoVector r;
    if (real_only) {
      // Real amplitudes of either sign: phases fixed to zero while theta2
      // and theta3 range over the full circle. With the phases gone, the
      // canonical [0, pi/2] boxes would only reach nonnegative amplitudes
      // and the search would miss most of the real state family.
      const double c1 = std::cos(p[0]), s1 = std::sin(p[0]);
      const std::array<Complex, 4> amps = {
          c1 * std::cos(p[1]), c1 * std::sin(p[1]),
          s1 * std::cos(p[2]), s1 * std::sin(p[2])};
      r = fano_from_density(DensityMatrix::pure_from_amplitudes(amps));
    } else {
      PureStateAngles angles;
      angles.theta1 = p[0];
      angles.theta2 = p[1];
      angles.theta3 = p[2];
      angles.phi1 = p[3];
      angles.phi2 = p[4];
      angles.phi3 = p[5];
      r = fano_from_density(pure_state_from_angles(angles));
    }
    return fano_difference_trace_norm(apply_affine(m1, r), apply_affine(m2, r));
  };
  std::vector<ParamRange> box(real_only ? 3 : 6);
  box[0] = {0.0, kHalfPi};
  for (std::size_t d = 1; d < 3; ++d) {
    box[d] = real_only ? ParamRange{0.0, kTwoPi} : ParamRange{0.0, kHalfPi};
  }
  for (std::size_t d = 3; d < box.size(); ++d) box[d] = {0.0, kTwoPi};
  return random_search(box, objective, to_search_options(trials, seed, options));
}

double pauli_diamond(const PauliWeights& q1, const PauliWeights& q2) {
  q1.validate();
  q2.validate();
  return std::abs(q1.qi - q2.qi) + std::abs(q1.qx - q2.qx) +
         std::abs(q1.qy - q2.qy) + std::abs(q1.qz - q2.qz);
}

ErrorProbabilities error_probabilities(double trace_dist, double diamond_dist) {
  if (!(trace_dist >= 0.0 && trace_dist <= diamond_dist && diamond_dist <= 2.0)) {
    throw std::invalid_argument(
        "error_probabilities: need 0 <= trace <= diamond <= 2, got trace = " +
        std::to_string(trace_dist) + ", diamond = " +
        std::to_string(diamond_dist));
  }
  return {0.5 - trace_dist / 4.0, 0.5 - diamond_dist / 4.0};
}

std::vector<std::pair<std::uint64_t, double>> convergence_error_trace(
    const SearchResult& result, double reference) {
  if (result.trace.empty()) {
    throw std::invalid_argument("convergence_error_trace: result has no trace");
  }
  if (reference < result.best_value - kReferenceSlack) {
    throw std::invalid_argument(
        "convergence_error_trace: reference " + std::to_string(reference) +
        " undercuts the observed maximum " + std::to_string(result.best_value));
  }
  std::vector<std::pair<std::uint64_t, double>> out;
  out.reserve(result.trace.size());
  for (const auto& [n, running_max] : result.trace) {
    out.emplace_back(n, std::max(reference - running_max, 0.0));
  }
  return out;
}

double fit_power_law(
    const std::vector<std::pair<std::uint64_t, double>>& trace) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (const auto& [n, delta] : trace) {
    if (delta <= 0.0) continue;
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(delta);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 10) {
    throw std::invalid_argument(
        "fit_power_law: need at least 10 points with delta > 0, have " +
        std::to_string(count));
  }
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) {
    throw std::invalid_argument("fit_power_law: degenerate abscissae");
  }
  return (count * sxy - sx * sy) / denom;
}

}  // namespace qchdist

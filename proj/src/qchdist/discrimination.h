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

#ifndef QCHDIST_DISCRIMINATION_H
#define QCHDIST_DISCRIMINATION_H

#include "qchdist/channels.h"
#include "qchdist/search.h"

namespace qchdist {

/// Minimal-error probabilities for discriminating two channels with a
/// single use: p_e_prime without an ancilla (from the trace distance) and
/// p_e with one (from the diamond distance); p_e <= p_e_prime always.
struct ErrorProbabilities {
  double p_e_prime = 0.5;
  double p_e = 0.5;
};

/// Execution knobs shared by the Monte-Carlo distance searches. Results are
/// independent of `threads`.
struct McOptions {
  int threads = 0;
  bool record_trace = true;
  bool refine = false;
};

/// ||(I (x) E1) xi - (I (x) E2) xi||_1 for a dim-4 input state, evaluated
/// through the Fano pathway: apply the extended affine maps to the Fano
/// vector of xi, rebuild the 4x4 Hermitian difference, sum |eigenvalues|.
double distance_for_input(const Channel& e1, const Channel& e2,
                          const DensityMatrix& xi);

/// Superoperator trace distance ||E1 - E2||_1 by random search over
/// single-qubit pure input states (polar and azimuth angles). Converges to
/// the true value from below.
SearchResult trace_distance_channels(const Channel& e1, const Channel& e2,
                                     std::uint64_t trials, std::uint64_t seed,
                                     const McOptions& options = {});

/// F-algorithm diamond distance ||E1 - E2||_diamond: random search of
/// distance_for_input over the six pure-state parameters (three thetas in
/// [0, pi/2], three phis in [0, 2 pi)). With real_only the phases are fixed
/// to zero and theta2, theta3 range over the full circle instead, so the
/// three remaining parameters cover real amplitudes of either sign.
SearchResult diamond_distance_f(const Channel& e1, const Channel& e2,
                                std::uint64_t trials, std::uint64_t seed,
                                bool real_only = false,
                                const McOptions& options = {});

/// Analytic diamond distance between two Pauli channels:
/// sum_a |(q_a)_1 - (q_a)_2|, achieved at maximally entangled inputs.
double pauli_diamond(const PauliWeights& q1, const PauliWeights& q2);

/// p'_E = 1/2 - trace_dist / 4 and p_E = 1/2 - diamond_dist / 4.
/// Requires 0 <= trace_dist <= diamond_dist <= 2.
ErrorProbabilities error_probabilities(double trace_dist, double diamond_dist);

/// delta(N_r) = reference - running_max at each recorded checkpoint.
/// `reference` must not undercut the final running max (slack 1e-9);
/// negatives within the slack are clamped to 0.
std::vector<std::pair<std::uint64_t, double>> convergence_error_trace(
    const SearchResult& result, double reference);

/// Least-squares slope of log(delta) against log(N_r) over the points with
/// delta > 0; requires at least 10 of them.
double fit_power_law(
    const std::vector<std::pair<std::uint64_t, double>>& trace);

}  // namespace qchdist

#endif  // QCHDIST_DISCRIMINATION_H

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

#ifndef QCHDIST_STATES_H
#define QCHDIST_STATES_H

#include <array>
#include <span>

#include "qchdist/complex_matrix.h"

namespace qchdist {

// Pauli axis indices in the canonical coefficient order x, y, z, I.
inline constexpr int kPauliX = 0;
inline constexpr int kPauliY = 1;
inline constexpr int kPauliZ = 2;
inline constexpr int kPauliI = 3;

/// sigma_x, sigma_y, sigma_z, identity as 2x2 matrices, indexed by the
/// constants above.
const ComplexMatrix& pauli_matrix(int axis);

/// Hermitian, unit-trace, PSD matrix of dimension 2 (system) or
/// 4 (ancilla tensor system, ancilla as the left factor in the
/// {|00>, |01>, |10>, |11>} basis).
class DensityMatrix {
 public:
  /// Full validation: Hermitian, trace 1 (1e-10), eigenvalues >= -1e-10.
  static DensityMatrix from_matrix(const ComplexMatrix& m);

  /// Rank-1 projector onto the normalized amplitude vector (2 or 4 entries).
  /// PSD and unit trace hold by construction, so no eigencheck is run.
  static DensityMatrix pure_from_amplitudes(std::span<const Complex> amplitudes);

  int dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// The 16 real coefficients R_ab of a two-qubit state in the Pauli product
/// basis, stored in the canonical column order
///   [R_xx, R_xy, R_xz, R_xI, R_yx, ..., R_Iz, R_II]
/// i.e. index 4 * ancilla_axis + system_axis. This order is also the CSV
/// serialization order.
struct FanoVector {
  std::array<double, 16> coeffs{};

  static constexpr int index(int ancilla_axis, int system_axis) {
    return 4 * ancilla_axis + system_axis;
  }
  double& at(int ancilla_axis, int system_axis) {
    return coeffs[index(ancilla_axis, system_axis)];
  }
  double at(int ancilla_axis, int system_axis) const {
    return coeffs[index(ancilla_axis, system_axis)];
  }
};

/// Single-qubit Fano coefficients [x, y, z, 1].
using SingleQubitFano = std::array<double, 4>;

/// Parameters of a general two-qubit pure state: amplitudes
///   C00 = cos t1 cos t2,          C01 = cos t1 sin t2 e^{i p1},
///   C10 = sin t1 cos t3 e^{i p2}, C11 = sin t1 sin t3 e^{i p3},
/// with theta in [0, pi/2] and phi in [0, 2 pi).
struct PureStateAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  double phi3 = 0.0;
};

/// R_ab = Tr[(sigma_a x sigma_b) xi] for a dim-4 state. R_II is pinned to
/// exactly 1. An imaginary residue above 1e-10 on any trace rejects the
/// input as non-Hermitian.
FanoVector fano_from_density(const DensityMatrix& xi);

/// Inverse of fano_from_density: xi = (1/4) sum R_ab sigma_a x sigma_b.
/// Requires R_II = 1 and a PSD result.
DensityMatrix density_from_fano(const FanoVector& r);

/// (1/4) sum c_ab sigma_a x sigma_b without any state validation; intended
/// for coefficient differences, where the result is Hermitian but traceless.
ComplexMatrix hermitian_from_fano(const std::array<double, 16>& coeffs);

/// Amplitudes of the pure state described by `angles` (unit norm).
std::array<Complex, 4> pure_amplitudes_from_angles(const PureStateAngles& angles);

/// Projector onto the two-qubit pure state described by `angles`.
DensityMatrix pure_state_from_angles(const PureStateAngles& angles);

struct BlochState {
  DensityMatrix rho;
  SingleQubitFano fano;  // [x, y, z, 1] with x^2 + y^2 + z^2 = 1
};

/// Single-qubit pure state at polar angle theta in [0, pi] and azimuth phi
/// in [0, 2 pi) on the Bloch sphere.
BlochState bloch_pure_state(double theta, double phi);

/// Projector onto (|00> + |11>) / sqrt(2).
DensityMatrix maximally_entangled();

}  // namespace qchdist

#endif  // QCHDIST_STATES_H

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

#ifndef QCHDIST_CHANNELS_H
#define QCHDIST_CHANNELS_H

#include <array>
#include <vector>

#include "qchdist/states.h"

namespace qchdist {

/// Operator-sum representation of a single-qubit channel: 1..4 operators
/// E_k with sum_k E_k^dagger E_k = identity (to 1e-10).
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> operators);

  const std::vector<ComplexMatrix>& operators() const { return ops_; }
  int size() const { return static_cast<int>(ops_.size()); }

  /// sum_k E_k rho E_k^dagger for a 2x2 input.
  ComplexMatrix apply(const ComplexMatrix& rho) const;

 private:
  std::vector<ComplexMatrix> ops_;
};

/// 4x4 real matrix acting on single-qubit Fano coordinates [x, y, z, 1].
/// The bottom row is exactly [0, 0, 0, 1] (trace preservation). Complete
/// positivity is not certified by this type; channels built from Kraus
/// operators are CP by construction, and choi_matrix() below serves as a
/// CP check for everything else.
class AffineChannel {
 public:
  /// Row-major entries; the bottom row must match [0, 0, 0, 1] within 1e-12
  /// and is snapped exact.
  explicit AffineChannel(std::array<double, 16> entries);

  double at(int r, int c) const { return m_[4 * r + c]; }
  const std::array<double, 16>& data() const { return m_; }

  SingleQubitFano apply(const SingleQubitFano& r) const;

 private:
  std::array<double, 16> m_;
};

/// Pauli channel probabilities (q_I, q_x, q_y, q_z): nonnegative, summing
/// to 1 within 1e-12.
struct PauliWeights {
  double qi = 1.0;
  double qx = 0.0;
  double qy = 0.0;
  double qz = 0.0;

  void validate() const;
};

/// A single-qubit channel carried in both representations. Library
/// constructors guarantee the two stay consistent (affine_from_kraus(kraus)
/// reproduces `affine` entrywise).
struct Channel {
  KrausChannel kraus;
  AffineChannel affine;
};

/// Affine matrix of a Kraus channel: M_ab = (1/2) Tr[sigma_a sum_k E_k
/// sigma_b E_k^dagger].
AffineChannel affine_from_kraus(const KrausChannel& k);

/// Channel from both representations, rejecting inconsistent pairs.
Channel make_channel(KrausChannel kraus);

/// sum_a q_a sigma_a rho sigma_a. Kraus operators sqrt(q_a) sigma_a (zero
/// weights dropped); affine part diag[c_x, c_y, c_z, 1] with
/// c_x = 1 - 2(q_y + q_z) and cyclic.
Channel pauli_channel(const PauliWeights& q);

/// Pauli channel with q_I = 1 - p, q_x = q_y = q_z = p / 3; contracts the
/// Bloch ball by 1 - 4p/3. p in [0, 3/4].
Channel depolarizing(double p);

/// Displacement of the Bloch ball toward +x: x' = Cx^2 x + Sx^2,
/// y' = Cx y, z' = Cx z with Cx = cos(theta_x). theta_x in [0, pi/2];
/// theta_x = pi/2 sends every state to the point (1, 0, 0).
Channel displacement_x(double theta_x);

/// Displacement toward +z (the north pole): x' = Cz x, y' = Cz y,
/// z' = Cz^2 z + Sz^2. theta_z in [0, pi/2].
Channel displacement_z(double theta_z);

/// The identity channel (single Kraus operator I).
Channel identity_channel();

/// 16x16 extension I (x) M of a single-qubit affine map to
/// ancilla + system Fano vectors: block-diagonal with four copies of M.
class ExtendedAffine {
 public:
  explicit ExtendedAffine(const AffineChannel& single);

  double at(int r, int c) const { return m_[16 * r + c]; }
  FanoVector apply(const FanoVector& r) const;

 private:
  std::array<double, 256> m_;
};

ExtendedAffine extend_with_ancilla(const AffineChannel& m);

/// R' = M^(2) R for a state Fano vector (R_II = 1 in and out).
FanoVector apply_affine(const ExtendedAffine& m2, const FanoVector& r);

/// (I (x) E)(X) for a 4x4 operator X, ancilla as the left factor. X need
/// not be a state (the Kitaev construction feeds it the unnormalized
/// maximally entangled projector).
ComplexMatrix apply_with_ancilla(const KrausChannel& e, const ComplexMatrix& x);

/// Choi-type operator (I (x) E)(|alpha><alpha|) with |alpha> = |00> + |11>.
/// PSD iff the map is completely positive; exposed as a CP test utility.
ComplexMatrix choi_matrix(const KrausChannel& e);

}  // namespace qchdist

#endif  // QCHDIST_CHANNELS_H

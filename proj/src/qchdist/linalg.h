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

#ifndef QCHDIST_LINALG_H
#define QCHDIST_LINALG_H

#include <stdexcept>
#include <vector>

#include "qchdist/complex_matrix.h"

namespace qchdist {

/// Module-level tolerances. Functions take them as defaulted arguments so
/// tests can tighten or loosen individual calls.
namespace tol {
/// Max |A_ij - conj(A_ji)| for a matrix to count as Hermitian.
inline constexpr double kHermitian = 1e-12;
/// Eigenvalues in [-kPsdClamp, 0) are treated as round-off and clamped to 0;
/// anything below is a genuine negativity error.
inline constexpr double kPsdClamp = 1e-10;
/// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
inline constexpr double kJacobiOff = 1e-13;
/// Singular values below kSvRankCutoff * s_max do not count toward the rank.
inline constexpr double kSvRankCutoff = 1e-10;
}  // namespace tol

/// Thrown when an input violates a numerical contract (non-Hermitian where
/// Hermitian is required, negative eigenvalue beyond the PSD clamp, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, same order
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Rejects inputs whose Hermitian residual exceeds `hermitian_tol`, naming
/// the offending entry.
EigenDecomposition hermitian_eig(const ComplexMatrix& a,
                                 double hermitian_tol = tol::kHermitian);

/// Eigenvalues only (ascending); skips eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          double hermitian_tol = tol::kHermitian);

/// Sum of |eigenvalue| over the spectrum of a Hermitian matrix.
double trace_norm(const ComplexMatrix& a, double hermitian_tol = tol::kHermitian);

/// Hermitian PSD square root. Eigenvalues in [-clamp_tol, 0) are clamped to
/// zero; smaller ones reject the input as not PSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& p, double clamp_tol = tol::kPsdClamp);

/// Tr sqrt(X^{1/2} Y X^{1/2}) for Hermitian PSD X, Y of equal dimension.
/// Inputs need not have unit trace.
double fidelity_psd(const ComplexMatrix& x, const ComplexMatrix& y,
                    double clamp_tol = tol::kPsdClamp);

struct SvdResult {
  ComplexMatrix u;                     // rows x rows, unitary
  std::vector<double> singular_values; // min(rows, cols), nonincreasing
  ComplexMatrix v;                     // cols x cols, unitary
};

/// Singular value decomposition A = U diag(s) V^dagger, computed from the
/// eigendecomposition of A^dagger A with explicit recovery of the left
/// singular vectors. Columns matching zero singular values are completed by
/// orthogonalization, so U and V are always fully unitary.
SvdResult svd(const ComplexMatrix& a);

}  // namespace qchdist

#endif  // QCHDIST_LINALG_H

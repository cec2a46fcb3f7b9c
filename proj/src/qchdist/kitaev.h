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

#ifndef QCHDIST_KITAEV_H
#define QCHDIST_KITAEV_H

#include <span>

#include "qchdist/channels.h"
#include "qchdist/discrimination.h"
#include "qchdist/linalg.h"
#include "qchdist/search.h"

namespace qchdist {

/// sigma = (I (x) (E1 - E2))(|alpha><alpha|) with |alpha> = |00> + |11>.
/// Hermitian and traceless (both to 1e-10) for a difference of CPTP maps;
/// encodes the difference superoperator completely.
struct SigmaOperator {
  explicit SigmaOperator(ComplexMatrix m);
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

SigmaOperator build_sigma(const KrausChannel& e1, const KrausChannel& e2);

/// Operator pairs expressing the difference superoperator as
/// E1(X) - E2(X) = sum_i A^(i) X B^(i)^dagger. The SVD route yields
/// rank(sigma) <= 4 pairs; the alternative route yields 2 * max(M1, M2).
struct DifferenceDecomposition {
  std::vector<ComplexMatrix> a_ops;
  std::vector<ComplexMatrix> b_ops;

  int size() const { return static_cast<int>(a_ops.size()); }
  bool empty() const { return a_ops.empty(); }
};

/// Decomposition from the singular value decomposition of sigma: each
/// singular triple (s, u, v) contributes sqrt(s) u and sqrt(s) v reshaped
/// column-major into 2x2 operators. Singular values at or below
/// rank_cutoff * s_max are truncated; a zero sigma yields the empty
/// decomposition (E identically 0).
DifferenceDecomposition decompose_sigma(const SigmaOperator& sigma,
                                        double rank_cutoff = tol::kSvRankCutoff);

/// SVD-free decomposition built directly from the Kraus lists (padded with
/// zero operators to a common length M): 2M pairs
///   A^(2k-1) = (E_k + F_k)/sqrt(2), A^(2k) = (E_k - F_k)/sqrt(2),
/// with the B pairs swapped.
DifferenceDecomposition alt_decomposition(const KrausChannel& e1,
                                          const KrausChannel& e2);

/// sum_i A^(i) X B^(i)^dagger for a 2x2 operator X (reconstruction check).
ComplexMatrix apply_decomposition(const DifferenceDecomposition& decomp,
                                  const ComplexMatrix& x);

/// [Psi(rho)]_ij = Tr(ops_i rho ops_j^dagger): the M x M Hermitian PSD
/// output of the completely positive superoperator attached to an operator
/// family. Empty ops yield the empty matrix.
ComplexMatrix psi_apply(std::span<const ComplexMatrix> ops,
                        const DensityMatrix& rho);

/// Input-state sampling for the output-fidelity maximization. The fidelity
/// is jointly concave in (rho1, rho2), so its maximum generally sits at
/// mixed states (for Pauli pairs it is the maximally mixed pair, the
/// reduction of the optimal Bell input). kMixedBloch therefore samples the
/// full Bloch ball, three parameters per state; kPureBloch restricts to the
/// sphere and exists to probe how much that restriction loses.
enum class KitaevSampling {
  kMixedBloch,
  kPureBloch,
};

/// K-algorithm: maximize F[Psi_A(rho1), Psi_B(rho2)] over input states by
/// random search; the maximum equals ||E1 - E2||_diamond.
SearchResult max_output_fidelity(const DifferenceDecomposition& decomp,
                                 std::uint64_t trials, std::uint64_t seed,
                                 KitaevSampling sampling = KitaevSampling::kMixedBloch,
                                 const McOptions& options = {});

/// Full K-algorithm pipeline: build sigma, decompose via the SVD route,
/// maximize the output fidelity.
SearchResult diamond_distance_k(const KrausChannel& e1, const KrausChannel& e2,
                                std::uint64_t trials, std::uint64_t seed,
                                KitaevSampling sampling = KitaevSampling::kMixedBloch,
                                const McOptions& options = {});

}  // namespace qchdist

#endif  // QCHDIST_KITAEV_H

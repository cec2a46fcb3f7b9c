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

#include "qchdist/kitaev.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qchdist/rng.h"

using namespace qchdist;

namespace {

Channel sacchi_first() { return pauli_channel({0.5, 0.25, 0.25, 0.0}); }
Channel sacchi_second() { return pauli_channel({0.0, 0.0, 0.0, 1.0}); }

// Matrix unit |r><c| in dimension 2.
ComplexMatrix matrix_unit(int r, int c) {
  ComplexMatrix m(2, 2);
  m(r, c) = 1.0;
  return m;
}

// Direct difference E1(X) - E2(X) through the Kraus sums; the oracle every
// decomposition must reproduce.
ComplexMatrix difference_oracle(const KrausChannel& e1, const KrausChannel& e2,
                                const ComplexMatrix& x) {
  return e1.apply(x) - e2.apply(x);
}

double worst_reconstruction_error(const DifferenceDecomposition& decomp,
                                  const KrausChannel& e1,
                                  const KrausChannel& e2) {
  double worst = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const ComplexMatrix x = matrix_unit(r, c);
      worst = std::max(worst, max_abs_diff(apply_decomposition(decomp, x),
                                           difference_oracle(e1, e2, x)));
    }
  }
  return worst;
}

PauliWeights random_weights(TrialRng& rng) {
  double q[4];
  double sum = 0.0;
  for (double& w : q) {
    w = rng.next_unit();
    sum += w;
  }
  return {q[0] / sum, q[1] / sum, q[2] / sum, q[3] / sum};
}

// Naive (I (x) E)(X) built from explicit 4x4 Kronecker products, as an
// independent check of the block implementation behind build_sigma.
ComplexMatrix extended_apply_naive(const KrausChannel& e,
                                   const ComplexMatrix& x) {
  ComplexMatrix out(4, 4);
  for (const ComplexMatrix& op : e.operators()) {
    ComplexMatrix big(4, 4);
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          big(2 * i + k, 2 * i + l) = op(k, l);
        }
      }
    }
    out += big * x * big.adjoint();
  }
  return out;
}

}  // namespace

TEST(BuildSigma, ZeroForIdenticalChannels) {
  const Channel dep = depolarizing(0.2);
  const SigmaOperator sigma = build_sigma(dep.kraus, dep.kraus);
  EXPECT_LE(sigma.matrix().max_abs(), 1e-14);
}

TEST(BuildSigma, MatchesNaiveKroneckerComputation) {
  ComplexMatrix alpha(4, 4);
  alpha(0, 0) = alpha(0, 3) = alpha(3, 0) = alpha(3, 3) = 1.0;

  const Channel bit_avg = pauli_channel({0.5, 0.5, 0.0, 0.0});  // bit flip c=0
  const Channel id = identity_channel();
  const SigmaOperator sigma = build_sigma(id.kraus, bit_avg.kraus);
  const ComplexMatrix expected = extended_apply_naive(id.kraus, alpha) -
                                 extended_apply_naive(bit_avg.kraus, alpha);
  EXPECT_LE(max_abs_diff(sigma.matrix(), expected), 1e-13);
}

TEST(BuildSigma, HermitianAndTraceless) {
  const SigmaOperator sigma =
      build_sigma(sacchi_first().kraus, sacchi_second().kraus);
  EXPECT_LE(sigma.matrix().hermitian_residual().value, 1e-12);
  EXPECT_LE(std::abs(sigma.matrix().trace()), 1e-12);
  double eigen_sum = 0.0;
  for (double lambda : hermitian_eigenvalues(sigma.matrix())) {
    eigen_sum += lambda;
  }
  EXPECT_NEAR(eigen_sum, 0.0, 1e-12);
}

TEST(BuildSigma, SvdRoundTripOnSacchiSigma) {
  const SigmaOperator sigma =
      build_sigma(sacchi_first().kraus, sacchi_second().kraus);
  const SvdResult d = svd(sigma.matrix());
  ComplexMatrix diag(4, 4);
  for (int k = 0; k < 4; ++k) diag(k, k) = d.singular_values[k];
  EXPECT_LE(max_abs_diff(d.u * diag * d.v.adjoint(), sigma.matrix()), 1e-10);
}

TEST(DecomposeSigma, EmptyForZeroSigma) {
  const Channel dep = depolarizing(0.2);
  const DifferenceDecomposition d =
      decompose_sigma(build_sigma(dep.kraus, dep.kraus));
  EXPECT_TRUE(d.empty());
  EXPECT_LE(apply_decomposition(d, matrix_unit(0, 1)).max_abs(), 1e-15);
}

TEST(DecomposeSigma, ReconstructsSacchiDifference) {
  const Channel e1 = sacchi_first();
  const Channel e2 = sacchi_second();
  const DifferenceDecomposition d = decompose_sigma(build_sigma(e1.kraus, e2.kraus));
  EXPECT_LE(worst_reconstruction_error(d, e1.kraus, e2.kraus), 1e-9);
}

TEST(DecomposeSigma, RankMatchesSingularValueCount) {
  const Channel bit_avg = pauli_channel({0.5, 0.5, 0.0, 0.0});
  const Channel id = identity_channel();
  const SigmaOperator sigma = build_sigma(bit_avg.kraus, id.kraus);
  const SvdResult d = svd(sigma.matrix());
  int expected_rank = 0;
  for (double s : d.singular_values) {
    if (s > 1e-10 * d.singular_values[0]) ++expected_rank;
  }
  EXPECT_EQ(decompose_sigma(sigma).size(), expected_rank);
  EXPECT_LE(decompose_sigma(sigma).size(), 4);
}

TEST(AltDecomposition, ZeroForIdenticalSingleKraus) {
  const Channel id = identity_channel();
  const DifferenceDecomposition d = alt_decomposition(id.kraus, id.kraus);
  EXPECT_EQ(d.size(), 2);
  EXPECT_LE(worst_reconstruction_error(d, id.kraus, id.kraus), 1e-15);
}

TEST(AltDecomposition, SacchiTermCountAndAgreementWithSvdRoute) {
  const Channel e1 = sacchi_first();   // 3 Kraus operators
  const Channel e2 = sacchi_second();  // 1 Kraus operator
  const DifferenceDecomposition alt = alt_decomposition(e1.kraus, e2.kraus);
  EXPECT_EQ(alt.size(), 6);  // 2 * max(3, 1)
  EXPECT_LE(worst_reconstruction_error(alt, e1.kraus, e2.kraus), 1e-9);

  const DifferenceDecomposition via_svd =
      decompose_sigma(build_sigma(e1.kraus, e2.kraus));
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const ComplexMatrix x = matrix_unit(r, c);
      EXPECT_LE(max_abs_diff(apply_decomposition(alt, x),
                             apply_decomposition(via_svd, x)),
                1e-9);
    }
  }
}

TEST(AltDecomposition, RandomPairsReconstruct) {
  for (int rep = 0; rep < 20; ++rep) {
    TrialRng rng(860, rep);
    const Channel e1 = pauli_channel(random_weights(rng));
    const Channel e2 = pauli_channel(random_weights(rng));
    EXPECT_LE(worst_reconstruction_error(alt_decomposition(e1.kraus, e2.kraus),
                                         e1.kraus, e2.kraus),
              1e-9);
  }
}

TEST(PsiApply, SingleIdentityOperator) {
  std::vector<ComplexMatrix> ops = {ComplexMatrix::identity(2)};
  TrialRng rng(10, 0);
  const DensityMatrix rho = bloch_pure_state(1.1, 2.2).rho;
  const ComplexMatrix psi = psi_apply(ops, rho);
  ASSERT_EQ(psi.rows(), 1);
  EXPECT_NEAR(psi(0, 0).real(), 1.0, 1e-13);  // Tr(rho)
  EXPECT_NEAR(psi(0, 0).imag(), 0.0, 1e-13);
}

TEST(PsiApply, EmptyOperatorsGiveEmptyMatrix) {
  const Channel dep = depolarizing(0.2);
  const DifferenceDecomposition d =
      decompose_sigma(build_sigma(dep.kraus, dep.kraus));
  const ComplexMatrix psi = psi_apply(d.a_ops, bloch_pure_state(0.3, 0.4).rho);
  EXPECT_TRUE(psi.empty());
  EXPECT_EQ(fidelity_psd(psi, psi), 0.0);
}

TEST(PsiApply, PsdOnPureAndMixedInputs) {
  const DifferenceDecomposition d =
      decompose_sigma(build_sigma(sacchi_first().kraus, sacchi_second().kraus));
  for (int rep = 0; rep < 50; ++rep) {
    TrialRng rng(5005, rep);
    // Mixed states included via a random radius.
    const double r = rng.next_unit();
    const double theta = rng.uniform(0.0, std::numbers::pi);
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    ComplexMatrix m(2, 2);
    const double x = r * std::sin(theta) * std::cos(phi);
    const double y = r * std::sin(theta) * std::sin(phi);
    const double z = r * std::cos(theta);
    m(0, 0) = 0.5 * (1.0 + z);
    m(0, 1) = Complex(0.5 * x, -0.5 * y);
    m(1, 0) = Complex(0.5 * x, 0.5 * y);
    m(1, 1) = 0.5 * (1.0 - z);
    const DensityMatrix rho = DensityMatrix::from_matrix(m);

    for (const auto* ops : {&d.a_ops, &d.b_ops}) {
      const ComplexMatrix psi = psi_apply(*ops, rho);
      EXPECT_LE(psi.hermitian_residual().value, 1e-12);
      for (double lambda : hermitian_eigenvalues(psi)) {
        EXPECT_GE(lambda, -1e-10);
      }
      // Fidelity trace identity at X = Y.
      EXPECT_NEAR(fidelity_psd(psi, psi), psi.trace().real(), 1e-8);
    }
  }
}

TEST(MaxOutputFidelity, ZeroForIdenticalChannels) {
  const Channel dep = depolarizing(0.4);
  const SearchResult r = diamond_distance_k(dep.kraus, dep.kraus, 100, 1);
  EXPECT_EQ(r.best_value, 0.0);
  EXPECT_EQ(r.trace.back().second, 0.0);
  EXPECT_EQ(r.trace.back().first, 100u);
}

TEST(MaxOutputFidelity, SacchiPairReachesTwo) {
  const SearchResult r =
      diamond_distance_k(sacchi_first().kraus, sacchi_second().kraus, 200000, 2);
  EXPECT_NEAR(r.best_value, 2.0, 2e-2);
  EXPECT_LE(r.best_value, 2.0 + 1e-9);
}

TEST(MaxOutputFidelity, PureSamplingFallsShortOnSacchi) {
  // The fidelity maximum sits at the maximally mixed pair, so the
  // sphere-restricted probe mode must lose a finite amount here.
  const SearchResult pure =
      diamond_distance_k(sacchi_first().kraus, sacchi_second().kraus, 50000, 3,
                         KitaevSampling::kPureBloch);
  EXPECT_LT(pure.best_value, 1.9);
}

TEST(MaxOutputFidelity, MatchesPauliOracle) {
  for (int rep = 0; rep < 6; ++rep) {
    TrialRng rng(321, rep);
    const PauliWeights q1 = random_weights(rng);
    const PauliWeights q2 = random_weights(rng);
    const SearchResult r = diamond_distance_k(
        pauli_channel(q1).kraus, pauli_channel(q2).kraus, 100000, rep);
    EXPECT_NEAR(r.best_value, pauli_diamond(q1, q2), 3e-2) << "rep " << rep;
  }
}

TEST(MaxOutputFidelity, AgreesWithFAlgorithm) {
  const double c1 = 0.5, c2 = 0.8;
  const Channel bit = pauli_channel({(1.0 + c1) / 2.0, (1.0 - c1) / 2.0, 0, 0});
  const Channel phase =
      pauli_channel({(1.0 + c2) / 2.0, 0, 0, (1.0 - c2) / 2.0});
  const double f_value = diamond_distance_f(bit, phase, 100000, 6).best_value;
  const double k_value =
      diamond_distance_k(bit.kraus, phase.kraus, 100000, 6).best_value;
  EXPECT_NEAR(f_value, k_value, 3e-2);
}

TEST(MaxOutputFidelity, AltDecompositionGivesSameDiamond) {
  const DifferenceDecomposition alt =
      alt_decomposition(sacchi_first().kraus, sacchi_second().kraus);
  const SearchResult r = max_output_fidelity(alt, 100000, 4);
  EXPECT_NEAR(r.best_value, 2.0, 3e-2);
}

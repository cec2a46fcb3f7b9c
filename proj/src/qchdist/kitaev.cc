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
#include <stdexcept>
#include <string>

namespace qchdist {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Column-major reshape of a length-4 vector over ancilla (x) system indices
// into the 2x2 operator with op(system, ancilla) = vec[2 * ancilla + system].
ComplexMatrix reshape_to_operator(const ComplexMatrix& columns, int col,
                                  double scale) {
  ComplexMatrix op(2, 2);
  for (int ancilla = 0; ancilla < 2; ++ancilla) {
    for (int system = 0; system < 2; ++system) {
      op(system, ancilla) = scale * columns(2 * ancilla + system, col);
    }
  }
  return op;
}

DensityMatrix bloch_state(double theta, double phi, double radius) {
  const double x = radius * std::sin(theta) * std::cos(phi);
  const double y = radius * std::sin(theta) * std::sin(phi);
  const double z = radius * std::cos(theta);
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + z);
  m(0, 1) = Complex(0.5 * x, -0.5 * y);
  m(1, 0) = Complex(0.5 * x, 0.5 * y);
  m(1, 1) = 0.5 * (1.0 - z);
  return DensityMatrix::from_matrix(m);
}

}  // namespace

SigmaOperator::SigmaOperator(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != 4 || m_.cols() != 4) {
    throw std::invalid_argument("SigmaOperator: matrix must be 4x4");
  }
  const auto res = m_.hermitian_residual();
  if (res.value > 1e-10) {
    throw NumericalError("SigmaOperator: not Hermitian, entry (" +
                         std::to_string(res.row) + "," +
                         std::to_string(res.col) + ") has residual " +
                         std::to_string(res.value));
  }
  const double trace_mag = std::abs(m_.trace());
  if (trace_mag > 1e-10) {
    throw NumericalError("SigmaOperator: trace magnitude " +
                         std::to_string(trace_mag) + " exceeds 1e-10");
  }
}

SigmaOperator build_sigma(const KrausChannel& e1, const KrausChannel& e2) {
  return SigmaOperator(choi_matrix(e1) - choi_matrix(e2));
}

DifferenceDecomposition decompose_sigma(const SigmaOperator& sigma,
                                        double rank_cutoff) {
  const SvdResult decomposition = svd(sigma.matrix());
  const double s_max = decomposition.singular_values.empty()
                           ? 0.0
                           : decomposition.singular_values[0];
  DifferenceDecomposition out;
  for (std::size_t i = 0; i < decomposition.singular_values.size(); ++i) {
    const double s = decomposition.singular_values[i];
    if (s <= rank_cutoff * s_max || s == 0.0) break;
    const double root = std::sqrt(s);
    out.a_ops.push_back(
        reshape_to_operator(decomposition.u, static_cast<int>(i), root));
    out.b_ops.push_back(
        reshape_to_operator(decomposition.v, static_cast<int>(i), root));
  }
  return out;
}

DifferenceDecomposition alt_decomposition(const KrausChannel& e1,
                                          const KrausChannel& e2) {
  const std::size_t common = std::max(e1.operators().size(),
                                      e2.operators().size());
  const ComplexMatrix zero(2, 2);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  DifferenceDecomposition out;
  for (std::size_t k = 0; k < common; ++k) {
    const ComplexMatrix& first =
        k < e1.operators().size() ? e1.operators()[k] : zero;
    const ComplexMatrix& second =
        k < e2.operators().size() ? e2.operators()[k] : zero;
    const ComplexMatrix plus = (first + second) * Complex(inv_sqrt2);
    const ComplexMatrix minus = (first - second) * Complex(inv_sqrt2);
    out.a_ops.push_back(plus);
    out.a_ops.push_back(minus);
    out.b_ops.push_back(minus);
    out.b_ops.push_back(plus);
  }
  return out;
}

ComplexMatrix apply_decomposition(const DifferenceDecomposition& decomp,
                                  const ComplexMatrix& x) {
  ComplexMatrix out(2, 2);
  for (int i = 0; i < decomp.size(); ++i) {
    out += decomp.a_ops[i] * x * decomp.b_ops[i].adjoint();
  }
  return out;
}

ComplexMatrix psi_apply(std::span<const ComplexMatrix> ops,
                        const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw std::invalid_argument("psi_apply: input state must be single-qubit");
  }
  const int count = static_cast<int>(ops.size());
  if (count == 0) return ComplexMatrix();
  const ComplexMatrix& x = rho.matrix();
  ComplexMatrix psi(count, count);
  for (int i = 0; i < count; ++i) {
    for (int j = i; j < count; ++j) {
      // Tr(A_i rho A_j^dagger), expanded over the 2x2 indices.
      Complex s = 0.0;
      for (int alpha = 0; alpha < 2; ++alpha) {
        for (int m = 0; m < 2; ++m) {
          for (int n = 0; n < 2; ++n) {
            s += ops[i](alpha, m) * x(m, n) * std::conj(ops[j](alpha, n));
          }
        }
      }
      psi(i, j) = s;
      psi(j, i) = std::conj(s);
    }
    psi(i, i) = psi(i, i).real();
  }
  return psi;
}

SearchResult max_output_fidelity(const DifferenceDecomposition& decomp,
                                 std::uint64_t trials, std::uint64_t seed,
                                 KitaevSampling sampling,
                                 const McOptions& options) {
  if (decomp.empty()) {
    // E1 = E2: the objective is identically zero.
    SearchResult result;
    result.seed = seed;
    result.trials = trials;
    if (options.record_trace) {
      for (std::uint64_t n : trace_checkpoints(trials)) {
        result.trace.emplace_back(n, 0.0);
      }
    }
    return result;
  }

  const bool mixed = sampling == KitaevSampling::kMixedBloch;
  const int per_state = mixed ? 3 : 2;
  const auto objective = [&decomp, mixed, per_state](std::span<const double> p) {
    const double r1 = mixed ? p[2] : 1.0;
    const double r2 = mixed ? p[per_state + 2] : 1.0;
    const DensityMatrix rho1 = bloch_state(p[0], p[1], r1);
    const DensityMatrix rho2 = bloch_state(p[per_state], p[per_state + 1], r2);
    const ComplexMatrix psi_a = psi_apply(decomp.a_ops, rho1);
    const ComplexMatrix psi_b = psi_apply(decomp.b_ops, rho2);
    return fidelity_psd(psi_a, psi_b);
  };

  std::vector<ParamRange> box;
  for (int state = 0; state < 2; ++state) {
    box.push_back({0.0, std::numbers::pi});
    box.push_back({0.0, kTwoPi});
    if (mixed) box.push_back({0.0, 1.0});
  }

  SearchOptions s;
  s.trials = trials;
  s.seed = seed;
  s.threads = options.threads;
  s.record_trace = options.record_trace;
  s.refine = options.refine;
  return random_search(box, objective, s);
}

SearchResult diamond_distance_k(const KrausChannel& e1, const KrausChannel& e2,
                                std::uint64_t trials, std::uint64_t seed,
                                KitaevSampling sampling, const McOptions& options) {
  return max_output_fidelity(decompose_sigma(build_sigma(e1, e2)), trials, seed,
                             sampling, options);
}

}  // namespace qchdist

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

#include "qchdist/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qchdist {

namespace {

constexpr int kMaxJacobiSweeps = 100;

void require_hermitian(const ComplexMatrix& a, double tolerance,
                       const char* who) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix not square");
  }
  const auto res = a.hermitian_residual();
  if (res.value > tolerance) {
    throw NumericalError(std::string(who) + ": matrix not Hermitian, entry (" +
                         std::to_string(res.row) + "," +
                         std::to_string(res.col) + ") has residual " +
                         std::to_string(res.value));
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// One cyclic Jacobi pass over a (symmetrized in place). When v is non-null
// the rotations are accumulated into it as V <- V G.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix* v) {
  const int n = a.rows();
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const Complex apq = a(p, q);
      const double r = std::abs(apq);
      if (r == 0.0) continue;
      const Complex phase = apq / r;
      const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
      const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                       (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const Complex s = (t * c) * phase;
      const Complex sc = std::conj(s);

      // Columns: B = A G.
      for (int i = 0; i < n; ++i) {
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = c * aip - sc * aiq;
        a(i, q) = s * aip + c * aiq;
      }
      // Rows: A' = G^dagger B.
      for (int j = 0; j < n; ++j) {
        const Complex apj = a(p, j);
        const Complex aqj = a(q, j);
        a(p, j) = c * apj - s * aqj;
        a(q, j) = sc * apj + c * aqj;
      }
      // The rotation zeroes (p,q) exactly in exact arithmetic; pin it to
      // keep the matrix Hermitian against round-off drift.
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      a(p, p) = a(p, p).real();
      a(q, q) = a(q, q).real();

      if (v != nullptr) {
        for (int i = 0; i < n; ++i) {
          const Complex vip = (*v)(i, p);
          const Complex viq = (*v)(i, q);
          (*v)(i, p) = c * vip - sc * viq;
          (*v)(i, q) = s * vip + c * viq;
        }
      }
    }
  }
}

// Shared Jacobi driver; eigenvalues come back ascending, with matching
// eigenvector columns when compute_vectors is set.
EigenDecomposition jacobi_eig(const ComplexMatrix& input, double hermitian_tol,
                              bool compute_vectors) {
  require_hermitian(input, hermitian_tol, "hermitian_eig");
  const int n = input.rows();

  // Work on the exactly Hermitian part; the residual is within tolerance.
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
    }
  }

  ComplexMatrix v;
  if (compute_vectors) v = ComplexMatrix::identity(n);
  ComplexMatrix* vp = compute_vectors ? &v : nullptr;

  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) < tol::kJacobiOff) {
      converged = true;
      break;
    }
    jacobi_sweep(a, vp);
  }
  if (!converged && off_diagonal_norm(a) >= tol::kJacobiOff) {
    throw NumericalError("hermitian_eig: Jacobi iteration failed to converge");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  for (int k = 0; k < n; ++k) out.eigenvalues[k] = a(order[k], order[k]).real();
  if (compute_vectors) {
    out.eigenvectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
  }
  return out;
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& a, double hermitian_tol) {
  return jacobi_eig(a, hermitian_tol, /*compute_vectors=*/true);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          double hermitian_tol) {
  return jacobi_eig(a, hermitian_tol, /*compute_vectors=*/false).eigenvalues;
}

double trace_norm(const ComplexMatrix& a, double hermitian_tol) {
  if (a.empty()) return 0.0;
  double sum = 0.0;
  for (double lambda : hermitian_eigenvalues(a, hermitian_tol)) {
    sum += std::abs(lambda);
  }
  return sum;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& p, double clamp_tol) {
  const EigenDecomposition eig = hermitian_eig(p);
  const int n = p.rows();
  std::vector<double> roots(n);
  for (int k = 0; k < n; ++k) {
    double lambda = eig.eigenvalues[k];
    if (lambda < -clamp_tol) {
      throw NumericalError("psd_sqrt: matrix not PSD, eigenvalue " +
                           std::to_string(lambda));
    }
    roots[k] = std::sqrt(std::max(lambda, 0.0));
  }
  ComplexMatrix out(n, n);
  const ComplexMatrix& v = eig.eigenvectors;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < n; ++k) {
        s += v(i, k) * roots[k] * std::conj(v(j, k));
      }
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

double fidelity_psd(const ComplexMatrix& x, const ComplexMatrix& y,
                    double clamp_tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument("fidelity_psd: dimension mismatch");
  }
  if (x.empty()) return 0.0;
  const ComplexMatrix sx = psd_sqrt(x, clamp_tol);
  const ComplexMatrix m = sx * y * sx;
  double f = 0.0;
  for (double lambda : hermitian_eigenvalues(m)) {
    if (lambda < -clamp_tol) {
      throw NumericalError("fidelity_psd: second argument not PSD, composite "
                           "eigenvalue " + std::to_string(lambda));
    }
    f += std::sqrt(std::max(lambda, 0.0));
  }
  return f;
}

SvdResult svd(const ComplexMatrix& a) {
  if (a.empty()) {
    throw std::invalid_argument("svd: empty matrix");
  }
  const int m = a.rows();
  const int n = a.cols();
  const int k = std::min(m, n);

  // Right singular vectors from A^dagger A (ascending), reordered so the
  // singular values come out nonincreasing.
  const ComplexMatrix ata = a.adjoint() * a;
  const EigenDecomposition eig = hermitian_eig(ata);

  SvdResult out;
  out.v = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    const int src = n - 1 - j;
    for (int i = 0; i < n; ++i) out.v(i, j) = eig.eigenvectors(i, src);
  }
  out.singular_values.resize(k);
  for (int j = 0; j < k; ++j) {
    out.singular_values[j] = std::sqrt(std::max(eig.eigenvalues[n - 1 - j], 0.0));
  }
  const double s_max = out.singular_values.empty() ? 0.0 : out.singular_values[0];

  // Left singular vectors: A v_j / s_j where s_j is meaningfully nonzero,
  // then complete to a unitary basis. A re-orthonormalization pass keeps U
  // unitary even when tiny singular values make the quotient ill-conditioned.
  out.u = ComplexMatrix(m, m);
  const double build_floor = std::max(1e-14 * std::max(s_max, 1.0), 1e-300);

  // Removes the projections onto columns 0..j-1 of U (two passes) and
  // returns the remaining norm.
  const auto orthogonalize = [&](std::array<Complex, ComplexMatrix::kMaxDim>& col,
                                 int j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int prev = 0; prev < j; ++prev) {
        Complex proj = 0.0;
        for (int i = 0; i < m; ++i) proj += std::conj(out.u(i, prev)) * col[i];
        for (int i = 0; i < m; ++i) col[i] -= proj * out.u(i, prev);
      }
    }
    double norm = 0.0;
    for (int i = 0; i < m; ++i) norm += std::norm(col[i]);
    return std::sqrt(norm);
  };

  for (int j = 0; j < m; ++j) {
    std::array<Complex, ComplexMatrix::kMaxDim> col{};
    double norm = 0.0;
    if (j < k && out.singular_values[j] > build_floor) {
      for (int i = 0; i < m; ++i) {
        Complex s = 0.0;
        for (int t = 0; t < n; ++t) s += a(i, t) * out.v(t, j);
        col[i] = s / out.singular_values[j];
      }
      norm = orthogonalize(col, j);
    }
    if (norm <= 0.1) {
      // Null-space column: pick the standard basis vector with the largest
      // residual outside span(U[:, 0..j-1]). That residual is at least
      // sqrt((m - j) / m), so this never degenerates for m <= 8.
      std::array<Complex, ComplexMatrix::kMaxDim> best{};
      double best_norm = -1.0;
      for (int probe = 0; probe < m; ++probe) {
        std::array<Complex, ComplexMatrix::kMaxDim> trial{};
        trial[probe] = 1.0;
        const double trial_norm = orthogonalize(trial, j);
        if (trial_norm > best_norm) {
          best_norm = trial_norm;
          best = trial;
        }
      }
      col = best;
      norm = best_norm;
      if (norm <= 0.1) {
        throw NumericalError("svd: failed to complete unitary basis");
      }
    }
    for (int i = 0; i < m; ++i) out.u(i, j) = col[i] / norm;
  }
  return out;
}

}  // namespace qchdist

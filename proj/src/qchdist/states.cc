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

#include "qchdist/states.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qchdist/linalg.h"

namespace qchdist {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Each sigma_a x sigma_b has exactly four nonzero entries of modulus 1.
struct KronEntry {
  int row;
  int col;
  Complex value;
};
using KronPattern = std::array<KronEntry, 4>;

std::array<KronPattern, 16> build_kron_table() {
  std::array<KronPattern, 16> table{};
  for (int a = 0; a < 4; ++a) {
    const ComplexMatrix& sa = pauli_matrix(a);
    for (int b = 0; b < 4; ++b) {
      const ComplexMatrix& sb = pauli_matrix(b);
      int slot = 0;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          if (sa(i, j) == Complex(0.0)) continue;
          for (int k = 0; k < 2; ++k) {
            for (int l = 0; l < 2; ++l) {
              if (sb(k, l) == Complex(0.0)) continue;
              table[FanoVector::index(a, b)][slot++] = {
                  2 * i + k, 2 * j + l, sa(i, j) * sb(k, l)};
            }
          }
        }
      }
    }
  }
  return table;
}

const std::array<KronPattern, 16>& kron_table() {
  static const std::array<KronPattern, 16> table = build_kron_table();
  return table;
}

}  // namespace

const ComplexMatrix& pauli_matrix(int axis) {
  static const std::array<ComplexMatrix, 4> sigma = {
      ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}),
      ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)},
                                {Complex(0.0, 1.0), 0.0}}),
      ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}),
      ComplexMatrix::identity(2),
  };
  if (axis < 0 || axis > 3) {
    throw std::invalid_argument("pauli_matrix: axis out of range");
  }
  return sigma[axis];
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) {
    throw std::invalid_argument("DensityMatrix: dimension must be 2 or 4");
  }
  const auto res = m.hermitian_residual();
  if (res.value > tol::kHermitian) {
    throw NumericalError("DensityMatrix: not Hermitian, entry (" +
                         std::to_string(res.row) + "," +
                         std::to_string(res.col) + ") has residual " +
                         std::to_string(res.value));
  }
  if (std::abs(m.trace() - Complex(1.0)) > 1e-10) {
    throw NumericalError("DensityMatrix: trace differs from 1 by " +
                         std::to_string(std::abs(m.trace() - Complex(1.0))));
  }
  for (double lambda : hermitian_eigenvalues(m)) {
    if (lambda < -tol::kPsdClamp) {
      throw NumericalError("DensityMatrix: negative eigenvalue " +
                           std::to_string(lambda));
    }
  }
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::pure_from_amplitudes(
    std::span<const Complex> amplitudes) {
  const int dim = static_cast<int>(amplitudes.size());
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument("pure_from_amplitudes: need 2 or 4 amplitudes");
  }
  double norm2 = 0.0;
  for (const Complex& c : amplitudes) norm2 += std::norm(c);
  if (norm2 < 1e-12) {
    throw std::invalid_argument("pure_from_amplitudes: zero state vector");
  }
  const double inv = 1.0 / norm2;
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      m(i, j) = amplitudes[i] * std::conj(amplitudes[j]) * inv;
    }
  }
  return DensityMatrix(m);
}

FanoVector fano_from_density(const DensityMatrix& xi) {
  if (xi.dim() != 4) {
    throw std::invalid_argument("fano_from_density: state must have dimension 4");
  }
  const ComplexMatrix& m = xi.matrix();
  FanoVector r;
  for (int t = 0; t < 16; ++t) {
    Complex trace = 0.0;
    for (const KronEntry& e : kron_table()[t]) {
      trace += e.value * m(e.col, e.row);
    }
    if (std::abs(trace.imag()) > 1e-10) {
      throw NumericalError("fano_from_density: coefficient " +
                           std::to_string(t) + " has imaginary residue " +
                           std::to_string(trace.imag()));
    }
    r.coeffs[t] = trace.real();
  }
  // Tr(xi) = 1 was validated at construction; pin R_II exactly.
  r.coeffs[15] = 1.0;
  return r;
}

DensityMatrix density_from_fano(const FanoVector& r) {
  if (std::abs(r.coeffs[15] - 1.0) > 1e-12) {
    throw std::invalid_argument("density_from_fano: R_II must be 1, got " +
                                std::to_string(r.coeffs[15]));
  }
  return DensityMatrix::from_matrix(hermitian_from_fano(r.coeffs));
}

ComplexMatrix hermitian_from_fano(const std::array<double, 16>& coeffs) {
  ComplexMatrix out(4, 4);
  for (int t = 0; t < 16; ++t) {
    const double c = coeffs[t];
    if (c == 0.0) continue;
    for (const KronEntry& e : kron_table()[t]) {
      out(e.row, e.col) += 0.25 * c * e.value;
    }
  }
  return out;
}

std::array<Complex, 4> pure_amplitudes_from_angles(const PureStateAngles& a) {
  const auto check_theta = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= kHalfPi)) {
      throw std::invalid_argument(std::string("pure_state_from_angles: ") +
                                  name + " outside [0, pi/2]");
    }
  };
  const auto check_phi = [](double v, const char* name) {
    if (!(v >= 0.0 && v < kTwoPi)) {
      throw std::invalid_argument(std::string("pure_state_from_angles: ") +
                                  name + " outside [0, 2*pi)");
    }
  };
  check_theta(a.theta1, "theta1");
  check_theta(a.theta2, "theta2");
  check_theta(a.theta3, "theta3");
  check_phi(a.phi1, "phi1");
  check_phi(a.phi2, "phi2");
  check_phi(a.phi3, "phi3");

  const double c1 = std::cos(a.theta1), s1 = std::sin(a.theta1);
  const double c2 = std::cos(a.theta2), s2 = std::sin(a.theta2);
  const double c3 = std::cos(a.theta3), s3 = std::sin(a.theta3);
  return {
      Complex(c1 * c2, 0.0),
      std::polar(c1 * s2, a.phi1),
      std::polar(s1 * c3, a.phi2),
      std::polar(s1 * s3, a.phi3),
  };
}

DensityMatrix pure_state_from_angles(const PureStateAngles& angles) {
  const auto amps = pure_amplitudes_from_angles(angles);
  return DensityMatrix::pure_from_amplitudes(amps);
}

BlochState bloch_pure_state(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("bloch_pure_state: theta outside [0, pi]");
  }
  if (!(phi >= 0.0 && phi < kTwoPi)) {
    throw std::invalid_argument("bloch_pure_state: phi outside [0, 2*pi)");
  }
  const double x = std::sin(theta) * std::cos(phi);
  const double y = std::sin(theta) * std::sin(phi);
  const double z = std::cos(theta);
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + z);
  m(0, 1) = Complex(0.5 * x, -0.5 * y);
  m(1, 0) = Complex(0.5 * x, 0.5 * y);
  m(1, 1) = 0.5 * (1.0 - z);
  return {DensityMatrix::from_matrix(m), SingleQubitFano{x, y, z, 1.0}};
}

DensityMatrix maximally_entangled() {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const std::array<Complex, 4> amps = {inv_sqrt2, 0.0, 0.0, inv_sqrt2};
  return DensityMatrix::pure_from_amplitudes(amps);
}

}  // namespace qchdist

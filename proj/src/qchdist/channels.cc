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

#include "qchdist/channels.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "qchdist/linalg.h"

namespace qchdist {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

void check_unit_interval(double v, const char* name, double hi,
                         const char* hi_name) {
  if (!(v >= 0.0 && v <= hi)) {
    throw std::invalid_argument(std::string(name) + " outside [0, " + hi_name +
                                "]: " + std::to_string(v));
  }
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators)
    : ops_(std::move(operators)) {
  if (ops_.empty() || ops_.size() > 4) {
    throw std::invalid_argument("KrausChannel: need 1..4 operators, got " +
                                std::to_string(ops_.size()));
  }
  ComplexMatrix sum(2, 2);
  for (const ComplexMatrix& e : ops_) {
    if (e.rows() != 2 || e.cols() != 2) {
      throw std::invalid_argument("KrausChannel: operators must be 2x2");
    }
    sum += e.adjoint() * e;
  }
  const double residual = max_abs_diff(sum, ComplexMatrix::identity(2));
  if (residual > 1e-10) {
    throw std::invalid_argument(
        "KrausChannel: trace preservation violated, |sum E^dag E - I| = " +
        std::to_string(residual));
  }
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw std::invalid_argument("KrausChannel::apply: input must be 2x2");
  }
  ComplexMatrix out(2, 2);
  for (const ComplexMatrix& e : ops_) {
    out += e * rho * e.adjoint();
  }
  return out;
}

AffineChannel::AffineChannel(std::array<double, 16> entries) : m_(entries) {
  const std::array<double, 4> expected = {0.0, 0.0, 0.0, 1.0};
  for (int c = 0; c < 4; ++c) {
    if (std::abs(m_[12 + c] - expected[c]) > 1e-12) {
      throw std::invalid_argument(
          "AffineChannel: bottom row must be [0,0,0,1], entry " +
          std::to_string(c) + " is " + std::to_string(m_[12 + c]));
    }
    m_[12 + c] = expected[c];
  }
}

SingleQubitFano AffineChannel::apply(const SingleQubitFano& r) const {
  SingleQubitFano out{};
  for (int i = 0; i < 4; ++i) {
    double s = 0.0;
    for (int j = 0; j < 4; ++j) s += m_[4 * i + j] * r[j];
    out[i] = s;
  }
  return out;
}

void PauliWeights::validate() const {
  const std::array<double, 4> q = {qi, qx, qy, qz};
  double sum = 0.0;
  for (double w : q) {
    if (w < 0.0) {
      throw std::invalid_argument("PauliWeights: negative weight " +
                                  std::to_string(w));
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("PauliWeights: weights sum to " +
                                std::to_string(sum) + ", expected 1");
  }
}

AffineChannel affine_from_kraus(const KrausChannel& k) {
  std::array<double, 16> m{};
  for (int b = 0; b < 4; ++b) {
    const ComplexMatrix image = k.apply(pauli_matrix(b));
    for (int a = 0; a < 4; ++a) {
      const Complex entry = 0.5 * (pauli_matrix(a) * image).trace();
      if (std::abs(entry.imag()) > 1e-10) {
        throw NumericalError("affine_from_kraus: entry (" + std::to_string(a) +
                             "," + std::to_string(b) +
                             ") has imaginary residue " +
                             std::to_string(entry.imag()));
      }
      m[4 * a + b] = entry.real();
    }
  }
  return AffineChannel(m);
}

Channel make_channel(KrausChannel kraus) {
  AffineChannel affine = affine_from_kraus(kraus);
  return Channel{std::move(kraus), std::move(affine)};
}

Channel pauli_channel(const PauliWeights& q) {
  q.validate();
  const std::array<double, 4> weights = {q.qi, q.qx, q.qy, q.qz};
  const std::array<int, 4> axes = {kPauliI, kPauliX, kPauliY, kPauliZ};
  std::vector<ComplexMatrix> ops;
  for (int t = 0; t < 4; ++t) {
    if (weights[t] == 0.0) continue;
    ops.push_back(std::sqrt(weights[t]) * pauli_matrix(axes[t]));
  }
  KrausChannel kraus(std::move(ops));

  const double cx = 1.0 - 2.0 * (q.qy + q.qz);
  const double cy = 1.0 - 2.0 * (q.qz + q.qx);
  const double cz = 1.0 - 2.0 * (q.qx + q.qy);
  AffineChannel affine({cx, 0, 0, 0,  //
                        0, cy, 0, 0,  //
                        0, 0, cz, 0,  //
                        0, 0, 0, 1});
  return Channel{std::move(kraus), std::move(affine)};
}

Channel depolarizing(double p) {
  check_unit_interval(p, "depolarizing: p", 0.75, "3/4");
  return pauli_channel({1.0 - p, p / 3.0, p / 3.0, p / 3.0});
}

Channel displacement_z(double theta_z) {
  check_unit_interval(theta_z, "displacement_z: theta", kHalfPi, "pi/2");
  const double c = std::cos(theta_z);
  const double s = std::sin(theta_z);
  std::vector<ComplexMatrix> ops;
  ops.push_back(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, c}}));
  if (s != 0.0) {
    ops.push_back(ComplexMatrix::from_rows({{0.0, s}, {0.0, 0.0}}));
  }
  KrausChannel kraus(std::move(ops));
  AffineChannel affine({c, 0, 0, 0,          //
                        0, c, 0, 0,          //
                        0, 0, c * c, s * s,  //
                        0, 0, 0, 1});
  return Channel{std::move(kraus), std::move(affine)};
}

Channel displacement_x(double theta_x) {
  check_unit_interval(theta_x, "displacement_x: theta", kHalfPi, "pi/2");
  const double c = std::cos(theta_x);
  const double s = std::sin(theta_x);
  // The z-displacement pair conjugated by the Hadamard rotation, which swaps
  // the x- and z-axes of the Bloch sphere.
  std::vector<ComplexMatrix> ops;
  ops.push_back(ComplexMatrix::from_rows(
      {{0.5 * (1.0 + c), 0.5 * (1.0 - c)}, {0.5 * (1.0 - c), 0.5 * (1.0 + c)}}));
  if (s != 0.0) {
    ops.push_back(ComplexMatrix::from_rows(
        {{0.5 * s, -0.5 * s}, {0.5 * s, -0.5 * s}}));
  }
  KrausChannel kraus(std::move(ops));
  AffineChannel affine({c * c, 0, 0, s * s,  //
                        0, c, 0, 0,          //
                        0, 0, c, 0,          //
                        0, 0, 0, 1});
  return Channel{std::move(kraus), std::move(affine)};
}

Channel identity_channel() { return pauli_channel({1.0, 0.0, 0.0, 0.0}); }

ExtendedAffine::ExtendedAffine(const AffineChannel& single) : m_{} {
  for (int block = 0; block < 4; ++block) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        m_[16 * (4 * block + i) + (4 * block + j)] = single.at(i, j);
      }
    }
  }
}

FanoVector ExtendedAffine::apply(const FanoVector& r) const {
  FanoVector out;
  // Block-diagonal structure: the ancilla axis index is untouched.
  for (int block = 0; block < 4; ++block) {
    for (int i = 0; i < 4; ++i) {
      double s = 0.0;
      for (int j = 0; j < 4; ++j) {
        s += m_[16 * (4 * block + i) + (4 * block + j)] * r.coeffs[4 * block + j];
      }
      out.coeffs[4 * block + i] = s;
    }
  }
  return out;
}

ExtendedAffine extend_with_ancilla(const AffineChannel& m) {
  return ExtendedAffine(m);
}

FanoVector apply_affine(const ExtendedAffine& m2, const FanoVector& r) {
  if (std::abs(r.coeffs[15] - 1.0) > 1e-12) {
    throw std::invalid_argument("apply_affine: R_II must be 1, got " +
                                std::to_string(r.coeffs[15]));
  }
  FanoVector out = m2.apply(r);
  out.coeffs[15] = 1.0;
  return out;
}

ComplexMatrix apply_with_ancilla(const KrausChannel& e, const ComplexMatrix& x) {
  if (x.rows() != 4 || x.cols() != 4) {
    throw std::invalid_argument("apply_with_ancilla: operator must be 4x4");
  }
  ComplexMatrix out(4, 4);
  for (const ComplexMatrix& op : e.operators()) {
    // I (x) op acts on each 2x2 system block: out_{(i,j)} += op X^{(i,j)} op^dag
    // where X^{(i,j)} is the system block at ancilla indices (i, j).
    for (int ai = 0; ai < 2; ++ai) {
      for (int aj = 0; aj < 2; ++aj) {
        for (int r = 0; r < 2; ++r) {
          for (int c = 0; c < 2; ++c) {
            Complex s = 0.0;
            for (int m = 0; m < 2; ++m) {
              for (int n = 0; n < 2; ++n) {
                s += op(r, m) * x(2 * ai + m, 2 * aj + n) * std::conj(op(c, n));
              }
            }
            out(2 * ai + r, 2 * aj + c) += s;
          }
        }
      }
    }
  }
  return out;
}

ComplexMatrix choi_matrix(const KrausChannel& e) {
  ComplexMatrix alpha(4, 4);
  // |alpha><alpha| with |alpha> = |00> + |11> (unnormalized).
  alpha(0, 0) = 1.0;
  alpha(0, 3) = 1.0;
  alpha(3, 0) = 1.0;
  alpha(3, 3) = 1.0;
  return apply_with_ancilla(e, alpha);
}

}  // namespace qchdist

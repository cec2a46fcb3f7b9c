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

#ifndef QCHDIST_COMPLEX_MATRIX_H
#define QCHDIST_COMPLEX_MATRIX_H

#include <array>
#include <complex>
#include <initializer_list>

namespace qchdist {

using Complex = std::complex<double>;

/// Dense complex matrix with a fixed 8x8 capacity, stored row-major.
/// Values live on the stack and copy freely; every operation returns a new
/// value. A default-constructed matrix is the empty (0x0) matrix, used only
/// as a degenerate result (e.g. the decomposition of a zero superoperator).
class ComplexMatrix {
 public:
  static constexpr int kMaxDim = 8;

  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Complex& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const Complex& operator()(int r, int c) const { return data_[r * cols_ + c]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  /// Largest |A_ij - conj(A_ji)| together with the offending position.
  struct HermitianResidual {
    double value;
    int row;
    int col;
  };
  HermitianResidual hermitian_residual() const;
  bool is_hermitian(double tolerance) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex scalar) {
    return a *= scalar;
  }
  friend ComplexMatrix operator*(Complex scalar, ComplexMatrix a) {
    return a *= scalar;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Max entrywise |a_ij - b_ij|; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qchdist

#endif  // QCHDIST_COMPLEX_MATRIX_H

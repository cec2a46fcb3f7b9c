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

#include "qchdist/complex_matrix.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qchdist {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0 || rows > kMaxDim || cols > kMaxDim ||
      (rows == 0) != (cols == 0)) {
    throw std::invalid_argument("ComplexMatrix: invalid shape " +
                                std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  ComplexMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw std::invalid_argument("ComplexMatrix::from_rows: ragged rows");
    }
    int j = 0;
    for (const Complex& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("ComplexMatrix::trace: matrix not square");
  }
  Complex t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < rows_ * cols_; ++i) m = std::max(m, std::abs(data_[i]));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (int i = 0; i < rows_ * cols_; ++i) s += std::norm(data_[i]);
  return std::sqrt(s);
}

ComplexMatrix::HermitianResidual ComplexMatrix::hermitian_residual() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("hermitian_residual: matrix not square");
  }
  HermitianResidual res{0.0, 0, 0};
  for (int i = 0; i < rows_; ++i) {
    for (int j = i; j < cols_; ++j) {
      const double d = std::abs((*this)(i, j) - std::conj((*this)(j, i)));
      if (d > res.value) res = {d, i, j};
    }
  }
  return res;
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
  return rows_ == cols_ && hermitian_residual().value <= tolerance;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("ComplexMatrix: shape mismatch in +=");
  }
  for (int i = 0; i < rows_ * cols_; ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("ComplexMatrix: shape mismatch in -=");
  }
  for (int i = 0; i < rows_ * cols_; ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (int i = 0; i < rows_ * cols_; ++i) data_[i] *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("ComplexMatrix: shape mismatch in *");
  }
  ComplexMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (int j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
    }
  }
  return m;
}

}  // namespace qchdist

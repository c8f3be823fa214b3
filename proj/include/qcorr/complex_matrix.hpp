// Copyright 2026 The qcorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file complex_matrix.hpp
 * Dense complex matrix type used throughout the library.
 *
 * Storage is row major. Dimensions stay small (a few hundred at most),
 * so every operation is a plain loop; no blocking, no expression
 * templates. Numerical tolerances live at the call sites that own the
 * corresponding contract.
 */

#ifndef QCORR_COMPLEX_MATRIX_HPP
#define QCORR_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcorr {

using cplx = std::complex<double>;

/// Raised when an input value breaks a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Raised when an iterative routine fails to reach its stopping rule.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  cplx trace() const {
    require_square("trace");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Largest entry of |m - m^dagger|; 0 means exactly Hermitian.
  double hermiticity_defect() const {
    require_square("hermiticity_defect");
    double worst = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r; c < cols_; ++c)
        worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_shape(o, "+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_shape(o, "-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  ComplexMatrix& operator*=(cplx s) {
    for (cplx& v : data_) v *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_)
      throw ValidationError("matrix product: inner dimensions disagree (" +
                            std::to_string(a.cols_) + " vs " + std::to_string(b.rows_) + ")");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cplx ark = a(r, k);
        if (ark == cplx{0.0, 0.0}) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

 private:
  void require_square(const char* what) const {
    if (!is_square())
      throw ValidationError(std::string(what) + ": matrix is " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + ", expected square");
  }

  void require_same_shape(const ComplexMatrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ValidationError(std::string(what) + ": shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

/// Kronecker product; index of the right factor varies fastest.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const cplx v = a(ar, ac);
      if (v == cplx{0.0, 0.0}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
    }
  return out;
}

/// U m U^dagger, the similarity transform used for basis changes.
inline ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m) {
  return u * m * u.adjoint();
}

}  // namespace qcorr

#endif  // QCORR_COMPLEX_MATRIX_HPP

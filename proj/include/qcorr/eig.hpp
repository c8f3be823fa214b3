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
 * @file eig.hpp
 * Hermitian eigendecomposition by cyclic Jacobi rotations.
 *
 * The matrices here are tiny (dimension at most a few hundred), so the
 * quadratically convergent Jacobi iteration is accurate, dependency free,
 * and fast enough. Each sweep visits every off-diagonal pair once and
 * applies a complex plane rotation that annihilates it.
 */

#ifndef QCORR_EIG_HPP
#define QCORR_EIG_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  ///< Real, sorted descending.
  ComplexMatrix eigenvectors;       ///< Unitary; column k pairs with eigenvalues[k].
};

namespace detail {

/// Off-diagonal Frobenius norm, the Jacobi convergence measure.
inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace detail

/**
 * Eigendecomposition of a Hermitian matrix.
 *
 * The input is checked against `herm_tol` (largest entry of |m - m^dagger|)
 * and then symmetrized, so roundoff-level asymmetry never propagates.
 * Eigenvalues come back sorted descending with eigenvector columns
 * permuted to match.
 */
inline EigenDecomposition hermitian_eig(const ComplexMatrix& m, double herm_tol = 1e-10) {
  if (!m.is_square()) throw ValidationError("hermitian_eig: matrix is not square");
  const std::size_t n = m.rows();
  const double defect = m.hermiticity_defect();
  if (defect > herm_tol)
    throw ValidationError("hermitian_eig: input is not Hermitian (max |m - m^dagger| = " +
                          std::to_string(defect) + ")");

  // Symmetrize; afterwards a(r,c) == conj(a(c,r)) holds exactly.
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = cplx{m(r, r).real(), 0.0};
    for (std::size_t c = r + 1; c < n; ++c) {
      const cplx v = 0.5 * (m(r, c) + std::conj(m(c, r)));
      a(r, c) = v;
      a(c, r) = std::conj(v);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(a.frobenius_norm(), 1e-300);
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= 1e-14 * scale) break;
    if (sweep == kMaxSweeps - 1)
      throw ConvergenceError("hermitian_eig: Jacobi sweeps did not converge");

    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx w = a(p, q);
        const double r = std::abs(w);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Entries this far below the local diagonal scale cannot move
        // eigenvalues at working precision; flush them instead of rotating.
        if (r <= 1e-18 * (std::abs(app) + std::abs(aqq)) || r < 1e-300) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const cplx phase = w / r;
        // The rotation diag part is real: pick t = tan(theta) as the
        // smaller root of t^2 + 2*tau*t - 1 = 0, tau = (aqq - app) / (2r).
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx jpq = s * phase;               // J(p,q)
        const cplx jqp = -s * std::conj(phase);   // J(q,p)

        // a <- J^dagger a J, applied as column then row updates.
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          a(i, p) = c * aip + jqp * aiq;
          a(i, q) = jpq * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const cplx apj = a(p, j);
          const cplx aqj = a(q, j);
          a(p, j) = c * apj + std::conj(jqp) * aqj;
          a(q, j) = std::conj(jpq) * apj + c * aqj;
        }
        // The rotation annihilates this pair analytically; make it exact.
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx{a(p, p).real(), 0.0};
        a(q, q) = cplx{a(q, q).real(), 0.0};

        for (std::size_t i = 0; i < n; ++i) {
          const cplx vip = v(i, p);
          const cplx viq = v(i, q);
          v(i, p) = c * vip + jqp * viq;
          v(i, q) = jpq * vip + c * viq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

/**
 * Unitary generated by a Hermitian matrix: U = exp(i h).
 *
 * Computed through the eigendecomposition of h, so unitarity holds to
 * the accuracy of the eigenvector basis.
 */
inline ComplexMatrix unitary_from_generator(const ComplexMatrix& h, double herm_tol = 1e-10) {
  const EigenDecomposition eig = hermitian_eig(h, herm_tol);
  const std::size_t n = h.rows();
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      cplx sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const cplx ph = std::polar(1.0, eig.eigenvalues[k]);
        sum += eig.eigenvectors(r, k) * ph * std::conj(eig.eigenvectors(c, k));
      }
      out(r, c) = sum;
    }
  return out;
}

}  // namespace qcorr

#endif  // QCORR_EIG_HPP

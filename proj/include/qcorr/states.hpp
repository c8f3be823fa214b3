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
 * @file states.hpp
 * Quantum state containers and standard state families.
 *
 * DensityMatrix validates its defining properties on construction
 * (Hermitian within 1e-10, unit trace within 1e-10, smallest eigenvalue
 * above -1e-10), so downstream code can assume a well-formed state.
 * PureState enforces unit norm within 1e-10.
 */

#ifndef QCORR_STATES_HPP
#define QCORR_STATES_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/eig.hpp"
#include "qcorr/layout.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

/// Eigenvalues at or below this weight count as numerically absent
/// (rank decisions, purification truncation, measurement outcomes).
inline constexpr double kNullWeight = 1e-12;

class PureState {
 public:
  PureState(std::vector<cplx> amplitudes, SubsystemLayout layout)
      : amplitudes_(std::move(amplitudes)), layout_(std::move(layout)) {
    if (amplitudes_.size() != layout_.total_dim())
      throw ValidationError("pure state: " + std::to_string(amplitudes_.size()) +
                            " amplitudes for layout of total dimension " +
                            std::to_string(layout_.total_dim()));
    double n2 = 0.0;
    for (const cplx& a : amplitudes_) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > 1e-10)
      throw ValidationError("pure state: squared norm is " + std::to_string(n2) +
                            ", expected 1 within 1e-10");
  }

  const std::vector<cplx>& amplitudes() const { return amplitudes_; }
  const SubsystemLayout& layout() const { return layout_; }
  std::size_t dim() const { return amplitudes_.size(); }

  /// Fix the global phase: first amplitude above the null weight becomes
  /// real nonnegative. Keeps serialized output reproducible.
  PureState canonical_phase() const {
    std::vector<cplx> amps = amplitudes_;
    for (const cplx& a : amps) {
      const double mag = std::abs(a);
      if (mag > kNullWeight) {
        const cplx rot = std::conj(a) / mag;
        for (cplx& x : amps) x *= rot;
        break;
      }
    }
    return PureState(std::move(amps), layout_);
  }

 private:
  std::vector<cplx> amplitudes_;
  SubsystemLayout layout_;
};

class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, SubsystemLayout layout)
      : matrix_(std::move(matrix)), layout_(std::move(layout)) {
    if (!matrix_.is_square() || matrix_.rows() != layout_.total_dim())
      throw ValidationError("density matrix: matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + " but layout " + layout_.describe() +
                            " has total dimension " + std::to_string(layout_.total_dim()));
    const double defect = matrix_.hermiticity_defect();
    if (defect > 1e-10)
      throw ValidationError("density matrix: not Hermitian (max |m - m^dagger| = " +
                            std::to_string(defect) + ")");
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > 1e-10)
      throw ValidationError("density matrix: trace is " + std::to_string(tr) +
                            ", expected 1 within 1e-10");
    const EigenDecomposition eig = hermitian_eig(matrix_);
    const double lambda_min = eig.eigenvalues.back();
    if (lambda_min < -1e-10)
      throw ValidationError("density matrix: smallest eigenvalue is " +
                            std::to_string(lambda_min) + ", below -1e-10");
  }

  const ComplexMatrix& matrix() const { return matrix_; }
  const SubsystemLayout& layout() const { return layout_; }
  std::size_t dim() const { return matrix_.rows(); }

  double purity() const { return (matrix_ * matrix_).trace().real(); }

  DensityMatrix reduced(const std::vector<std::string>& keep) const {
    return DensityMatrix(partial_trace(matrix_, layout_, keep), reduced_layout(layout_, keep));
  }

 private:
  ComplexMatrix matrix_;
  SubsystemLayout layout_;
};

inline DensityMatrix from_pure(const PureState& psi) {
  const std::size_t d = psi.dim();
  ComplexMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      m(r, c) = psi.amplitudes()[r] * std::conj(psi.amplitudes()[c]);
  return DensityMatrix(std::move(m), psi.layout());
}

/**
 * Purification of rho on a fresh reference factor appended last.
 *
 * The reference dimension is the numerical rank of rho (eigenvalues above
 * the null weight), so pure inputs get a trivial 1-dimensional reference.
 * Tracing the reference out recovers rho; the global phase follows the
 * canonical convention.
 */
inline PureState purify(const DensityMatrix& rho, const std::string& ref_label) {
  if (rho.layout().has_label(ref_label))
    throw ValidationError("purify: label '" + ref_label + "' already in layout");
  const EigenDecomposition eig = hermitian_eig(rho.matrix());
  std::size_t rank = 0;
  while (rank < eig.eigenvalues.size() && eig.eigenvalues[rank] > kNullWeight) ++rank;
  if (rank == 0) throw ValidationError("purify: state has numerical rank 0");

  const std::size_t d = rho.dim();
  std::vector<cplx> amps(d * rank, cplx{0.0, 0.0});
  double kept = 0.0;
  for (std::size_t l = 0; l < rank; ++l) kept += eig.eigenvalues[l];
  const double renorm = 1.0 / std::sqrt(kept);
  for (std::size_t l = 0; l < rank; ++l) {
    const double w = std::sqrt(eig.eigenvalues[l]) * renorm;
    for (std::size_t i = 0; i < d; ++i) amps[i * rank + l] = w * eig.eigenvectors(i, l);
  }
  const SubsystemLayout layout =
      insert_factor_layout(rho.layout(), rho.layout().factor_count(), {ref_label, rank});
  return PureState(std::move(amps), layout).canonical_phase();
}

// ---------------------------------------------------------------------------
// Named state families
// ---------------------------------------------------------------------------

inline SubsystemLayout two_qubit_layout() {
  return SubsystemLayout({{"A", 2}, {"B", 2}});
}

/// (|00> + |11>)/sqrt(2) on qubits A, B.
inline PureState bell_ket() {
  const double r = 1.0 / std::sqrt(2.0);
  return PureState({r, 0.0, 0.0, r}, two_qubit_layout());
}

inline DensityMatrix bell_state() { return from_pure(bell_ket()); }

/// (|0...0> + |1...1>)/sqrt(2) on one qubit per label.
inline PureState ghz_ket(const std::vector<std::string>& labels = {"A", "B", "C"}) {
  if (labels.size() < 2) throw ValidationError("ghz: needs at least two factors");
  std::vector<Subsystem> parts;
  for (const std::string& l : labels) parts.push_back({l, 2});
  const SubsystemLayout layout{parts};
  std::vector<cplx> amps(layout.total_dim(), cplx{0.0, 0.0});
  const double r = 1.0 / std::sqrt(2.0);
  amps.front() = r;
  amps.back() = r;
  return PureState(std::move(amps), layout);
}

inline DensityMatrix ghz_state(const std::vector<std::string>& labels = {"A", "B", "C"}) {
  return from_pure(ghz_ket(labels));
}

/// p |Phi+><Phi+| + (1-p) I/4 on qubits A, B. Spectrum: (1+3p)/4 once,
/// (1-p)/4 three times.
inline DensityMatrix werner_state(double p) {
  if (p < 0.0 || p > 1.0)
    throw ValidationError("werner: mixing parameter " + std::to_string(p) + " outside [0, 1]");
  ComplexMatrix m = from_pure(bell_ket()).matrix() * cplx{p, 0.0};
  for (std::size_t i = 0; i < 4; ++i) m(i, i) += (1.0 - p) / 4.0;
  return DensityMatrix(std::move(m), two_qubit_layout());
}

namespace detail {

inline void validate_probabilities(const std::vector<double>& probs, const char* what) {
  if (probs.empty()) throw ValidationError(std::string(what) + ": empty probability list");
  double sum = 0.0;
  for (double p : probs) {
    if (p < -1e-12)
      throw ValidationError(std::string(what) + ": negative probability " + std::to_string(p));
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw ValidationError(std::string(what) + ": probabilities sum to " + std::to_string(sum) +
                          ", expected 1 within 1e-9");
}

/// Single-qubit state (I + b . sigma)/2 from a Bloch vector of length <= 1.
inline ComplexMatrix bloch_qubit(double bx, double by, double bz) {
  const double len = std::sqrt(bx * bx + by * by + bz * bz);
  if (len > 1.0 + 1e-12)
    throw ValidationError("bloch vector has length " + std::to_string(len) + ", above 1");
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + bz);
  m(1, 1) = 0.5 * (1.0 - bz);
  m(0, 1) = 0.5 * cplx{bx, -by};
  m(1, 0) = 0.5 * cplx{bx, by};
  return m;
}

}  // namespace detail

/// Classically correlated state sum_i p_i |ii><ii| on two d-level factors.
inline DensityMatrix classical_classical(const std::vector<double>& probs) {
  detail::validate_probabilities(probs, "classical_classical");
  const std::size_t d = probs.size();
  const SubsystemLayout layout({{"A", d}, {"B", d}});
  ComplexMatrix m(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) m(i * d + i, i * d + i) = std::max(probs[i], 0.0);
  return DensityMatrix(std::move(m), layout);
}

/// Classical-quantum state sum_i p_i |i><i|_A (x) rho(b_i)_B with qubit
/// conditional states given by Bloch vectors.
inline DensityMatrix classical_quantum(const std::vector<double>& probs,
                                       const std::vector<std::array<double, 3>>& blochs) {
  detail::validate_probabilities(probs, "classical_quantum");
  if (blochs.size() != probs.size())
    throw ValidationError("classical_quantum: " + std::to_string(probs.size()) +
                          " probabilities but " + std::to_string(blochs.size()) +
                          " Bloch vectors");
  const std::size_t d = probs.size();
  const SubsystemLayout layout({{"A", d}, {"B", 2}});
  ComplexMatrix m(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    const ComplexMatrix q = detail::bloch_qubit(blochs[i][0], blochs[i][1], blochs[i][2]);
    const double p = std::max(probs[i], 0.0);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) m(i * 2 + r, i * 2 + c) = p * q(r, c);
  }
  return DensityMatrix(std::move(m), layout);
}

/// Tensor product of two states; layouts are concatenated and must not
/// share labels.
inline DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<Subsystem> parts;
  for (std::size_t i = 0; i < a.layout().factor_count(); ++i) parts.push_back(a.layout().factor(i));
  for (std::size_t i = 0; i < b.layout().factor_count(); ++i) {
    if (a.layout().has_label(b.layout().factor(i).label))
      throw ValidationError("product_state: label '" + b.layout().factor(i).label +
                            "' appears in both factors");
    parts.push_back(b.layout().factor(i));
  }
  return DensityMatrix(kron(a.matrix(), b.matrix()), SubsystemLayout(parts));
}

/**
 * Family dispatcher used by file-less command line invocations. Parameter
 * conventions:
 *   bell, ghz          no parameters
 *   werner             p
 *   cc                 d outcome probabilities
 *   cq                 d probabilities, then d Bloch triples (x, y, z)
 *   product            two Bloch triples, one per qubit
 */
inline DensityMatrix named_family(const std::string& name, const std::vector<double>& params) {
  auto expect = [&](std::size_t n) {
    if (params.size() != n)
      throw ValidationError("family '" + name + "': expected " + std::to_string(n) +
                            " parameters, got " + std::to_string(params.size()));
  };
  if (name == "bell") {
    expect(0);
    return bell_state();
  }
  if (name == "ghz") {
    expect(0);
    return ghz_state();
  }
  if (name == "werner") {
    expect(1);
    return werner_state(params[0]);
  }
  if (name == "cc" || name == "classical_classical") {
    return classical_classical(params);
  }
  if (name == "cq" || name == "classical_quantum") {
    if (params.size() < 4 || params.size() % 4 != 0)
      throw ValidationError("family 'cq': expected d probabilities plus d Bloch triples");
    const std::size_t d = params.size() / 4;
    std::vector<double> probs(params.begin(), params.begin() + d);
    std::vector<std::array<double, 3>> blochs;
    for (std::size_t i = 0; i < d; ++i)
      blochs.push_back({params[d + 3 * i], params[d + 3 * i + 1], params[d + 3 * i + 2]});
    return classical_quantum(probs, blochs);
  }
  if (name == "product") {
    expect(6);
    const ComplexMatrix qa = detail::bloch_qubit(params[0], params[1], params[2]);
    const ComplexMatrix qb = detail::bloch_qubit(params[3], params[4], params[5]);
    return product_state(DensityMatrix(qa, SubsystemLayout({{"A", 2}})),
                         DensityMatrix(qb, SubsystemLayout({{"B", 2}})));
  }
  throw ValidationError("unknown state family '" + name +
                        "' (known: bell, ghz, werner, cc, cq, product)");
}

/**
 * Random density matrix of the given rank: G G^dagger normalized by its
 * trace, with G a layout.total_dim() x rank matrix of independent complex
 * Gaussians. Entries are drawn row-major, one complex normal per entry,
 * so the state is a bit-identical function of (seed, stream).
 */
inline DensityMatrix random_density(const SubsystemLayout& layout, std::size_t rank,
                                    std::uint64_t seed, std::uint64_t stream = 0) {
  const std::size_t d = layout.total_dim();
  if (rank == 0 || rank > d)
    throw ValidationError("random_density: rank " + std::to_string(rank) +
                          " outside [1, " + std::to_string(d) + "]");
  Rng rng(seed, stream);
  ComplexMatrix g(d, rank);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < rank; ++c) g(r, c) = rng.complex_normal();
  ComplexMatrix m = g * g.adjoint();
  const double tr = m.trace().real();
  m *= cplx{1.0 / tr, 0.0};
  return DensityMatrix(std::move(m), layout);
}

}  // namespace qcorr

#endif  // QCORR_STATES_HPP

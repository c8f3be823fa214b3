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
 * @file measurement.hpp
 * Local measurements, dephasing, and the measurement ancilla extension.
 *
 * The extension is the workhorse for every positivity statement in this
 * library: recording the measured basis index of factor B into a fresh
 * factor C turns measured conditional entropies into ordinary subsystem
 * entropies, where strong subadditivity applies. theorem1_report exposes
 * the four entropy identities behind that reduction, with residuals, so
 * the chain is checkable rather than assumed.
 */

#ifndef QCORR_MEASUREMENT_HPP
#define QCORR_MEASUREMENT_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/entropy.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/**
 * POVM on one named factor. Elements must be Hermitian, positive
 * semidefinite within 1e-10, and sum to the identity within 1e-9.
 */
struct Povm {
  std::vector<ComplexMatrix> elements;
  std::string subsystem;
};

inline void validate_povm(const Povm& povm, bool require_rank1 = false) {
  if (povm.elements.empty()) throw ValidationError("povm: no elements");
  const std::size_t d = povm.elements.front().rows();
  ComplexMatrix sum(d, d);
  for (std::size_t k = 0; k < povm.elements.size(); ++k) {
    const ComplexMatrix& e = povm.elements[k];
    if (!e.is_square() || e.rows() != d)
      throw ValidationError("povm: element " + std::to_string(k) + " has inconsistent shape");
    const double defect = e.hermiticity_defect();
    if (defect > 1e-10)
      throw ValidationError("povm: element " + std::to_string(k) +
                            " is not Hermitian (defect " + std::to_string(defect) + ")");
    const EigenDecomposition eig = hermitian_eig(e);
    if (eig.eigenvalues.back() < -1e-10)
      throw ValidationError("povm: element " + std::to_string(k) +
                            " has negative eigenvalue " + std::to_string(eig.eigenvalues.back()));
    if (require_rank1) {
      if (eig.eigenvalues.front() <= kNullWeight ||
          (eig.eigenvalues.size() > 1 && eig.eigenvalues[1] > 1e-9))
        throw ValidationError("povm: element " + std::to_string(k) +
                              " is not rank 1 (second eigenvalue " +
                              std::to_string(eig.eigenvalues.size() > 1 ? eig.eigenvalues[1]
                                                                        : 0.0) + ")");
    }
    sum += e;
  }
  const double dev = max_abs_diff(sum, ComplexMatrix::identity(d));
  if (dev > 1e-9)
    throw ValidationError("povm: elements sum to identity only within " + std::to_string(dev) +
                          ", tolerance 1e-9");
}

/// True when the POVM is a complete orthogonal rank-1 projective
/// measurement: d projectors with P_i P_j = delta_ij P_i within `tol`.
inline bool is_orthogonal_projective(const Povm& povm, double tol = 1e-9) {
  const std::size_t d = povm.elements.front().rows();
  if (povm.elements.size() != d) return false;
  for (std::size_t i = 0; i < d; ++i) {
    if (povm.elements[i].hermiticity_defect() > 1e-10) return false;
    for (std::size_t j = 0; j < d; ++j) {
      const ComplexMatrix prod = povm.elements[i] * povm.elements[j];
      const double dev = (i == j) ? max_abs_diff(prod, povm.elements[i]) : prod.max_abs();
      if (dev > tol) return false;
    }
  }
  ComplexMatrix sum(d, d);
  for (const ComplexMatrix& e : povm.elements) sum += e;
  return max_abs_diff(sum, ComplexMatrix::identity(d)) <= tol;
}

inline void require_orthogonal_projective(const Povm& povm, const char* what) {
  if (!is_orthogonal_projective(povm))
    throw ValidationError(std::string(what) +
                          ": measurement must be a complete orthogonal rank-1 basis");
}

/// Projectors onto the computational basis of a d-dimensional factor.
inline Povm computational_basis(std::size_t dim, const std::string& subsystem) {
  if (dim == 0) throw ValidationError("computational_basis: dimension 0");
  Povm povm;
  povm.subsystem = subsystem;
  for (std::size_t i = 0; i < dim; ++i) {
    ComplexMatrix p(dim, dim);
    p(i, i) = 1.0;
    povm.elements.push_back(std::move(p));
  }
  return povm;
}

/// Projectors onto the columns of a unitary (checked within 1e-9).
inline Povm basis_from_unitary(const ComplexMatrix& u, const std::string& subsystem) {
  if (!u.is_square()) throw ValidationError("basis_from_unitary: matrix is not square");
  const double dev = max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
  if (dev > 1e-9)
    throw ValidationError("basis_from_unitary: matrix is unitary only within " +
                          std::to_string(dev) + ", tolerance 1e-9");
  Povm povm;
  povm.subsystem = subsystem;
  for (std::size_t k = 0; k < u.cols(); ++k) {
    ComplexMatrix p(u.rows(), u.rows());
    for (std::size_t r = 0; r < u.rows(); ++r)
      for (std::size_t c = 0; c < u.rows(); ++c) p(r, c) = u(r, k) * std::conj(u(c, k));
    povm.elements.push_back(std::move(p));
  }
  return povm;
}

/**
 * One measurement outcome: its probability and the conditional state on
 * the unmeasured factors. Outcomes below the null weight carry probability
 * exactly 0 and a maximally mixed placeholder state.
 */
struct MeasurementOutcome {
  double probability = 0.0;
  DensityMatrix state;
};

struct MeasurementEnsemble {
  std::vector<MeasurementOutcome> outcomes;
  std::vector<double> probabilities() const {
    std::vector<double> p;
    p.reserve(outcomes.size());
    for (const MeasurementOutcome& o : outcomes) p.push_back(o.probability);
    return p;
  }
};

namespace detail {

inline DensityMatrix maximally_mixed(const SubsystemLayout& layout) {
  const std::size_t d = layout.total_dim();
  ComplexMatrix m = ComplexMatrix::identity(d);
  m *= cplx{1.0 / static_cast<double>(d), 0.0};
  return DensityMatrix(std::move(m), layout);
}

}  // namespace detail

/**
 * Measure one factor with a POVM. Outcome i has probability
 * tr(E_i rho) and conditional state tr_measured(E_i rho) / p_i on the
 * remaining factors.
 */
inline MeasurementEnsemble povm_outcomes(const DensityMatrix& rho, const Povm& povm) {
  validate_povm(povm);
  const std::size_t slot = rho.layout().require_index(povm.subsystem);
  if (povm.elements.front().rows() != rho.layout().factor(slot).dim)
    throw ValidationError("povm_outcomes: element dimension " +
                          std::to_string(povm.elements.front().rows()) +
                          " does not match factor '" + povm.subsystem + "' of dimension " +
                          std::to_string(rho.layout().factor(slot).dim));
  std::vector<std::string> keep;
  for (const std::string& l : rho.layout().labels())
    if (l != povm.subsystem) keep.push_back(l);
  if (keep.empty())
    throw ValidationError("povm_outcomes: measuring the only factor leaves no conditional state");
  const SubsystemLayout rest = reduced_layout(rho.layout(), keep);

  MeasurementEnsemble ens;
  for (const ComplexMatrix& e : povm.elements) {
    const ComplexMatrix lifted = embed_at(e, rho.layout(), povm.subsystem);
    ComplexMatrix weighted = partial_trace(lifted * rho.matrix(), rho.layout(), keep);
    const double p = weighted.trace().real();
    if (p < kNullWeight) {
      ens.outcomes.push_back({0.0, detail::maximally_mixed(rest)});
      continue;
    }
    weighted *= cplx{1.0 / p, 0.0};
    ens.outcomes.push_back({p, DensityMatrix(std::move(weighted), rest)});
  }
  return ens;
}

/// Average conditional entropy sum_i p_i S(rho_i) of the outcome ensemble.
inline double measured_conditional_entropy(const DensityMatrix& rho, const Povm& povm) {
  const MeasurementEnsemble ens = povm_outcomes(rho, povm);
  double h = 0.0;
  for (const MeasurementOutcome& o : ens.outcomes)
    if (o.probability > 0.0) h += o.probability * von_neumann_entropy(o.state);
  return h;
}

/// Remove coherences of one factor in the given orthogonal basis:
/// rho -> sum_j P_j rho P_j. Reduced states on the other factors are
/// unchanged.
inline DensityMatrix dephase(const DensityMatrix& rho, const Povm& basis) {
  require_orthogonal_projective(basis, "dephase");
  const std::size_t slot = rho.layout().require_index(basis.subsystem);
  if (basis.elements.front().rows() != rho.layout().factor(slot).dim)
    throw ValidationError("dephase: basis dimension does not match factor '" + basis.subsystem +
                          "'");
  ComplexMatrix out(rho.dim(), rho.dim());
  for (const ComplexMatrix& e : basis.elements) {
    const ComplexMatrix lifted = embed_at(e, rho.layout(), basis.subsystem);
    out += lifted * rho.matrix() * lifted;
  }
  return DensityMatrix(std::move(out), rho.layout());
}

/**
 * Record the measured basis index into a fresh factor appended last:
 *
 *   rho' = V rho V^dagger,  V = sum_j (P_j on the measured factor) (x) |j>_C
 *
 * V is an isometry, so purity is preserved. Tracing C out gives exactly
 * the dephased state; tracing the unmeasured factors out leaves the
 * measured marginal's entropy reachable as plain subsystem entropies.
 */
inline DensityMatrix ancilla_extension(const DensityMatrix& rho, const Povm& basis,
                                       const std::string& record_label) {
  require_orthogonal_projective(basis, "ancilla_extension");
  if (rho.layout().has_label(record_label))
    throw ValidationError("ancilla_extension: label '" + record_label + "' already in layout");
  const std::size_t slot = rho.layout().require_index(basis.subsystem);
  const std::size_t db = rho.layout().factor(slot).dim;
  if (basis.elements.front().rows() != db)
    throw ValidationError("ancilla_extension: basis dimension does not match factor '" +
                          basis.subsystem + "'");
  const std::size_t d = rho.dim();
  ComplexMatrix v(d * db, d);
  for (std::size_t j = 0; j < db; ++j) {
    const ComplexMatrix lifted = embed_at(basis.elements[j], rho.layout(), basis.subsystem);
    // kron with the column |j> of the record factor: row (i, j).
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) v(r * db + j, c) += lifted(r, c);
  }
  ComplexMatrix extended = v * rho.matrix() * v.adjoint();
  const SubsystemLayout layout = insert_factor_layout(
      rho.layout(), rho.layout().factor_count(), {record_label, db});
  return DensityMatrix(std::move(extended), layout);
}

/**
 * The entropy identities behind discord positivity, evaluated on one
 * (state, basis) pair with the measured factor called B, its complement A,
 * and the record factor C:
 *
 *   S(rho'_ABC) = S(rho_AB)                 (isometry)
 *   S(rho'_AB)  = H(p) + sum_j p_j S(A|j)   (block decomposition)
 *   S(rho'_BC)  = S(rho_B)                  (B'C' purifies against A)
 *   S(rho'_B)   = H(p)                      (dephased marginal)
 *
 * Feeding them into S(AB) + S(BC) >= S(ABC) + S(B) yields
 * sum_j p_j S(A|j) >= S(rho_AB) - S(rho_B), the measured conditional
 * entropy dominating the unmeasured one; equivalently, discord >= 0.
 */
struct Theorem1Report {
  double s_rho_ab = 0.0;   ///< S(rho_AB)
  double s_rho_b = 0.0;    ///< S(rho_B)
  double s_ext_abc = 0.0;  ///< S(rho'_ABC)
  double s_ext_ab = 0.0;   ///< S(rho'_AB)
  double s_ext_bc = 0.0;   ///< S(rho'_BC)
  double s_ext_b = 0.0;    ///< S(rho'_B)
  double s_p = 0.0;        ///< H(p), Shannon entropy of the outcome distribution
  double tilde_s = 0.0;    ///< sum_j p_j S(A|j)
  double ssa_slack = 0.0;  ///< S(AB) + S(BC) - S(ABC) - S(B) on the extension
  double residual_abc = 0.0;
  double residual_ab = 0.0;
  double residual_bc = 0.0;
  double residual_b = 0.0;
  double max_residual = 0.0;
  bool discord_lower_bound_ok = false;  ///< tilde_s >= S(A|B) - 1e-9
};

inline Theorem1Report theorem1_report(const DensityMatrix& rho, const Povm& basis) {
  require_orthogonal_projective(basis, "theorem1_report");
  const std::string& measured = basis.subsystem;
  std::vector<std::string> unmeasured;
  for (const std::string& l : rho.layout().labels())
    if (l != measured) unmeasured.push_back(l);
  if (unmeasured.empty()) throw ValidationError("theorem1_report: no unmeasured factor");

  std::string record = "__record";
  while (rho.layout().has_label(record)) record += "_";
  const DensityMatrix ext = ancilla_extension(rho, basis, record);

  Theorem1Report rep;
  rep.s_rho_ab = von_neumann_entropy(rho);
  rep.s_rho_b = subsystem_entropy(rho, {measured});
  rep.s_ext_abc = von_neumann_entropy(ext);
  std::vector<std::string> ab(unmeasured);
  ab.push_back(measured);
  rep.s_ext_ab = subsystem_entropy(ext, ab);
  rep.s_ext_bc = subsystem_entropy(ext, {measured, record});
  rep.s_ext_b = subsystem_entropy(ext, {measured});

  const MeasurementEnsemble ens = povm_outcomes(rho, basis);
  rep.s_p = shannon_entropy(ens.probabilities());
  rep.tilde_s = 0.0;
  for (const MeasurementOutcome& o : ens.outcomes)
    if (o.probability > 0.0) rep.tilde_s += o.probability * von_neumann_entropy(o.state);

  rep.ssa_slack = rep.s_ext_ab + rep.s_ext_bc - rep.s_ext_abc - rep.s_ext_b;
  rep.residual_abc = std::abs(rep.s_ext_abc - rep.s_rho_ab);
  rep.residual_ab = std::abs(rep.s_ext_ab - (rep.s_p + rep.tilde_s));
  rep.residual_bc = std::abs(rep.s_ext_bc - rep.s_rho_b);
  rep.residual_b = std::abs(rep.s_ext_b - rep.s_p);
  rep.max_residual = std::max({rep.residual_abc, rep.residual_ab, rep.residual_bc,
                               rep.residual_b});
  rep.discord_lower_bound_ok = rep.tilde_s >= (rep.s_rho_ab - rep.s_rho_b) - 1e-9;
  return rep;
}

}  // namespace qcorr

#endif  // QCORR_MEASUREMENT_HPP

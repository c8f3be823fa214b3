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
 * @file entropy.hpp
 * Entropic quantities for multipartite states.
 *
 * All logarithms are base 2; every entropy is in bits. Spectra are cleaned
 * before the logarithm: eigenvalues in (-1e-10, 0) flush to zero, anything
 * below -1e-10 is an error, and values marginally above 1 clamp to 1.
 */

#ifndef QCORR_ENTROPY_HPP
#define QCORR_ENTROPY_HPP

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "qcorr/eig.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Shannon entropy in bits. Probabilities must be nonnegative within 1e-12
/// and sum to 1 within 1e-9; zero entries contribute nothing.
inline double shannon_entropy(const std::vector<double>& probs) {
  detail::validate_probabilities(probs, "shannon_entropy");
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log2(p);
  return std::max(h, 0.0);
}

/// Entropy of a density matrix spectrum, with the cleaning rules above.
inline double entropy_of_eigenvalues(const std::vector<double>& eigenvalues) {
  double h = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -1e-10)
      throw ValidationError("entropy: eigenvalue " + std::to_string(lambda) + " below -1e-10");
    lambda = std::clamp(lambda, 0.0, 1.0);
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return std::max(h, 0.0);
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of_eigenvalues(hermitian_eig(rho.matrix()).eigenvalues);
}

/// Entropy of the reduced state on `keep`.
inline double subsystem_entropy(const DensityMatrix& rho, const std::vector<std::string>& keep) {
  return entropy_of_eigenvalues(
      hermitian_eig(partial_trace(rho.matrix(), rho.layout(), keep)).eigenvalues);
}

/**
 * Entropic profile of a bipartite cut (group_a | group_b). The two groups
 * must partition the layout labels.
 */
struct CorrelationReport {
  double s_a = 0.0;            ///< S(A)
  double s_b = 0.0;            ///< S(B)
  double s_ab = 0.0;           ///< S(AB)
  double mutual_info = 0.0;    ///< I(A:B) = S(A) + S(B) - S(AB)
  double cond_entropy = 0.0;   ///< S(A|B) = S(AB) - S(B)
  double coherent_info = 0.0;  ///< I(A>B) = -S(A|B)
};

namespace detail {

inline void require_partition(const SubsystemLayout& layout,
                              const std::vector<std::vector<std::string>>& groups,
                              const char* what) {
  std::size_t named = 0;
  for (const auto& g : groups) {
    if (g.empty()) throw ValidationError(std::string(what) + ": empty label group");
    for (const std::string& l : g) {
      if (!layout.has_label(l))
        throw ValidationError(std::string(what) + ": label '" + l + "' not in layout");
      ++named;
    }
  }
  if (named != layout.factor_count())
    throw ValidationError(std::string(what) +
                          ": label groups must partition the layout (each factor exactly once)");
  std::set<std::string> seen;
  for (const auto& g : groups)
    for (const std::string& l : g)
      if (!seen.insert(l).second)
        throw ValidationError(std::string(what) + ": label '" + l + "' listed twice");
}

}  // namespace detail

inline CorrelationReport correlation_report(const DensityMatrix& rho,
                                            const std::vector<std::string>& group_a,
                                            const std::vector<std::string>& group_b) {
  detail::require_partition(rho.layout(), {group_a, group_b}, "correlation_report");
  CorrelationReport rep;
  rep.s_a = subsystem_entropy(rho, group_a);
  rep.s_b = subsystem_entropy(rho, group_b);
  rep.s_ab = von_neumann_entropy(rho);
  rep.mutual_info = rep.s_a + rep.s_b - rep.s_ab;
  rep.cond_entropy = rep.s_ab - rep.s_b;
  rep.coherent_info = -rep.cond_entropy;
  return rep;
}

/**
 * Strong subadditivity slack S(AB) + S(BC) - S(ABC) - S(B) for the cut
 * (group_a | group_b | group_c). Nonnegative for every valid state, up to
 * eigensolver roundoff.
 */
inline double ssa_slack(const DensityMatrix& rho, const std::vector<std::string>& group_a,
                        const std::vector<std::string>& group_b,
                        const std::vector<std::string>& group_c) {
  detail::require_partition(rho.layout(), {group_a, group_b, group_c}, "ssa_slack");
  std::vector<std::string> ab(group_a);
  ab.insert(ab.end(), group_b.begin(), group_b.end());
  std::vector<std::string> bc(group_b);
  bc.insert(bc.end(), group_c.begin(), group_c.end());
  const double s_ab = subsystem_entropy(rho, ab);
  const double s_bc = subsystem_entropy(rho, bc);
  const double s_b = subsystem_entropy(rho, group_b);
  const double s_abc = von_neumann_entropy(rho);
  return s_ab + s_bc - s_abc - s_b;
}

}  // namespace qcorr

#endif  // QCORR_ENTROPY_HPP

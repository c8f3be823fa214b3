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
 * @file discord.hpp
 * Quantum discord by minimization over rank-1 measurements.
 *
 * D(A:B) = I(A:B) - [S(A) - min over bases of sum_j p_j S(A|j)], with the
 * measured factor named explicitly by the caller. The minimization runs a
 * multi-start Nelder-Mead simplex over generators of measurement bases;
 * discord_grid_oracle provides an independent brute-force check for
 * two-qubit states that shares no code with the optimizer's search path.
 */

#ifndef QCORR_DISCORD_HPP
#define QCORR_DISCORD_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/entropy.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

/// Real parameterization of a Hermitian d x d generator: d diagonal
/// entries, then (real, imag) pairs for the strict upper triangle in
/// row-major order. Length d^2.
inline ComplexMatrix hermitian_from_params(const std::vector<double>& p, std::size_t dim) {
  if (p.size() != dim * dim)
    throw ValidationError("hermitian_from_params: expected " + std::to_string(dim * dim) +
                          " parameters for dimension " + std::to_string(dim) + ", got " +
                          std::to_string(p.size()));
  ComplexMatrix h(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) h(i, i) = p[i];
  std::size_t k = dim;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r + 1; c < dim; ++c) {
      h(r, c) = cplx{p[k], p[k + 1]};
      h(c, r) = cplx{p[k], -p[k + 1]};
      k += 2;
    }
  return h;
}

/// Complete rank-1 orthogonal basis: projectors onto the columns of
/// exp(i H(p)).
inline Povm basis_from_params(const std::vector<double>& p, std::size_t dim,
                              const std::string& subsystem) {
  return basis_from_unitary(unitary_from_generator(hermitian_from_params(p, dim)), subsystem);
}

struct OptimizerConfig {
  std::size_t starts = 32;
  std::uint64_t seed = 0;
  std::size_t max_iterations = 2000;
  double objective_tol = 1e-9;     ///< stall threshold, in objective value
  std::size_t stall_window = 50;   ///< iterations without improvement to declare a stall
  bool neumark = false;            ///< search over an ancilla-dilated measured factor
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/**
 * Nelder-Mead simplex minimization. Convergence is declared when the best
 * objective has improved by less than `stall_tol` over the last
 * `stall_window` iterations; parameter movement is deliberately ignored
 * because flat directions are expected (degenerate measured marginals).
 */
template <typename F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> x0, std::size_t max_iterations,
                             double stall_tol, std::size_t stall_window,
                             double initial_step = 0.6) {
  const std::size_t n = x0.size();
  if (n == 0) throw ValidationError("nelder_mead: empty parameter vector");

  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += initial_step;
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  std::deque<double> best_history;
  NelderMeadResult res;

  for (res.iterations = 0; res.iterations < max_iterations; ++res.iterations) {
    // Order: index of best, worst, second worst.
    std::size_t lo = 0, hi = 0, nh = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (vals[i] < vals[lo]) lo = i;
      if (vals[i] > vals[hi]) hi = i;
    }
    nh = (hi == 0) ? 1 : 0;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != hi && vals[i] > vals[nh]) nh = i;

    best_history.push_back(vals[lo]);
    if (best_history.size() > stall_window + 1) best_history.pop_front();
    if (best_history.size() == stall_window + 1 &&
        best_history.front() - best_history.back() < stall_tol) {
      res.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == hi) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = centroid[k] + t * (pts[hi][k] - centroid[k]);
      return x;
    };

    const std::vector<double> xr = blend(-kReflect);
    const double fr = f(xr);
    if (fr < vals[lo]) {
      const std::vector<double> xe = blend(-kExpand);
      const double fe = f(xe);
      if (fe < fr) {
        pts[hi] = xe;
        vals[hi] = fe;
      } else {
        pts[hi] = xr;
        vals[hi] = fr;
      }
      continue;
    }
    if (fr < vals[nh]) {
      pts[hi] = xr;
      vals[hi] = fr;
      continue;
    }
    // Contraction: outside if the reflected point improved on the worst,
    // inside otherwise.
    const bool outside = fr < vals[hi];
    const std::vector<double> xc = blend(outside ? -kContract : kContract);
    const double fc = f(xc);
    if (fc < std::min(fr, vals[hi])) {
      pts[hi] = xc;
      vals[hi] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == lo) continue;
      for (std::size_t k = 0; k < n; ++k)
        pts[i][k] = pts[lo][k] + kShrink * (pts[i][k] - pts[lo][k]);
      vals[i] = f(pts[i]);
    }
  }

  std::size_t lo = 0;
  for (std::size_t i = 1; i <= vals.size() - 1; ++i)
    if (vals[i] < vals[lo]) lo = i;
  res.x = pts[lo];
  res.value = vals[lo];
  return res;
}

struct DiscordResult {
  double discord = 0.0;
  double classical_corr = 0.0;  ///< J = S(unmeasured) - tilde_s_min
  double mutual_info = 0.0;
  double s_unmeasured = 0.0;
  double tilde_s_min = 0.0;
  Povm optimal_basis;                        ///< lives on the (possibly dilated) measured factor
  std::vector<double> optimal_params;
  std::size_t starts = 0;
  std::vector<double> best_objective_history;  ///< running best after each start
  bool converged = false;                      ///< the winning start stalled out
  std::size_t iterations = 0;                  ///< iterations of the winning start
};

namespace detail {

/// Append a |0><0| ancilla of the measured factor's dimension and fuse it
/// into that factor, so projective bases on the enlarged factor realize
/// dilated rank-1 measurements of the original one.
inline DensityMatrix dilate_measured_factor(const DensityMatrix& rho,
                                            const std::string& measured) {
  const std::size_t slot = rho.layout().require_index(measured);
  const std::size_t db = rho.layout().factor(slot).dim;
  ComplexMatrix enlarged = insert_pure_factor(rho.matrix(), rho.layout(), slot + 1, db);
  SubsystemLayout with_anc =
      insert_factor_layout(rho.layout(), slot + 1, {"__dilation", db});
  return DensityMatrix(std::move(enlarged), fuse_adjacent(with_anc, slot, measured));
}

}  // namespace detail

/**
 * Minimized discord with measurement on `measured`. Deterministic for a
 * fixed cfg: start k draws its simplex seed from stream k of cfg.seed.
 */
inline DiscordResult discord(const DensityMatrix& rho, const std::string& measured,
                             const OptimizerConfig& cfg = {}) {
  if (rho.layout().factor_count() < 2)
    throw ValidationError("discord: layout " + rho.layout().describe() + " is not bipartite");
  if (!rho.layout().has_label(measured))
    throw ValidationError("discord: no factor labeled '" + measured + "'");
  if (cfg.starts == 0) throw ValidationError("discord: starts must be positive");

  const DensityMatrix work = cfg.neumark ? detail::dilate_measured_factor(rho, measured) : rho;
  std::vector<std::string> unmeasured;
  for (const std::string& l : work.layout().labels())
    if (l != measured) unmeasured.push_back(l);
  const CorrelationReport rep = correlation_report(work, unmeasured, {measured});

  const std::size_t d = work.layout().factor(work.layout().require_index(measured)).dim;
  const std::size_t nparams = d * d;
  auto objective = [&](const std::vector<double>& x) {
    return measured_conditional_entropy(work, basis_from_params(x, d, measured));
  };

  DiscordResult out;
  out.starts = cfg.starts;
  bool have_best = false;
  NelderMeadResult best;
  for (std::size_t k = 0; k < cfg.starts; ++k) {
    Rng rng(cfg.seed, k);
    std::vector<double> x0(nparams);
    for (double& v : x0) v = rng.uniform(-3.14159265358979323846, 3.14159265358979323846);
    NelderMeadResult r = nelder_mead(objective, std::move(x0), cfg.max_iterations,
                                     cfg.objective_tol, cfg.stall_window);
    if (!have_best || r.value < best.value) {
      best = std::move(r);
      have_best = true;
    }
    out.best_objective_history.push_back(best.value);
  }

  out.tilde_s_min = best.value;
  out.s_unmeasured = rep.s_a;
  out.mutual_info = rep.mutual_info;
  out.classical_corr = rep.s_a - out.tilde_s_min;
  out.discord = out.mutual_info - out.classical_corr;
  out.optimal_params = best.x;
  out.optimal_basis = basis_from_params(best.x, d, measured);
  out.converged = best.converged;
  out.iterations = best.iterations;
  return out;
}

/// Discord for one fixed complete rank-1 orthogonal basis (no
/// minimization): I(A:B) - [S(unmeasured) - tilde_S_basis].
inline double fixed_basis_discord(const DensityMatrix& rho, const Povm& basis) {
  require_orthogonal_projective(basis, "fixed_basis_discord");
  std::vector<std::string> unmeasured;
  for (const std::string& l : rho.layout().labels())
    if (l != basis.subsystem) unmeasured.push_back(l);
  if (unmeasured.empty()) throw ValidationError("fixed_basis_discord: no unmeasured factor");
  const CorrelationReport rep = correlation_report(rho, unmeasured, {basis.subsystem});
  const double tilde_s = measured_conditional_entropy(rho, basis);
  return rep.mutual_info - (rep.s_a - tilde_s);
}

namespace detail {

/// Entropy of a 2x2 Hermitian block given diagonal entries and the
/// off-diagonal element; eigenvalues clamped to [0, 1].
inline double two_level_entropy(double a, double b, cplx w) {
  const double mean = 0.5 * (a + b);
  const double dev = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(w));
  double h = 0.0;
  for (double lambda : {mean + dev, mean - dev}) {
    lambda = std::clamp(lambda, 0.0, 1.0);
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return h;
}

}  // namespace detail

/**
 * Brute-force discord for two-qubit states: exhaustive scan over projective
 * qubit measurements n(theta, phi) = (cos(theta/2), e^{i phi} sin(theta/2)),
 * theta in [0, pi/2] (the other hemisphere repeats the same projector pair),
 * phi in [0, 2 pi).
 *
 * The grid has n_theta intervals in theta (both endpoints included) and
 * n_phi points in phi, so refining either count by an integer factor keeps
 * every old grid point; the returned minimum is monotone nonincreasing
 * under such refinement. The per-point evaluation is closed form and
 * independent of the optimizer's measurement plumbing.
 */
inline double discord_grid_oracle(const DensityMatrix& rho, const std::string& measured,
                                  std::size_t n_theta, std::size_t n_phi) {
  const std::size_t slot = rho.layout().require_index(measured);
  if (rho.layout().factor(slot).dim != 2)
    throw ValidationError("discord_grid_oracle: measured factor is not a qubit");
  if (rho.dim() != 4)
    throw ValidationError("discord_grid_oracle: supported on 2x2 bipartite states only");
  if (n_theta == 0 || n_phi == 0)
    throw ValidationError("discord_grid_oracle: resolution must be positive");

  std::vector<std::string> unmeasured;
  for (const std::string& l : rho.layout().labels())
    if (l != measured) unmeasured.push_back(l);
  const CorrelationReport rep = correlation_report(rho, unmeasured, {measured});

  const std::size_t sm = rho.layout().stride(slot);          // measured factor stride
  const std::size_t sk = (sm == 1) ? 2 : 1;                  // kept factor stride
  const ComplexMatrix& m = rho.matrix();
  auto flat = [&](std::size_t a, std::size_t b) { return a * sk + b * sm; };

  const double pi = 3.14159265358979323846;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it <= n_theta; ++it) {
    const double theta = (pi / 2.0) * static_cast<double>(it) / static_cast<double>(n_theta);
    const double cc = std::cos(theta / 2.0);
    const double ss = std::sin(theta / 2.0);
    for (std::size_t ip = 0; ip < n_phi; ++ip) {
      const double phi = 2.0 * pi * static_cast<double>(ip) / static_cast<double>(n_phi);
      const cplx e = std::polar(1.0, phi);
      // Orthogonal pair: n0 = (cc, e ss), n1 = (ss, -e cc).
      const cplx n0[2] = {cc, e * ss};
      const cplx n1[2] = {ss, -e * cc};
      double tilde = 0.0;
      for (const cplx* n : {n0, n1}) {
        cplx m00 = 0.0, m11 = 0.0, m01 = 0.0;
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t bp = 0; bp < 2; ++bp) {
            const cplx w = std::conj(n[b]) * n[bp];
            m00 += w * m(flat(0, b), flat(0, bp));
            m11 += w * m(flat(1, b), flat(1, bp));
            m01 += w * m(flat(0, b), flat(1, bp));
          }
        const double p = m00.real() + m11.real();
        if (p < 1e-15) continue;
        tilde += p * detail::two_level_entropy(m00.real() / p, m11.real() / p, m01 / p);
      }
      const double d = rep.mutual_info - (rep.s_a - tilde);
      best = std::min(best, d);
    }
  }
  return best;
}

}  // namespace qcorr

#endif  // QCORR_DISCORD_HPP

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
 * @file protocols.hpp
 * Entropic resource budgets for the fully quantum Slepian-Wolf (mother)
 * protocol, its decohered variant, and the derived children: state
 * merging, dense coding, entanglement distillation.
 *
 * Every decohered budget is computed from one shared dephasing analysis,
 * so the cross-protocol loss identities hold exactly (the same doubles),
 * not merely within tolerance. Decoherence of factor B is modeled by the
 * measurement ancilla extension; the reference factor R is untouched by
 * it, which is what makes the environment-side quantities I(A':R') and
 * S(A') basis-independent. Both are recomputed from the extended state
 * rather than assumed, so the invariance is a checked identity.
 */

#ifndef QCORR_PROTOCOLS_HPP
#define QCORR_PROTOCOLS_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/discord.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/measurement.hpp"

namespace qcorr {

/**
 * Rates are per protocol copy. qubit_channel_rate and cbit_channel_rate
 * are communication consumed (negative qubit rate: merging distills that
 * many ebits instead). ebit_rate is entanglement yielded (negative:
 * consumed).
 */
struct ProtocolBudget {
  std::string protocol;
  double qubit_channel_rate = 0.0;
  double cbit_channel_rate = 0.0;
  double ebit_rate = 0.0;
  std::string notes;
};

struct DecoherenceComparison {
  ProtocolBudget before;
  ProtocolBudget after;
  double loss = 0.0;                     ///< per-protocol loss, bits or ebits per copy
  double equals_discord_residual = 0.0;  ///< loss - reference discord
  double discord_reference = 0.0;        ///< the discord value compared against
  double env_mutual_before = 0.0;        ///< I(A:R) where a reference exists, else 0
  double env_mutual_after = 0.0;         ///< I(A':R')
  double s_a_before = 0.0;               ///< S(A)
  double s_a_after = 0.0;                ///< S(A')
};

namespace detail {

inline std::string fresh_label(const SubsystemLayout& layout, const std::string& base) {
  std::string label = base;
  while (layout.has_label(label)) label += "'";
  return label;
}

inline void require_mother_labels(const PureState& psi) {
  const SubsystemLayout& l = psi.layout();
  if (l.factor_count() != 3 || !l.has_label("A") || !l.has_label("B") || !l.has_label("R"))
    throw ValidationError("protocol: expected a pure state on factors A, B, R; layout is " +
                          l.describe());
}

/// Entropic profile of one (state, basis) dephasing event across the cut
/// unmeasured | measured. All decohered budgets read from this one struct.
struct DephasingAnalysis {
  std::vector<std::string> unmeasured;
  std::string measured;
  CorrelationReport before;
  CorrelationReport after;
  DensityMatrix dephased;
};

inline DephasingAnalysis analyze_dephasing(const DensityMatrix& rho, const Povm& basis) {
  require_orthogonal_projective(basis, "protocol dephasing");
  DephasingAnalysis out{{}, basis.subsystem, {}, {}, dephase(rho, basis)};
  for (const std::string& l : rho.layout().labels())
    if (l != basis.subsystem) out.unmeasured.push_back(l);
  if (out.unmeasured.empty())
    throw ValidationError("protocol dephasing: no unmeasured factor");
  out.before = correlation_report(rho, out.unmeasured, {out.measured});
  out.after = correlation_report(out.dephased, out.unmeasured, {out.measured});
  return out;
}

/// I(unmeasured : R) on the extension of the purified state, i.e. the
/// environment-side mutual information after decoherence. The extension
/// acts on B and the record factor only, so this must reproduce the
/// pre-decoherence I(unmeasured : R); callers surface both values.
inline double env_mutual_after_decoherence(const DensityMatrix& rho_full, const Povm& basis,
                                           const std::vector<std::string>& unmeasured,
                                           const std::string& ref_label) {
  const std::string record = fresh_label(rho_full.layout(), "C");
  const DensityMatrix ext = ancilla_extension(rho_full, basis, record);
  std::vector<std::string> keep(unmeasured);
  keep.push_back(ref_label);
  const DensityMatrix marginal = ext.reduced(keep);
  return correlation_report(marginal, unmeasured, {ref_label}).mutual_info;
}

}  // namespace detail

/**
 * Mother protocol budget: transferring A's share of a pure tripartite
 * state to the B side costs 1/2 I(A:R) qubit channels per copy and yields
 * 1/2 I(A:B) ebits per copy.
 */
inline ProtocolBudget mother_budget(const PureState& psi) {
  detail::require_mother_labels(psi);
  const DensityMatrix rho = from_pure(psi);
  const double i_ar = correlation_report(rho.reduced({"A", "R"}), {"A"}, {"R"}).mutual_info;
  const double i_ab = correlation_report(rho.reduced({"A", "B"}), {"A"}, {"B"}).mutual_info;
  ProtocolBudget b;
  b.protocol = "mother";
  b.qubit_channel_rate = 0.5 * i_ar;
  b.ebit_rate = 0.5 * i_ab;
  b.notes = "qubit rate consumed, ebit rate yielded";
  return b;
}

namespace detail {

inline DecoherenceComparison fqswd_core(const PureState& psi, const Povm& basis,
                                        double discord_reference) {
  require_mother_labels(psi);
  if (basis.subsystem != "B")
    throw ValidationError("fqswd_budget: decoherence acts on factor B, basis is on '" +
                          basis.subsystem + "'");
  const DensityMatrix rho_full = from_pure(psi);
  const DensityMatrix rho_ab = rho_full.reduced({"A", "B"});
  const DephasingAnalysis cut = analyze_dephasing(rho_ab, basis);

  DecoherenceComparison cmp;
  cmp.before = mother_budget(psi);
  cmp.env_mutual_before =
      correlation_report(rho_full.reduced({"A", "R"}), {"A"}, {"R"}).mutual_info;
  cmp.env_mutual_after = env_mutual_after_decoherence(rho_full, basis, {"A"}, "R");
  cmp.after.protocol = "fqswd";
  cmp.after.qubit_channel_rate = 0.5 * cmp.env_mutual_after;
  cmp.after.ebit_rate = 0.5 * cut.after.mutual_info;
  cmp.after.notes = "qubit rate consumed, ebit rate yielded; B dephased";
  cmp.loss = cut.before.mutual_info - cut.after.mutual_info;
  cmp.discord_reference = discord_reference;
  cmp.equals_discord_residual = cmp.loss - discord_reference;
  cmp.s_a_before = cut.before.s_a;
  cmp.s_a_after = cut.after.s_a;
  return cmp;
}

}  // namespace detail

/// Decohered mother protocol with a fixed basis on B. The loss
/// I(A:B) - I(A':B') is compared against the fixed-basis discord.
inline DecoherenceComparison fqswd_budget(const PureState& psi, const Povm& basis) {
  detail::require_mother_labels(psi);
  const DensityMatrix rho_ab = from_pure(psi).reduced({"A", "B"});
  return detail::fqswd_core(psi, basis, fixed_basis_discord(rho_ab, basis));
}

/// Decohered mother protocol at the optimized basis: the loss is compared
/// against the minimized discord of the A|B marginal.
inline DecoherenceComparison fqswd_budget(const PureState& psi, const OptimizerConfig& cfg) {
  detail::require_mother_labels(psi);
  if (cfg.neumark)
    throw ValidationError("fqswd_budget: dephasing needs a projective basis; disable neumark");
  const DensityMatrix rho_ab = from_pure(psi).reduced({"A", "B"});
  const DiscordResult d = discord(rho_ab, "B", cfg);
  return detail::fqswd_core(psi, d.optimal_basis, d.discord);
}

/**
 * State merging budget for a bipartite state (first factor merged toward
 * the second): qubit cost S(first|second), classical cost I(first:second),
 * negative qubit cost meaning that many ebits are distilled instead.
 */
inline ProtocolBudget merging_budget(const DensityMatrix& rho) {
  if (rho.layout().factor_count() != 2)
    throw ValidationError("merging_budget: layout " + rho.layout().describe() +
                          " must have exactly two factors");
  const std::string a = rho.layout().factor(0).label;
  const std::string b = rho.layout().factor(1).label;
  const CorrelationReport rep = correlation_report(rho, {a}, {b});
  ProtocolBudget out;
  out.protocol = "qsm";
  out.qubit_channel_rate = rep.cond_entropy;
  out.cbit_channel_rate = rep.mutual_info;
  out.notes = "qubit and cbit rates consumed; negative qubit rate = ebits distilled";
  return out;
}

namespace detail {

inline DecoherenceComparison merging_markup_core(const DensityMatrix& rho, const Povm& basis,
                                                 double discord_reference) {
  const DephasingAnalysis cut = analyze_dephasing(rho, basis);
  DecoherenceComparison cmp;
  cmp.before.protocol = "qsm";
  cmp.before.qubit_channel_rate = cut.before.cond_entropy;
  cmp.before.cbit_channel_rate = cut.before.mutual_info;
  cmp.before.notes = "qubit and cbit rates consumed; negative qubit rate = ebits distilled";
  cmp.after = cmp.before;
  cmp.after.qubit_channel_rate = cut.after.cond_entropy;
  cmp.after.cbit_channel_rate = cut.after.mutual_info;
  cmp.after.notes += "; measured factor dephased";
  cmp.loss = cut.after.cond_entropy - cut.before.cond_entropy;
  cmp.discord_reference = discord_reference;
  cmp.equals_discord_residual = cmp.loss - discord_reference;
  cmp.s_a_before = cut.before.s_a;
  cmp.s_a_after = cut.after.s_a;
  return cmp;
}

inline DecoherenceComparison dense_coding_core(const DensityMatrix& rho, const Povm& basis,
                                               double discord_reference) {
  const DephasingAnalysis cut = analyze_dephasing(rho, basis);
  DecoherenceComparison cmp;
  cmp.before.protocol = "sdc";
  cmp.before.qubit_channel_rate = cut.before.s_a;
  cmp.before.cbit_channel_rate = cut.before.mutual_info;
  cmp.before.notes = "qubit rate consumed, cbit rate yielded";
  cmp.after = cmp.before;
  cmp.after.qubit_channel_rate = cut.after.s_a;
  cmp.after.cbit_channel_rate = cut.after.mutual_info;
  cmp.after.notes += "; receiver side dephased";
  cmp.loss = cut.before.mutual_info - cut.after.mutual_info;
  cmp.discord_reference = discord_reference;
  cmp.equals_discord_residual = cmp.loss - discord_reference;
  cmp.s_a_before = cut.before.s_a;
  cmp.s_a_after = cut.after.s_a;
  return cmp;
}

inline DecoherenceComparison distillation_core(const DensityMatrix& rho, const Povm& basis,
                                               double discord_reference) {
  const DephasingAnalysis cut = analyze_dephasing(rho, basis);
  const std::string ref = fresh_label(rho.layout(), "R");
  const DensityMatrix rho_full = from_pure(purify(rho, ref));
  std::vector<std::string> env_keep(cut.unmeasured);
  env_keep.push_back(ref);
  const double i_ur = correlation_report(rho_full.reduced(env_keep), cut.unmeasured, {ref})
                          .mutual_info;
  const double i_ur_after =
      env_mutual_after_decoherence(rho_full, basis, cut.unmeasured, ref);

  DecoherenceComparison cmp;
  cmp.before.protocol = "ed";
  cmp.before.ebit_rate = cut.before.coherent_info;
  cmp.before.cbit_channel_rate = i_ur;
  cmp.before.notes = "cbit rate consumed, ebit rate yielded";
  cmp.after = cmp.before;
  cmp.after.ebit_rate = cut.after.coherent_info;
  cmp.after.cbit_channel_rate = i_ur_after;
  cmp.after.notes += "; measured factor dephased";
  cmp.loss = cut.after.cond_entropy - cut.before.cond_entropy;
  cmp.discord_reference = discord_reference;
  cmp.equals_discord_residual = cmp.loss - discord_reference;
  cmp.env_mutual_before = i_ur;
  cmp.env_mutual_after = i_ur_after;
  cmp.s_a_before = cut.before.s_a;
  cmp.s_a_after = cut.after.s_a;
  return cmp;
}

template <typename Core>
DecoherenceComparison optimize_then(Core&& core, const DensityMatrix& rho,
                                    const std::string& measured, const OptimizerConfig& cfg) {
  if (cfg.neumark)
    throw ValidationError("protocol analysis: dephasing needs a projective basis; disable "
                          "neumark");
  const DiscordResult d = discord(rho, measured, cfg);
  return core(rho, d.optimal_basis, d.discord);
}

}  // namespace detail

/// Merging cost markup caused by dephasing the measured factor:
/// S(A'|B') - S(A|B), compared against the fixed-basis discord.
inline DecoherenceComparison merging_markup(const DensityMatrix& rho, const Povm& basis) {
  return detail::merging_markup_core(rho, basis, fixed_basis_discord(rho, basis));
}

/// Merging markup at the optimized basis, compared against minimized
/// discord (measurement on `measured`, the second factor by default).
inline DecoherenceComparison merging_markup(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                            const std::string& measured = "B") {
  return detail::optimize_then(detail::merging_markup_core, rho, measured, cfg);
}

/// Classical-capacity loss of dense coding under receiver-side dephasing:
/// I(A:B) - I(A':B'). The qubit cost S(A) must be unchanged; both values
/// are reported.
inline DecoherenceComparison dense_coding_loss(const DensityMatrix& rho, const Povm& basis) {
  return detail::dense_coding_core(rho, basis, fixed_basis_discord(rho, basis));
}

inline DecoherenceComparison dense_coding_loss(const DensityMatrix& rho,
                                               const OptimizerConfig& cfg,
                                               const std::string& measured = "B") {
  return detail::optimize_then(detail::dense_coding_core, rho, measured, cfg);
}

/// Distillable-entanglement loss under dephasing: coherent information
/// I(A>B) drops to I(A'>B'); the classical side cost I(A:R) is verified
/// unchanged on the purification.
inline DecoherenceComparison distillation_loss(const DensityMatrix& rho, const Povm& basis) {
  return detail::distillation_core(rho, basis, fixed_basis_discord(rho, basis));
}

inline DecoherenceComparison distillation_loss(const DensityMatrix& rho,
                                               const OptimizerConfig& cfg,
                                               const std::string& measured = "B") {
  return detail::optimize_then(detail::distillation_core, rho, measured, cfg);
}

}  // namespace qcorr

#endif  // QCORR_PROTOCOLS_HPP

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

// Acceptance gate: one line per criterion, exit 1 on any failure.
//
//   C1 discord positivity on 1000 random two-qubit states
//   C2 strong subadditivity on 1000 random three-qubit states
//   C3 the four entropy identities plus the slack identity, 500 pairs
//   C4 fqswd/merging/dense-coding/distillation losses vs discord, 200 states
//   C5 bell-state anchors
//   C6 optimizer vs the 400x800 measurement grid on the werner family
//   C7 resource-calculus merging derivation plus strength truth table
//   C8 environment-side invariance on the C4 sweep

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "qcorr/qcorr.hpp"

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

class Criterion {
 public:
  explicit Criterion(const char* name) : name_(name), start_(clock::now()) {}

  void finish(bool ok, const std::string& detail) {
    const double secs =
        std::chrono::duration<double>(clock::now() - start_).count();
    std::printf("[%s] %s: %s [%.1f s]\n", ok ? "PASS" : "FAIL", name_, detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++g_failures;
  }

 private:
  using clock = std::chrono::steady_clock;
  const char* name_;
  clock::time_point start_;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

void c1_discord_positivity() {
  Criterion c("C1 discord positivity");
  qcorr::OptimizerConfig cfg;
  cfg.starts = 8;
  cfg.seed = kSeed;
  double min_discord = std::numeric_limits<double>::infinity();
  for (std::uint64_t t = 0; t < 1000; ++t) {
    qcorr::Rng aux(kSeed, 2 * t);
    const std::size_t rank = 1 + aux.uniform_int(4);
    const qcorr::DensityMatrix rho =
        qcorr::random_density(qcorr::two_qubit_layout(), rank, kSeed, 2 * t + 1);
    min_discord = std::min(min_discord, qcorr::discord(rho, "B", cfg).discord);
  }
  c.finish(min_discord >= -1e-6,
           "1000 random two-qubit states, min discord = " + fmt(min_discord) +
               " (bound -1e-6)");
}

void c2_ssa() {
  Criterion c("C2 strong subadditivity");
  const qcorr::SubsystemLayout layout({{"A", 2}, {"B", 2}, {"C", 2}});
  double min_slack = std::numeric_limits<double>::infinity();
  for (std::uint64_t t = 0; t < 1000; ++t) {
    qcorr::Rng aux(kSeed, 2 * t);
    const std::size_t rank = 1 + aux.uniform_int(8);
    const qcorr::DensityMatrix rho = qcorr::random_density(layout, rank, kSeed, 2 * t + 1);
    min_slack = std::min(min_slack, qcorr::ssa_slack(rho, {"A"}, {"B"}, {"C"}));
  }
  c.finish(min_slack >= -1e-9,
           "1000 random three-qubit states, min slack = " + fmt(min_slack) +
               " (bound -1e-9)");
}

void c3_identities() {
  Criterion c("C3 extension identities");
  double worst = 0.0;
  bool lower_bound_ok = true;
  for (std::uint64_t t = 0; t < 500; ++t) {
    qcorr::Rng aux(kSeed, 2 * t);
    const std::size_t rank = 1 + aux.uniform_int(4);
    std::vector<double> params(4);
    for (double& p : params) p = aux.uniform(-kPi, kPi);
    const qcorr::DensityMatrix rho =
        qcorr::random_density(qcorr::two_qubit_layout(), rank, kSeed, 2 * t + 1);
    const qcorr::Theorem1Report rep =
        qcorr::theorem1_report(rho, qcorr::basis_from_params(params, 2, "B"));
    const double slack_residual =
        std::abs(rep.ssa_slack - (rep.tilde_s - (rep.s_rho_ab - rep.s_rho_b)));
    worst = std::max({worst, rep.max_residual, slack_residual});
    lower_bound_ok = lower_bound_ok && rep.discord_lower_bound_ok;
  }
  c.finish(worst <= 1e-9 && lower_bound_ok,
           "500 (state, basis) pairs, worst identity residual = " + fmt(worst) +
               " (bound 1e-9)");
}

void c4_and_c8_losses() {
  Criterion c4("C4 loss equals discord");
  double worst_pair = 0.0, worst_vs_discord = 0.0;
  double worst_env = 0.0, worst_sa = 0.0;
  qcorr::OptimizerConfig cfg;
  cfg.starts = 32;
  cfg.seed = kSeed;
  for (std::uint64_t t = 0; t < 200; ++t) {
    qcorr::Rng aux(kSeed, 2 * t);
    const std::size_t rank = 1 + aux.uniform_int(4);
    const qcorr::DensityMatrix rho =
        qcorr::random_density(qcorr::two_qubit_layout(), rank, kSeed, 2 * t + 1);
    const qcorr::DiscordResult res = qcorr::discord(rho, "B", cfg);
    const qcorr::Povm& basis = res.optimal_basis;

    const qcorr::DecoherenceComparison ed = qcorr::distillation_loss(rho, basis);
    const double losses[4] = {
        qcorr::fqswd_budget(qcorr::purify(rho, "R"), basis).loss,
        qcorr::merging_markup(rho, basis).loss,
        qcorr::dense_coding_loss(rho, basis).loss,
        ed.loss,
    };
    for (int i = 0; i < 4; ++i) {
      worst_vs_discord = std::max(worst_vs_discord, std::abs(losses[i] - res.discord));
      for (int j = i + 1; j < 4; ++j)
        worst_pair = std::max(worst_pair, std::abs(losses[i] - losses[j]));
    }
    worst_env = std::max(worst_env, std::abs(ed.env_mutual_after - ed.env_mutual_before));
    worst_sa = std::max(worst_sa, std::abs(ed.s_a_after - ed.s_a_before));
  }
  c4.finish(worst_pair <= 1e-10 && worst_vs_discord <= 1e-5,
            "200 states, losses pairwise within " + fmt(worst_pair) +
                " (bound 1e-10), vs discord within " + fmt(worst_vs_discord) +
                " (bound 1e-5)");

  Criterion c8("C8 environment invariance");
  c8.finish(worst_env <= 1e-9 && worst_sa <= 1e-9,
            "same sweep, |I(A':R') - I(A:R)| within " + fmt(worst_env) +
                ", |S(A') - S(A)| within " + fmt(worst_sa) + " (bounds 1e-9)");
}

void c5_bell_anchors() {
  Criterion c("C5 bell anchors");
  qcorr::OptimizerConfig cfg;
  cfg.starts = 8;
  cfg.seed = kSeed;
  const qcorr::DensityMatrix bell = qcorr::bell_state();
  const qcorr::Povm comp = qcorr::computational_basis(2, "B");

  const double discord = qcorr::discord(bell, "B", cfg).discord;
  const double merging = qcorr::merging_budget(bell).qubit_channel_rate;
  const qcorr::ProtocolBudget mother =
      qcorr::mother_budget(qcorr::purify(bell, "R"));
  const double losses[4] = {
      qcorr::fqswd_budget(qcorr::purify(bell, "R"), comp).loss,
      qcorr::merging_markup(bell, comp).loss,
      qcorr::dense_coding_loss(bell, comp).loss,
      qcorr::distillation_loss(bell, comp).loss,
  };
  double worst = std::abs(discord - 1.0);
  worst = std::max(worst, std::abs(merging + 1.0));
  worst = std::max(worst, std::abs(mother.qubit_channel_rate));
  worst = std::max(worst, std::abs(mother.ebit_rate - 1.0));
  for (double l : losses) worst = std::max(worst, std::abs(l - 1.0));
  c.finish(worst <= 1e-6,
           "discord 1, merging -1, mother (0 qubits, 1 ebit), all dephasing losses 1; "
           "worst deviation = " +
               fmt(worst) + " (bound 1e-6)");
}

void c6_grid() {
  Criterion c("C6 grid-oracle agreement");
  qcorr::OptimizerConfig cfg;
  cfg.starts = 16;
  cfg.seed = kSeed;
  double worst = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const qcorr::DensityMatrix w = qcorr::werner_state(0.1 * i);
    const double opt = qcorr::discord(w, "B", cfg).discord;
    const double grid = qcorr::discord_grid_oracle(w, "B", 400, 800);
    worst = std::max(worst, std::abs(opt - grid));
  }
  c.finish(worst <= 1e-4,
           "werner p in {0.1..0.9}, optimizer vs 400x800 grid within " + fmt(worst) +
               " (bound 1e-4)");
}

void c7_resource_calculus() {
  Criterion c("C7 merging derivation");
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    qcorr::Rng aux(kSeed, 2 * t);
    const std::size_t rank = 1 + aux.uniform_int(4);
    const qcorr::DensityMatrix rho =
        qcorr::random_density(qcorr::two_qubit_layout(), rank, kSeed, 2 * t + 1);
    const qcorr::ResourceInequality qsm = qcorr::derive_qsm(qcorr::purify(rho, "R"));
    const double direct = qcorr::merging_budget(rho).qubit_channel_rate;
    worst = std::max(
        worst, std::abs(qcorr::net_rate(qsm, qcorr::ResourceKind::QubitChannel) - direct));
  }

  // Strength truth table: exact survives composition only when both inputs
  // are exact, independent of scaling.
  bool table_ok = true;
  using qcorr::InequalityStrength;
  const auto a0 = qcorr::parse_inequality("1 [qq] >= 1 [q->q]");
  const auto b0 = qcorr::parse_inequality("1 [q->q] >= 2 [c->c]");
  for (int mask = 0; mask < 4; ++mask) {
    for (double scale : {1.0, 0.5}) {
      auto a = a0;
      auto b = b0;
      a.strength = (mask & 1) ? InequalityStrength::Exact : InequalityStrength::Asymptotic;
      b.strength = (mask & 2) ? InequalityStrength::Exact : InequalityStrength::Asymptotic;
      const auto expected = (mask == 3) ? InequalityStrength::Exact
                                        : InequalityStrength::Asymptotic;
      table_ok = table_ok && qcorr::compose(a, b, scale).strength == expected;
    }
  }

  c.finish(worst <= 1e-9 && table_ok,
           "derived merging cost matches S(A|B) within " + fmt(worst) +
               " (bound 1e-9) on 200 purified states; 8-case strength table " +
               (table_ok ? "holds" : "BROKEN"));
}

}  // namespace

int main() {
  std::printf("acceptance: base seed %llu\n", static_cast<unsigned long long>(kSeed));
  c1_discord_positivity();
  c2_ssa();
  c3_identities();
  c4_and_c8_losses();
  c5_bell_anchors();
  c6_grid();
  c7_resource_calculus();
  if (g_failures) {
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("acceptance: all criteria passed\n");
  return 0;
}

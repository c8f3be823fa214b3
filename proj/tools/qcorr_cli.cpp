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

// Command-line front end: discord optimization, entropic verification
// suites, protocol budget reports, and seeded sweeps with CSV output.
//
// Exit codes: 0 success, 1 property violation, 2 input error,
// 3 optimizer non-convergence.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qcorr/qcorr.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kNoConvergence = 3;

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void print_matrix_block(const qcorr::ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::printf("  [");
    for (std::size_t c = 0; c < m.cols(); ++c)
      std::printf(" %+.6f%+.6fi", m(r, c).real(), m(r, c).imag());
    std::printf(" ]\n");
  }
}

void print_budget(const std::string& head, const qcorr::ProtocolBudget& b) {
  std::printf("%s [%s]\n", head.c_str(), b.protocol.c_str());
  std::printf("  qubit channel rate : %s\n", fmt(b.qubit_channel_rate).c_str());
  std::printf("  cbit channel rate  : %s\n", fmt(b.cbit_channel_rate).c_str());
  std::printf("  ebit rate          : %s\n", fmt(b.ebit_rate).c_str());
  if (!b.notes.empty()) std::printf("  notes              : %s\n", b.notes.c_str());
}

std::pair<std::size_t, std::size_t> parse_grid_spec(const std::string& spec) {
  const std::size_t x = spec.find('x');
  std::size_t a = 0, b = 0;
  try {
    if (x == std::string::npos) throw std::invalid_argument("no 'x'");
    std::size_t used = 0;
    a = std::stoull(spec.substr(0, x), &used);
    if (used != x) throw std::invalid_argument("junk before 'x'");
    b = std::stoull(spec.substr(x + 1), &used);
    if (used != spec.size() - x - 1) throw std::invalid_argument("junk after 'x'");
  } catch (const std::exception&) {
    throw qcorr::ValidationError("--grid-check: expected NxM (e.g. 400x800), got '" + spec +
                                 "'");
  }
  if (a == 0 || b == 0)
    throw qcorr::ValidationError("--grid-check: grid sides must be positive");
  return {a, b};
}

std::vector<double> parse_param_range(const std::string& spec) {
  const std::size_t c1 = spec.find(':');
  const std::size_t c2 = c1 == std::string::npos ? c1 : spec.find(':', c1 + 1);
  double lo = 0.0, hi = 0.0;
  long long n = 0;
  try {
    if (c2 == std::string::npos) throw std::invalid_argument("need two ':'");
    lo = std::stod(spec.substr(0, c1));
    hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    n = std::stoll(spec.substr(c2 + 1));
  } catch (const std::exception&) {
    throw qcorr::ValidationError("--grid: expected lo:hi:count (e.g. 0:1:11), got '" + spec +
                                 "'");
  }
  if (n < 1) throw qcorr::ValidationError("--grid: count must be >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    out.push_back(lo);
  } else {
    for (long long i = 0; i < n; ++i)
      out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return out;
}

/// Extract the state vector of a rank-one density matrix.
qcorr::PureState to_pure(const qcorr::DensityMatrix& rho) {
  if (std::abs(rho.purity() - 1.0) > 1e-9)
    throw qcorr::ValidationError("state is not pure: tr(rho^2) = " + fmt(rho.purity()));
  const qcorr::EigenDecomposition eig = qcorr::hermitian_eig(rho.matrix());
  std::vector<qcorr::cplx> amps(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) amps[i] = eig.eigenvectors(i, 0);
  return qcorr::PureState(std::move(amps), rho.layout()).canonical_phase();
}

/// Load a tripartite pure state on A, B, R; bipartite A,B inputs are
/// purified with the reference appended as R.
qcorr::PureState load_mother_state(const std::string& path) {
  const nlohmann::json doc = qcorr::detail::load_json_file(path);
  if (doc.contains("vector")) {
    qcorr::PureState psi = qcorr::pure_from_json(doc);
    if (psi.layout().factor_count() == 3) return psi;
    if (psi.layout().factor_count() == 2) return purify(from_pure(psi), "R");
    throw qcorr::ValidationError(path + ": expected 2 or 3 subsystems, got " +
                                 std::to_string(psi.layout().factor_count()));
  }
  const qcorr::DensityMatrix rho = qcorr::density_from_json(doc);
  if (rho.layout().factor_count() == 2) return purify(rho, "R");
  if (rho.layout().factor_count() == 3) return to_pure(rho);
  throw qcorr::ValidationError(path + ": expected 2 or 3 subsystems, got " +
                               std::to_string(rho.layout().factor_count()));
}

qcorr::DensityMatrix load_bipartite(const std::string& path) {
  qcorr::DensityMatrix rho = qcorr::state_from_file(path);
  if (rho.layout().factor_count() != 2)
    throw qcorr::ValidationError(path + ": expected a bipartite state, layout is " +
                                 rho.layout().describe());
  return rho;
}

/// Resolve --basis: "computational" or "file:<path>" (unitary columns).
qcorr::Povm resolve_basis(const std::string& spec, std::size_t dim,
                          const std::string& measured) {
  if (spec == "computational") return qcorr::computational_basis(dim, measured);
  if (spec.rfind("file:", 0) == 0) {
    qcorr::Povm basis = qcorr::basis_from_file(spec.substr(5), measured);
    if (basis.elements.empty() || basis.elements[0].rows() != dim)
      throw qcorr::ValidationError("--basis file: dimension " +
                                   std::to_string(basis.elements.size()) +
                                   " does not match the measured factor (" +
                                   std::to_string(dim) + ")");
    return basis;
  }
  throw qcorr::ValidationError("--basis: expected 'computational' or 'file:<path>', got '" +
                               spec + "'");
}

struct CommonOpts {
  std::uint64_t seed = 0;
  double tol = -1.0;  ///< <= 0 means the command default
  std::size_t starts = 32;
  std::string csv_path;
  std::string grid_spec;
  bool optimize = false;
  std::string basis_spec = "computational";
};

// ---------------------------------------------------------------------------
// discord
// ---------------------------------------------------------------------------

int run_discord(const CommonOpts& g, const std::string& input, const std::string& measured,
                std::size_t max_iters, bool neumark) {
  const qcorr::DensityMatrix rho = qcorr::state_from_file(input);
  qcorr::OptimizerConfig cfg;
  cfg.starts = g.starts;
  cfg.seed = g.seed;
  cfg.max_iterations = max_iters;
  cfg.neumark = neumark;

  const qcorr::DiscordResult res = qcorr::discord(rho, measured, cfg);
  const double cond_entropy = res.s_unmeasured - res.mutual_info;

  std::printf("state  : %s\n", input.c_str());
  std::printf("layout : %s, measurement on %s%s\n", rho.layout().describe().c_str(),
              measured.c_str(), neumark ? " (Neumark-dilated)" : "");
  std::printf("mutual information I(A:B)      = %s bits\n", fmt(res.mutual_info).c_str());
  std::printf("classical correlations J(A:B)  = %s bits\n", fmt(res.classical_corr).c_str());
  std::printf("quantum discord D(A:B)         = %s bits\n", fmt(res.discord).c_str());
  std::printf("S(unmeasured)                  = %s bits\n", fmt(res.s_unmeasured).c_str());
  std::printf("conditional entropy S(A|B)     = %s bits\n", fmt(cond_entropy).c_str());
  std::printf("min post-measurement S~(A|B)   = %s bits\n", fmt(res.tilde_s_min).c_str());

  const std::size_t bdim =
      static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(res.optimal_params.size()))));
  std::printf("optimal measurement basis (columns are basis vectors):\n");
  print_matrix_block(qcorr::unitary_from_generator(
      qcorr::hermitian_from_params(res.optimal_params, bdim)));

  std::printf("optimizer: %zu starts, winning start %s after %zu iterations\n", res.starts,
              res.converged ? "stalled (converged)" : "hit the iteration cap", res.iterations);
  std::printf("running best objective by start:");
  for (double v : res.best_objective_history) std::printf(" %.6g", v);
  std::printf("\n");

  if (!res.converged) {
    std::fprintf(stderr,
                 "error: objective still improving at the %zu-iteration cap; "
                 "raise --max-iters\n",
                 cfg.max_iterations);
    return kNoConvergence;
  }

  if (!g.grid_spec.empty()) {
    const auto [n_theta, n_phi] = parse_grid_spec(g.grid_spec);
    const double grid = qcorr::discord_grid_oracle(rho, measured, n_theta, n_phi);
    const double delta = res.discord - grid;
    const double bound = g.tol > 0 ? g.tol : 1e-4;
    std::printf("grid oracle %zux%zu discord     = %s bits\n", n_theta, n_phi,
                fmt(grid).c_str());
    std::printf("optimizer - grid               = %.3g (tolerance %.3g)\n", delta, bound);
    if (std::abs(delta) > bound) {
      std::fprintf(stderr, "error: grid check failed: |%.3g| > %.3g\n", delta, bound);
      return kViolation;
    }
    std::printf("grid check passed\n");
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const CommonOpts& g, const std::string& suite, std::size_t trials) {
  if (trials < 1) throw qcorr::ValidationError("verify: --trials must be >= 1");

  if (suite == "ssa") {
    const double bound = g.tol > 0 ? g.tol : 1e-9;
    const qcorr::SubsystemLayout layout({{"A", 2}, {"B", 2}, {"C", 2}});
    double min_slack = std::numeric_limits<double>::infinity();
    std::size_t min_trial = 0, failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      qcorr::Rng aux(g.seed, 2 * t);
      const std::size_t rank = 1 + static_cast<std::size_t>(aux.uniform_int(8));
      const qcorr::DensityMatrix rho = qcorr::random_density(layout, rank, g.seed, 2 * t + 1);
      const double slack = qcorr::ssa_slack(rho, {"A"}, {"B"}, {"C"});
      if (slack < min_slack) {
        min_slack = slack;
        min_trial = t;
      }
      if (slack < -bound) {
        ++failures;
        std::fprintf(stderr, "violation: trial %zu (seed %llu, stream %llu): slack = %s\n", t,
                     static_cast<unsigned long long>(g.seed),
                     static_cast<unsigned long long>(2 * t + 1), fmt_full(slack).c_str());
      }
    }
    std::printf("ssa: %zu/%zu trials passed, min slack = %s (trial %zu), bound -%.3g\n",
                trials - failures, trials, fmt(min_slack).c_str(), min_trial, bound);
    return failures == 0 ? kOk : kViolation;
  }

  if (suite == "theorem1") {
    const double bound = g.tol > 0 ? g.tol : 1e-9;
    double worst = 0.0;
    std::size_t worst_trial = 0, failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      qcorr::Rng aux(g.seed, 2 * t);
      const std::size_t rank = 1 + static_cast<std::size_t>(aux.uniform_int(4));
      const qcorr::DensityMatrix rho =
          qcorr::random_density(qcorr::two_qubit_layout(), rank, g.seed, 2 * t + 1);
      std::vector<double> params(4);
      for (double& p : params) p = aux.uniform(-kPi, kPi);
      const qcorr::Povm basis = qcorr::basis_from_params(params, 2, "B");
      const qcorr::Theorem1Report rep = qcorr::theorem1_report(rho, basis);
      const double slack_residual =
          std::abs(rep.ssa_slack - (rep.tilde_s - (rep.s_rho_ab - rep.s_rho_b)));
      const double residual = std::max(rep.max_residual, slack_residual);
      if (residual > worst) {
        worst = residual;
        worst_trial = t;
      }
      if (residual > bound || !rep.discord_lower_bound_ok) {
        ++failures;
        std::fprintf(stderr,
                     "violation: trial %zu (seed %llu, stream %llu): residual = %s, "
                     "lower bound %s\n",
                     t, static_cast<unsigned long long>(g.seed),
                     static_cast<unsigned long long>(2 * t + 1), fmt_full(residual).c_str(),
                     rep.discord_lower_bound_ok ? "ok" : "VIOLATED");
      }
    }
    std::printf(
        "theorem1: %zu/%zu trials passed, worst identity residual = %s (trial %zu), "
        "bound %.3g\n",
        trials - failures, trials, fmt(worst).c_str(), worst_trial, bound);
    return failures == 0 ? kOk : kViolation;
  }

  if (suite == "losses") {
    const double bound = g.tol > 0 ? g.tol : 1e-5;  // each loss vs optimized discord
    const double pair_bound = 1e-10;                // losses vs each other
    double worst_vs_discord = 0.0, worst_pairwise = 0.0;
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      qcorr::Rng aux(g.seed, 2 * t);
      const std::size_t rank = 1 + static_cast<std::size_t>(aux.uniform_int(4));
      const qcorr::DensityMatrix rho =
          qcorr::random_density(qcorr::two_qubit_layout(), rank, g.seed, 2 * t + 1);
      qcorr::OptimizerConfig cfg;
      cfg.starts = g.starts;
      cfg.seed = g.seed;
      const qcorr::DiscordResult res = qcorr::discord(rho, "B", cfg);
      const qcorr::Povm& basis = res.optimal_basis;

      const double losses[4] = {
          qcorr::fqswd_budget(purify(rho, "R"), basis).loss,
          qcorr::merging_markup(rho, basis).loss,
          qcorr::dense_coding_loss(rho, basis).loss,
          qcorr::distillation_loss(rho, basis).loss,
      };
      double pairwise = 0.0, vs_discord = 0.0;
      for (int i = 0; i < 4; ++i) {
        vs_discord = std::max(vs_discord, std::abs(losses[i] - res.discord));
        for (int j = i + 1; j < 4; ++j)
          pairwise = std::max(pairwise, std::abs(losses[i] - losses[j]));
      }
      worst_pairwise = std::max(worst_pairwise, pairwise);
      worst_vs_discord = std::max(worst_vs_discord, vs_discord);
      if (pairwise > pair_bound || vs_discord > bound) {
        ++failures;
        std::fprintf(stderr,
                     "violation: trial %zu (seed %llu, stream %llu): pairwise = %s, "
                     "vs discord = %s\n",
                     t, static_cast<unsigned long long>(g.seed),
                     static_cast<unsigned long long>(2 * t + 1), fmt_full(pairwise).c_str(),
                     fmt_full(vs_discord).c_str());
      }
    }
    std::printf(
        "losses: %zu/%zu trials passed, worst pairwise residual = %s (bound %.3g), "
        "worst vs discord = %s (bound %.3g)\n",
        trials - failures, trials, fmt(worst_pairwise).c_str(), pair_bound,
        fmt(worst_vs_discord).c_str(), bound);
    return failures == 0 ? kOk : kViolation;
  }

  throw qcorr::ValidationError("verify: unknown suite '" + suite + "'");
}

// ---------------------------------------------------------------------------
// budget
// ---------------------------------------------------------------------------

void budget_csv_header(std::ofstream& out) {
  out << "protocol,phase,basis,qubit_channel_rate,cbit_channel_rate,ebit_rate,"
         "loss,discord_reference,residual\n";
}

void budget_csv_row(std::ofstream& out, const qcorr::ProtocolBudget& b, const char* phase,
                    const std::string& basis) {
  out << b.protocol << ',' << phase << ',' << basis << ',' << fmt(b.qubit_channel_rate) << ','
      << fmt(b.cbit_channel_rate) << ',' << fmt(b.ebit_rate) << ",,,\n";
}

void budget_csv_loss_row(std::ofstream& out, const qcorr::DecoherenceComparison& c,
                         const std::string& basis) {
  out << c.after.protocol << ",after," << basis << ',' << fmt(c.after.qubit_channel_rate)
      << ',' << fmt(c.after.cbit_channel_rate) << ',' << fmt(c.after.ebit_rate) << ','
      << fmt(c.loss) << ',' << fmt(c.discord_reference) << ','
      << fmt(c.equals_discord_residual) << '\n';
}

int run_budget(const CommonOpts& g, const std::string& protocol, const std::string& input,
               const std::string& measured) {
  qcorr::OptimizerConfig cfg;
  cfg.starts = g.starts;
  cfg.seed = g.seed;

  if (protocol == "mother") {
    const qcorr::PureState psi = load_mother_state(input);
    const qcorr::ProtocolBudget b = qcorr::mother_budget(psi);
    std::printf("state  : %s\nlayout : %s\n\n", input.c_str(),
                psi.layout().describe().c_str());
    print_budget("budget", b);
    if (!g.csv_path.empty()) {
      std::ofstream out(g.csv_path);
      if (!out) throw qcorr::ValidationError("cannot open --csv path: " + g.csv_path);
      budget_csv_header(out);
      budget_csv_row(out, b, "before", "-");
    }
    return kOk;
  }

  qcorr::DecoherenceComparison fixed_cmp, opt_cmp;
  std::string layout_desc;
  if (protocol == "fqswd") {
    const qcorr::PureState psi = load_mother_state(input);
    layout_desc = psi.layout().describe();
    const std::size_t bdim = psi.layout().factor(psi.layout().require_index("B")).dim;
    fixed_cmp = qcorr::fqswd_budget(psi, resolve_basis(g.basis_spec, bdim, "B"));
    opt_cmp = qcorr::fqswd_budget(psi, cfg);
  } else {
    const qcorr::DensityMatrix rho = load_bipartite(input);
    layout_desc = rho.layout().describe();
    const std::size_t mdim = rho.layout().factor(rho.layout().require_index(measured)).dim;
    const qcorr::Povm basis = resolve_basis(g.basis_spec, mdim, measured);
    if (protocol == "qsm") {
      fixed_cmp = qcorr::merging_markup(rho, basis);
      opt_cmp = qcorr::merging_markup(rho, cfg, measured);
    } else if (protocol == "sdc") {
      fixed_cmp = qcorr::dense_coding_loss(rho, basis);
      opt_cmp = qcorr::dense_coding_loss(rho, cfg, measured);
    } else if (protocol == "ed") {
      fixed_cmp = qcorr::distillation_loss(rho, basis);
      opt_cmp = qcorr::distillation_loss(rho, cfg, measured);
    } else {
      throw qcorr::ValidationError("budget: unknown protocol '" + protocol + "'");
    }
  }

  const std::string fixed_name =
      g.basis_spec == "computational" ? "computational basis" : g.basis_spec;
  const qcorr::DecoherenceComparison* first = &fixed_cmp;
  const qcorr::DecoherenceComparison* second = &opt_cmp;
  std::string first_name = fixed_name, second_name = "optimized basis";
  if (g.optimize) {
    std::swap(first, second);
    std::swap(first_name, second_name);
  }

  std::printf("state  : %s\nlayout : %s\n\n", input.c_str(), layout_desc.c_str());
  print_budget("before", first->before);
  std::printf("\n");
  print_budget("after dephasing, " + first_name, first->after);
  std::printf("\n");
  print_budget("after dephasing, " + second_name, second->after);
  std::printf("\n");
  auto loss_line = [](const std::string& name, const qcorr::DecoherenceComparison& c) {
    std::printf("loss, %-19s = %s bits; discord reference = %s; residual = %+.3g\n",
                name.c_str(), fmt(c.loss).c_str(), fmt(c.discord_reference).c_str(),
                c.equals_discord_residual);
  };
  loss_line(first_name, *first);
  loss_line(second_name, *second);

  if (!g.csv_path.empty()) {
    std::ofstream out(g.csv_path);
    if (!out) throw qcorr::ValidationError("cannot open --csv path: " + g.csv_path);
    budget_csv_header(out);
    budget_csv_row(out, first->before, "before", "-");
    budget_csv_loss_row(out, fixed_cmp, g.basis_spec);
    budget_csv_loss_row(out, opt_cmp, "optimized");
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

int run_sweep(const CommonOpts& g, const std::string& family, const std::string& grid_range,
              std::size_t trials, const std::string& out_path) {
  if (out_path.empty()) throw qcorr::ValidationError("sweep: --out <path> is required");

  struct Item {
    std::vector<double> params;
    qcorr::DensityMatrix state;
  };
  std::vector<Item> items;
  if (family == "werner" || family == "cc") {
    const std::vector<double> ps =
        parse_param_range(grid_range.empty() ? "0:1:11" : grid_range);
    for (double p : ps) {
      if (family == "werner")
        items.push_back({{p}, qcorr::werner_state(p)});
      else
        items.push_back({{p}, qcorr::classical_classical({p, 1.0 - p})});
    }
  } else if (family == "random") {
    for (std::size_t t = 0; t < trials; ++t) {
      qcorr::Rng aux(g.seed, 2 * t);
      const std::size_t rank = 1 + static_cast<std::size_t>(aux.uniform_int(4));
      items.push_back({{static_cast<double>(t), static_cast<double>(rank)},
                       qcorr::random_density(qcorr::two_qubit_layout(), rank, g.seed,
                                             2 * t + 1)});
    }
  } else {
    throw qcorr::ValidationError("sweep: unknown family '" + family +
                                 "' (expected werner, cc, or random)");
  }

  std::ofstream out(out_path);
  if (!out) throw qcorr::ValidationError("sweep: cannot open --out path: " + out_path);
  out << "seed,family,params,discord,merging_markup,dense_coding_loss,distillation_loss,"
         "ssa_min_slack,residual_max\n";

  qcorr::OptimizerConfig cfg;
  cfg.starts = g.starts;
  cfg.seed = g.seed;
  double max_residual = 0.0;
  for (const Item& item : items) {
    const qcorr::DiscordResult res = qcorr::discord(item.state, "B", cfg);
    const qcorr::Povm& basis = res.optimal_basis;
    const double fq = qcorr::fqswd_budget(purify(item.state, "R"), basis).loss;
    const double mk = qcorr::merging_markup(item.state, basis).loss;
    const double dc = qcorr::dense_coding_loss(item.state, basis).loss;
    const double ed = qcorr::distillation_loss(item.state, basis).loss;
    const double slack = qcorr::theorem1_report(item.state, basis).ssa_slack;
    double residual = 0.0;
    for (double loss : {fq, mk, dc, ed})
      residual = std::max(residual, std::abs(loss - res.discord));
    max_residual = std::max(max_residual, residual);

    std::string params;
    for (std::size_t i = 0; i < item.params.size(); ++i) {
      if (i) params += ';';
      params += fmt(item.params[i]);
    }
    out << g.seed << ',' << family << ',' << params << ',' << fmt(res.discord) << ','
        << fmt(mk) << ',' << fmt(dc) << ',' << fmt(ed) << ',' << fmt(slack) << ','
        << fmt(residual) << '\n';
  }
  out.close();
  if (!out) throw qcorr::ValidationError("sweep: write to " + out_path + " failed");
  std::printf("sweep: wrote %zu rows to %s, max loss/discord residual = %s\n", items.size(),
              out_path.c_str(), fmt(max_residual).c_str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quantum correlation toolkit: discord, decoherence budgets, entropic verification"};
  app.require_subcommand(1);

  CommonOpts g;
  app.add_option("--seed", g.seed, "base seed for all randomness (default 0)");
  app.add_option("--tol", g.tol, "override the command's default pass/fail tolerance");
  app.add_option("--starts", g.starts, "optimizer restarts (default 32)");
  app.add_option("--csv", g.csv_path, "also write the budget report as CSV to this path");
  app.add_option("--grid-check", g.grid_spec,
                 "NxM: cross-check discord against the qubit measurement grid oracle");
  app.add_flag("--optimize", g.optimize,
               "budget: lead with the optimized-basis comparison (both are always shown)");
  app.add_option("--basis", g.basis_spec,
                 "fixed measurement basis: computational | file:<path> (default "
                 "computational)");

  auto* cmd_discord = app.add_subcommand("discord", "optimize quantum discord of a state");
  std::string disc_input, disc_measured = "B";
  std::size_t disc_max_iters = 2000;
  bool disc_neumark = false;
  cmd_discord->add_option("input", disc_input, "state file (JSON)")->required();
  cmd_discord->add_option("--measured", disc_measured,
                          "label of the measured subsystem (default B)");
  cmd_discord->add_option("--max-iters", disc_max_iters,
                          "iteration cap per optimizer start (default 2000)");
  cmd_discord->add_flag("--neumark", disc_neumark,
                        "optimize projective measurements on a dilated measured factor");
  cmd_discord->fallthrough();

  auto* cmd_verify = app.add_subcommand("verify", "run a seeded property suite");
  std::string verify_suite;
  std::size_t verify_trials = 100;
  cmd_verify->add_option("suite", verify_suite, "ssa | theorem1 | losses")
      ->required()
      ->check(CLI::IsMember({"ssa", "theorem1", "losses"}));
  cmd_verify->add_option("--trials", verify_trials, "number of random trials (default 100)");
  cmd_verify->fallthrough();

  auto* cmd_budget =
      app.add_subcommand("budget", "protocol resource budget before/after dephasing");
  std::string budget_protocol, budget_input, budget_measured = "B";
  cmd_budget->add_option("protocol", budget_protocol, "mother | fqswd | qsm | sdc | ed")
      ->required()
      ->check(CLI::IsMember({"mother", "fqswd", "qsm", "sdc", "ed"}));
  cmd_budget->add_option("input", budget_input, "state file (JSON)")->required();
  cmd_budget->add_option("--measured", budget_measured,
                         "dephased subsystem for qsm/sdc/ed (default B)");
  cmd_budget->fallthrough();

  auto* cmd_sweep = app.add_subcommand("sweep", "seeded family sweep written as CSV");
  std::string sweep_family = "werner", sweep_grid, sweep_out;
  std::size_t sweep_trials = 100;
  cmd_sweep->add_option("--family", sweep_family, "werner | cc | random (default werner)")
      ->check(CLI::IsMember({"werner", "cc", "random"}));
  cmd_sweep->add_option("--grid", sweep_grid, "lo:hi:count parameter grid (default 0:1:11)");
  cmd_sweep->add_option("--trials", sweep_trials,
                        "trials for the random family (default 100)");
  cmd_sweep->add_option("--out", sweep_out, "output CSV path")->required();
  cmd_sweep->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*cmd_discord)
      return run_discord(g, disc_input, disc_measured, disc_max_iters, disc_neumark);
    if (*cmd_verify) return run_verify(g, verify_suite, verify_trials);
    if (*cmd_budget) return run_budget(g, budget_protocol, budget_input, budget_measured);
    if (*cmd_sweep) return run_sweep(g, sweep_family, sweep_grid, sweep_trials, sweep_out);
  } catch (const qcorr::ConvergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNoConvergence;
  } catch (const qcorr::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  }
  return kOk;
}

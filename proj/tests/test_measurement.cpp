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

#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "qcorr/discord.hpp"
#include "qcorr/measurement.hpp"

using qcorr::ComplexMatrix;
using qcorr::cplx;
using qcorr::DensityMatrix;
using qcorr::Povm;

namespace {

ComplexMatrix hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2);
  h(0, 0) = r;
  h(0, 1) = r;
  h(1, 0) = r;
  h(1, 1) = -r;
  return h;
}

}  // namespace

TEST_CASE("computational basis is a clean projective measurement", "[measure]") {
  const Povm basis = qcorr::computational_basis(3, "B");
  REQUIRE(basis.elements.size() == 3);
  REQUIRE_NOTHROW(qcorr::validate_povm(basis, /*require_rank1=*/true));
  REQUIRE(qcorr::is_orthogonal_projective(basis));
  REQUIRE_THROWS_AS(qcorr::computational_basis(0, "B"), qcorr::ValidationError);
}

TEST_CASE("basis from a unitary projects onto its columns", "[measure]") {
  const Povm basis = qcorr::basis_from_unitary(hadamard(), "B");
  REQUIRE(qcorr::is_orthogonal_projective(basis));
  ComplexMatrix plus(2, 2);
  plus(0, 0) = 0.5;
  plus(0, 1) = 0.5;
  plus(1, 0) = 0.5;
  plus(1, 1) = 0.5;
  REQUIRE(qcorr::max_abs_diff(basis.elements[0], plus) < 1e-12);

  ComplexMatrix skew(2, 2);
  skew(0, 1) = 1.0;
  REQUIRE_THROWS_AS(qcorr::basis_from_unitary(skew, "B"), qcorr::ValidationError);
}

TEST_CASE("povm validation rejects malformed element sets", "[measure]") {
  ComplexMatrix not_herm(2, 2);
  not_herm(0, 1) = cplx{1, 0};
  not_herm(0, 0) = 1.0;
  not_herm(1, 1) = 1.0;
  REQUIRE_THROWS_AS(qcorr::validate_povm({{not_herm}, "B"}), qcorr::ValidationError);

  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= cplx{0.5, 0.0};
  REQUIRE_THROWS_AS(qcorr::validate_povm({{half}, "B"}), qcorr::ValidationError);
  // Two copies of I/2 sum correctly but are not rank 1.
  REQUIRE_NOTHROW(qcorr::validate_povm({{half, half}, "B"}));
  REQUIRE_THROWS_AS(qcorr::validate_povm({{half, half}, "B"}, /*require_rank1=*/true),
                    qcorr::ValidationError);
  REQUIRE_FALSE(qcorr::is_orthogonal_projective({{half, half}, "B"}));
}

TEST_CASE("measuring one side of a bell pair", "[measure]") {
  const auto ens =
      qcorr::povm_outcomes(qcorr::bell_state(), qcorr::computational_basis(2, "B"));
  REQUIRE(ens.outcomes.size() == 2);
  for (std::size_t j = 0; j < 2; ++j) {
    REQUIRE(ens.outcomes[j].probability == Catch::Approx(0.5).margin(1e-12));
    // Outcome j collapses A to |j><j|.
    REQUIRE(std::abs(ens.outcomes[j].state.matrix()(j, j) - cplx{1, 0}) < 1e-12);
  }
  REQUIRE(qcorr::measured_conditional_entropy(qcorr::bell_state(),
                                              qcorr::computational_basis(2, "B")) ==
          Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("measurement statistics cannot signal", "[measure]") {
  const DensityMatrix rho = qcorr::random_density(qcorr::two_qubit_layout(), 4, 17);
  const ComplexMatrix marginal_a = partial_trace(rho.matrix(), rho.layout(), {"A"});
  for (const Povm& basis :
       {qcorr::computational_basis(2, "B"), qcorr::basis_from_unitary(hadamard(), "B")}) {
    const auto ens = qcorr::povm_outcomes(rho, basis);
    ComplexMatrix avg(2, 2);
    for (const auto& o : ens.outcomes) {
      ComplexMatrix term = o.state.matrix();
      term *= cplx{o.probability, 0.0};
      avg += term;
    }
    REQUIRE(qcorr::max_abs_diff(avg, marginal_a) < 1e-10);
  }
}

TEST_CASE("measuring the classical side works too", "[measure]") {
  const DensityMatrix cq =
      qcorr::classical_quantum({0.3, 0.7}, {{{0, 0, 1}}, {{1, 0, 0}}});
  const auto ens = qcorr::povm_outcomes(cq, qcorr::computational_basis(2, "A"));
  REQUIRE(ens.outcomes[0].probability == Catch::Approx(0.3).margin(1e-12));
  REQUIRE(ens.outcomes[1].probability == Catch::Approx(0.7).margin(1e-12));
  // Conditional states are the pure Bloch states, entropy 0.
  REQUIRE(qcorr::measured_conditional_entropy(cq, qcorr::computational_basis(2, "A")) ==
          Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("povm outcome error paths", "[measure]") {
  const DensityMatrix bell = qcorr::bell_state();
  REQUIRE_THROWS_AS(qcorr::povm_outcomes(bell, qcorr::computational_basis(3, "B")),
                    qcorr::ValidationError);
  REQUIRE_THROWS_AS(qcorr::povm_outcomes(bell, qcorr::computational_basis(2, "Z")),
                    qcorr::ValidationError);
  const DensityMatrix one(ComplexMatrix::identity(2) * cplx{0.5, 0.0},
                          qcorr::SubsystemLayout({{"A", 2}}));
  REQUIRE_THROWS_AS(qcorr::povm_outcomes(one, qcorr::computational_basis(2, "A")),
                    qcorr::ValidationError);
}

TEST_CASE("dephasing kills coherences and nothing else", "[measure]") {
  const Povm basis = qcorr::computational_basis(2, "B");
  const DensityMatrix bell = qcorr::bell_state();
  const DensityMatrix dephased = qcorr::dephase(bell, basis);

  ComplexMatrix expect(4, 4);
  expect(0, 0) = 0.5;
  expect(3, 3) = 0.5;
  REQUIRE(qcorr::max_abs_diff(dephased.matrix(), expect) < 1e-12);
  REQUIRE(qcorr::max_abs_diff(qcorr::dephase(dephased, basis).matrix(),
                              dephased.matrix()) < 1e-12);
  // The unmeasured marginal is untouched.
  REQUIRE(qcorr::max_abs_diff(partial_trace(dephased.matrix(), dephased.layout(), {"A"}),
                              partial_trace(bell.matrix(), bell.layout(), {"A"})) < 1e-12);
}

TEST_CASE("ancilla extension records the basis index", "[measure]") {
  const DensityMatrix ext = qcorr::ancilla_extension(
      qcorr::bell_state(), qcorr::computational_basis(2, "B"), "C");
  REQUIRE(ext.layout().describe() == "A(2) x B(2) x C(2)");
  // Recording the bell pair's basis index is exactly the three-party
  // maximally correlated pure state.
  REQUIRE(qcorr::max_abs_diff(ext.matrix(), qcorr::named_family("ghz", {}).matrix()) <
          1e-12);

  // Tracing the record out returns the dephased state.
  const DensityMatrix w = qcorr::werner_state(0.6);
  const Povm had = qcorr::basis_from_unitary(hadamard(), "B");
  const DensityMatrix wext = qcorr::ancilla_extension(w, had, "C");
  REQUIRE(qcorr::max_abs_diff(partial_trace(wext.matrix(), wext.layout(), {"A", "B"}),
                              qcorr::dephase(w, had).matrix()) < 1e-10);
  // The recording map is an isometry, so the global entropy is unchanged.
  REQUIRE(qcorr::von_neumann_entropy(wext) ==
          Catch::Approx(qcorr::von_neumann_entropy(w)).margin(1e-9));

  REQUIRE_THROWS_AS(
      qcorr::ancilla_extension(w, qcorr::computational_basis(2, "B"), "A"),
      qcorr::ValidationError);
}

TEST_CASE("entropy identity report on a symmetric state", "[measure]") {
  // Measuring either basis of werner(p) gives outcome probabilities 1/2 and
  // conditional Bloch length p, so tilde_s = H((1+p)/2) exactly.
  const auto rep =
      qcorr::theorem1_report(qcorr::werner_state(0.5), qcorr::computational_basis(2, "B"));
  REQUIRE(rep.s_p == Catch::Approx(1.0).margin(1e-10));
  REQUIRE(rep.tilde_s == Catch::Approx(0.8112781244591328).margin(1e-10));
  REQUIRE(rep.max_residual < 1e-9);
  REQUIRE(rep.discord_lower_bound_ok);
  REQUIRE(rep.ssa_slack ==
          Catch::Approx(rep.tilde_s - (rep.s_rho_ab - rep.s_rho_b)).margin(1e-9));
}

TEST_CASE("entropy identities hold for random state and basis pairs", "[measure]") {
  for (std::uint64_t t = 0; t < 20; ++t) {
    qcorr::Rng aux(93, 2 * t);
    const std::size_t rank = 1 + aux.uniform_int(4);
    std::vector<double> params(4);
    for (double& x : params) x = aux.uniform(-3.14159265358979312, 3.14159265358979312);
    const DensityMatrix rho =
        qcorr::random_density(qcorr::two_qubit_layout(), rank, 93, 2 * t + 1);
    const auto rep = qcorr::theorem1_report(rho, qcorr::basis_from_params(params, 2, "B"));
    REQUIRE(rep.max_residual < 1e-9);
    REQUIRE(rep.ssa_slack >= -1e-9);
    REQUIRE(rep.discord_lower_bound_ok);
    REQUIRE(std::abs(rep.ssa_slack - (rep.tilde_s - (rep.s_rho_ab - rep.s_rho_b))) < 1e-9);
  }
}

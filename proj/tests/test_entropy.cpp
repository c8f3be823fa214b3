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

#include <catch2/catch_amalgamated.hpp>

#include "qcorr/entropy.hpp"

using qcorr::DensityMatrix;

TEST_CASE("shannon entropy anchors", "[entropy]") {
  REQUIRE(qcorr::shannon_entropy({0.5, 0.5}) == Catch::Approx(1.0).margin(1e-15));
  REQUIRE(qcorr::shannon_entropy({1.0, 0.0}) == 0.0);
  REQUIRE(qcorr::shannon_entropy({0.25, 0.25, 0.25, 0.25}) ==
          Catch::Approx(2.0).margin(1e-15));
  // H(0.25) used as an oracle elsewhere.
  REQUIRE(qcorr::shannon_entropy({0.25, 0.75}) ==
          Catch::Approx(0.8112781244591328).margin(1e-15));
  REQUIRE_THROWS_AS(qcorr::shannon_entropy({0.7, 0.7}), qcorr::ValidationError);
}

TEST_CASE("eigenvalue entropy cleans roundoff", "[entropy]") {
  REQUIRE(qcorr::entropy_of_eigenvalues({0.5, 0.5, -5e-11}) ==
          Catch::Approx(1.0).margin(1e-12));
  REQUIRE(qcorr::entropy_of_eigenvalues({1.0 + 5e-12}) == 0.0);
  REQUIRE_THROWS_AS(qcorr::entropy_of_eigenvalues({0.5, 0.5, -1e-6}),
                    qcorr::ValidationError);
}

TEST_CASE("bell state correlation profile", "[entropy]") {
  const auto rep = qcorr::correlation_report(qcorr::bell_state(), {"A"}, {"B"});
  REQUIRE(rep.s_a == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(rep.s_b == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(rep.s_ab == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(rep.mutual_info == Catch::Approx(2.0).margin(1e-12));
  REQUIRE(rep.cond_entropy == Catch::Approx(-1.0).margin(1e-12));
  REQUIRE(rep.coherent_info == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("product state has no correlations", "[entropy]") {
  const DensityMatrix rho = qcorr::named_family("product", {0, 0, 0.5, 1, 0, 0});
  const auto rep = qcorr::correlation_report(rho, {"A"}, {"B"});
  REQUIRE(rep.mutual_info == Catch::Approx(0.0).margin(1e-10));
  REQUIRE(rep.cond_entropy == Catch::Approx(rep.s_a).margin(1e-10));
}

TEST_CASE("classically correlated bit", "[entropy]") {
  const auto rep =
      qcorr::correlation_report(qcorr::classical_classical({0.5, 0.5}), {"A"}, {"B"});
  REQUIRE(rep.s_a == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(rep.mutual_info == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(rep.cond_entropy == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("ssa slack anchors", "[entropy]") {
  // Pure GHZ: S(AB) = S(BC) = S(B) = 1, S(ABC) = 0, slack = 1.
  const DensityMatrix ghz = qcorr::named_family("ghz", {});
  REQUIRE(qcorr::ssa_slack(ghz, {"A"}, {"B"}, {"C"}) == Catch::Approx(1.0).margin(1e-9));

  // Its dephased cousin diag(1/2, 0, ..., 0, 1/2) saturates the bound.
  qcorr::ComplexMatrix m(8, 8);
  m(0, 0) = {0.5, 0.0};
  m(7, 7) = {0.5, 0.0};
  const DensityMatrix classical(std::move(m), ghz.layout());
  REQUIRE(qcorr::ssa_slack(classical, {"A"}, {"B"}, {"C"}) ==
          Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("ssa slack is nonnegative on random states", "[entropy]") {
  const qcorr::SubsystemLayout layout({{"A", 2}, {"B", 2}, {"C", 2}});
  for (std::uint64_t t = 0; t < 25; ++t) {
    qcorr::Rng aux(31, 2 * t);
    const std::size_t rank = 1 + aux.uniform_int(8);
    const DensityMatrix rho = qcorr::random_density(layout, rank, 31, 2 * t + 1);
    REQUIRE(qcorr::ssa_slack(rho, {"A"}, {"B"}, {"C"}) >= -1e-9);
  }
}

TEST_CASE("partition validation", "[entropy]") {
  const DensityMatrix bell = qcorr::bell_state();
  REQUIRE_THROWS_AS(qcorr::correlation_report(bell, {"A"}, {"A"}),
                    qcorr::ValidationError);
  REQUIRE_THROWS_AS(qcorr::correlation_report(bell, {"A"}, {"C"}),
                    qcorr::ValidationError);
  REQUIRE_THROWS_AS(qcorr::correlation_report(bell, {"A", "B"}, {}),
                    qcorr::ValidationError);
  REQUIRE(qcorr::subsystem_entropy(bell, {"B"}) == Catch::Approx(1.0).margin(1e-12));
}

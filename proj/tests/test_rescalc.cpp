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

#include "qcorr/protocols.hpp"
#include "qcorr/resource_calc.hpp"

using qcorr::InequalityStrength;
using qcorr::ResourceInequality;
using qcorr::ResourceKind;
using qcorr::ResourceTerm;

TEST_CASE("parsing the documented grammar", "[rescalc]") {
  const ResourceInequality ineq = qcorr::parse_inequality("<psi> + 0.5 [q->q] >= 0.5 [qq]");
  REQUIRE(ineq.strength == InequalityStrength::Asymptotic);
  REQUIRE(ineq.lhs.size() == 2);
  REQUIRE(ineq.lhs[0] == ResourceTerm{ResourceKind::QubitChannel, 0.5, ""});
  REQUIRE(ineq.lhs[1] == ResourceTerm{ResourceKind::StateResource, 1.0, "psi"});
  REQUIRE(ineq.rhs.size() == 1);
  REQUIRE(ineq.rhs[0] == ResourceTerm{ResourceKind::Ebit, 0.5, ""});

  REQUIRE(qcorr::parse_inequality("1 [qq] + 2 [c->c] >=! 1 [q->q]") ==
          qcorr::teleportation_inequality());

  const ResourceInequality zero = qcorr::parse_inequality("0 >= 0");
  REQUIRE(zero.lhs.empty());
  REQUIRE(zero.rhs.empty());
}

TEST_CASE("parse errors carry a position", "[rescalc]") {
  using qcorr::parse_inequality;
  REQUIRE_THROWS_WITH(parse_inequality("x [qq] >= 0"),
                      Catch::Matchers::ContainsSubstring("position"));
  REQUIRE_THROWS_AS(parse_inequality("1 [qq >= 0"), qcorr::ValidationError);
  REQUIRE_THROWS_AS(parse_inequality("1 [qz] >= 0"), qcorr::ValidationError);
  REQUIRE_THROWS_AS(parse_inequality("-3 [qq] >= 0"), qcorr::ValidationError);
  REQUIRE_THROWS_AS(parse_inequality("<> >= 0"), qcorr::ValidationError);
  REQUIRE_THROWS_AS(parse_inequality("1 [qq] >= 0 junk"), qcorr::ValidationError);
  REQUIRE_THROWS_AS(parse_inequality("1 [qq] >= "), qcorr::ValidationError);
  REQUIRE_THROWS_AS(parse_inequality("1 [qq] = 1 [qq]"), qcorr::ValidationError);
}

TEST_CASE("printing round trips", "[rescalc]") {
  for (const char* text : {
           "1 [q->q] >= 2 [c->c]",
           "2 [c->c] + 1 [qq] >=! 1 [q->q]",
           "0.125 [qq] + <W:S_to_AB:Psi_S> >= 0",
           "0 >= 3 [c->c] + 0.5 <noise>",
       }) {
    const ResourceInequality once = qcorr::parse_inequality(text);
    REQUIRE(qcorr::parse_inequality(qcorr::print_inequality(once)) == once);
  }
  // Aggregation happens on parse: duplicate keys merge.
  REQUIRE(qcorr::print_inequality(qcorr::parse_inequality("0.5 [qq] + 0.5 [qq] >= 0")) ==
          "1 [qq] >= 0");
}

TEST_CASE("term validation", "[rescalc]") {
  ResourceInequality bad;
  bad.lhs = {{ResourceKind::QubitChannel, -1.0, ""}};
  REQUIRE_THROWS_AS(qcorr::print_inequality(bad), qcorr::ValidationError);
  ResourceInequality tagged_channel;
  tagged_channel.lhs = {{ResourceKind::Ebit, 1.0, "oops"}};
  REQUIRE_THROWS_AS(qcorr::print_inequality(tagged_channel), qcorr::ValidationError);
  ResourceInequality untagged_state;
  untagged_state.lhs = {{ResourceKind::StateResource, 1.0, ""}};
  REQUIRE_THROWS_AS(qcorr::print_inequality(untagged_state), qcorr::ValidationError);
}

TEST_CASE("composition cancels common resources", "[rescalc]") {
  const auto a = qcorr::parse_inequality("1 [qq] >= 1 [q->q]");
  const auto b = qcorr::parse_inequality("1 [q->q] >= 2 [c->c]");
  const auto ab = qcorr::compose(a, b);
  REQUIRE(qcorr::print_inequality(ab) == "1 [qq] >= 2 [c->c]");
  REQUIRE(ab.strength == InequalityStrength::Asymptotic);

  // Exact survives only when both inputs are exact.
  auto ax = a;
  ax.strength = InequalityStrength::Exact;
  auto bx = b;
  bx.strength = InequalityStrength::Exact;
  REQUIRE(qcorr::compose(ax, bx).strength == InequalityStrength::Exact);
  REQUIRE(qcorr::compose(ax, b).strength == InequalityStrength::Asymptotic);
  REQUIRE(qcorr::compose(a, bx).strength == InequalityStrength::Asymptotic);

  // Scaling applies to the second inequality only.
  const auto half = qcorr::compose(qcorr::parse_inequality("0 >= 0"),
                                   qcorr::parse_inequality("2 [c->c] >= 1 [qq]"), 0.5);
  REQUIRE(qcorr::print_inequality(half) == "1 [c->c] >= 0.5 [qq]");
  REQUIRE_THROWS_AS(qcorr::compose(a, b, -1.0), qcorr::ValidationError);

  // Composing with the vacuous inequality changes nothing.
  const auto vac = qcorr::parse_inequality("0 >= 0");
  REQUIRE(qcorr::compose(a, vac) == a);

  // Associativity on binary-exact rates.
  const auto c = qcorr::parse_inequality("2 [c->c] >= 0.25 <x>");
  REQUIRE(qcorr::compose(qcorr::compose(a, b), c) == qcorr::compose(a, qcorr::compose(b, c)));
}

TEST_CASE("net rates", "[rescalc]") {
  const auto tp = qcorr::teleportation_inequality();
  REQUIRE(qcorr::net_rate(tp, ResourceKind::CbitChannel) == 2.0);
  REQUIRE(qcorr::net_rate(tp, ResourceKind::Ebit) == 1.0);
  REQUIRE(qcorr::net_rate(tp, ResourceKind::QubitChannel) == -1.0);
  REQUIRE(qcorr::net_rate(tp, ResourceKind::StateResource) == 0.0);
}

TEST_CASE("mother inequality instantiated on anchors", "[rescalc]") {
  // Bell pair, trivial reference: no qubit term survives on the left.
  const auto bell = qcorr::fqsw_inequality(qcorr::purify(qcorr::bell_state(), "R"));
  REQUIRE(bell.lhs.size() == 1);
  REQUIRE(bell.lhs[0].kind == ResourceKind::StateResource);
  REQUIRE(bell.lhs[0].state_tag == qcorr::kFqswInputTag);
  REQUIRE(bell.rhs.size() == 2);
  REQUIRE(bell.rhs[0].kind == ResourceKind::Ebit);
  REQUIRE(bell.rhs[0].rate == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(bell.rhs[1].state_tag == qcorr::kFqswOutputTag);
  REQUIRE(bell.strength == InequalityStrength::Asymptotic);

  REQUIRE_THROWS_AS(qcorr::fqsw_inequality(qcorr::ghz_ket({"A", "B", "C"})),
                    qcorr::ValidationError);
}

TEST_CASE("state merging falls out of the composition", "[rescalc]") {
  // Bell: S(A|B) = -1, so the derived inequality nets one distilled ebit
  // worth of qubit channels and spends I(A:B) = 2 cbits.
  const auto bell_qsm = qcorr::derive_qsm(qcorr::purify(qcorr::bell_state(), "R"));
  REQUIRE(qcorr::net_rate(bell_qsm, ResourceKind::QubitChannel) ==
          Catch::Approx(-1.0).margin(1e-9));
  REQUIRE(qcorr::net_rate(bell_qsm, ResourceKind::CbitChannel) ==
          Catch::Approx(2.0).margin(1e-9));
  REQUIRE(bell_qsm.strength == InequalityStrength::Asymptotic);

  // Three-party maximally correlated state: S(A|B) = 0, I(A:B) = 1.
  const auto ghz_qsm = qcorr::derive_qsm(qcorr::ghz_ket({"A", "B", "R"}));
  REQUIRE(qcorr::net_rate(ghz_qsm, ResourceKind::QubitChannel) ==
          Catch::Approx(0.0).margin(1e-9));
  REQUIRE(qcorr::net_rate(ghz_qsm, ResourceKind::CbitChannel) ==
          Catch::Approx(1.0).margin(1e-9));

  // The derivation reproduces the merging budget on mixed inputs too.
  const qcorr::DensityMatrix w = qcorr::werner_state(0.7);
  const auto derived = qcorr::derive_qsm(qcorr::purify(w, "R"));
  const auto direct = qcorr::merging_budget(w);
  REQUIRE(qcorr::net_rate(derived, ResourceKind::QubitChannel) ==
          Catch::Approx(direct.qubit_channel_rate).margin(1e-9));
  REQUIRE(qcorr::net_rate(derived, ResourceKind::CbitChannel) ==
          Catch::Approx(direct.cbit_channel_rate).margin(1e-9));
}

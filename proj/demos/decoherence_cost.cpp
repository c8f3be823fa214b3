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

// Walks the werner family and prints how much each protocol loses when
// the measured side decoheres, next to the state's quantum discord. The
// four loss columns land on the discord column for every p.

#include <cmath>
#include <cstdio>

#include "qcorr/qcorr.hpp"

namespace {

// Optimizer residue at the separable endpoint would otherwise print as -0.
double display(double v) { return std::abs(v) < 5e-7 ? 0.0 : v; }

}  // namespace

int main() {
  qcorr::OptimizerConfig cfg;
  cfg.starts = 16;

  std::printf("%4s  %10s  %10s  %10s  %10s  %10s\n", "p", "discord", "fqswd", "merging",
              "dense-code", "distill");
  for (int i = 0; i <= 10; ++i) {
    const double p = 0.1 * i;
    const qcorr::DensityMatrix rho = qcorr::werner_state(p);
    const qcorr::DiscordResult res = qcorr::discord(rho, "B", cfg);
    const qcorr::Povm& basis = res.optimal_basis;
    const double fq = qcorr::fqswd_budget(qcorr::purify(rho, "R"), basis).loss;
    const double mk = qcorr::merging_markup(rho, basis).loss;
    const double dc = qcorr::dense_coding_loss(rho, basis).loss;
    const double ed = qcorr::distillation_loss(rho, basis).loss;
    std::printf("%4.1f  %10.6f  %10.6f  %10.6f  %10.6f  %10.6f\n", p, display(res.discord),
                display(fq), display(mk), display(dc), display(ed));
  }
  return 0;
}

// Copyright 2026 The Repression Lab Authors. All rights reserved.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.h"
#include "repression/solver_mild.h"
#include "repression/verify.h"

namespace repression {
namespace {

TEST_CASE("mild example threshold matches the quadratic and bisection") {
  const MildEquilibrium eq = SolveMild(MildExampleParams());
  const double quad = oracle::MildExampleThreshold();
  const double bis = oracle::MildThresholdByBisection(0.4, 0.65, 2.5, -1.0, 0.6);
  CHECK(quad == doctest::Approx(0.3556411).epsilon(1e-7));
  CHECK(std::abs(eq.c_tilde - quad) <= 1e-9);
  CHECK(std::abs(eq.c_tilde - bis) <= 1e-9);
  CHECK(std::abs(eq.residual) <= kDefaultTol);
}

TEST_CASE("mild example kappa and posteriors") {
  const MildEquilibrium eq = SolveMild(MildExampleParams());
  CHECK(std::abs(eq.kappa - 112.0 / 247.0) <= 1e-12);
  CHECK(std::abs(eq.q_prime - 16.0 / 35.0) <= 1e-12);
  CHECK(eq.mu_r.none == 0.0);
  CHECK(eq.mu_nn.good / eq.mu_nn.bad ==
        doctest::Approx(0.65 / 0.35).epsilon(1e-12));
  const double c = eq.c_tilde;
  CHECK(eq.gamma_prime == doctest::Approx(0.4 * c / (0.4 * c + 0.6)));
}

TEST_CASE("mild example repression probabilities") {
  const MildEquilibrium eq = SolveMild(MildExampleParams());
  const double c = oracle::MildExampleThreshold();
  const double kappa = 112.0 / 247.0;
  // Independent recomputation for H = U[0,1].
  CHECK(std::abs(eq.prob.revealed - (kappa * 0.65 + 0.35) * (1.0 - c)) <= 1e-9);
  CHECK(std::abs(eq.prob.concealed - c) <= 1e-9);
  CHECK(std::abs(eq.prob.total - (1.0 - 0.65 * (1.0 - kappa) * (1.0 - c))) <=
        1e-9);
  CHECK(eq.prob.revealed == doctest::Approx(0.415442).epsilon(1e-5));
  CHECK(eq.prob.total == doctest::Approx(0.771083).epsilon(1e-5));
  CHECK(eq.prob.total + eq.prob.concession == doctest::Approx(1.0));
  const RepressionProbabilities u = Unconditional(eq.prob, 0.4);
  CHECK(u.revealed == doctest::Approx(0.4 * eq.prob.revealed));
}

TEST_CASE("mild example protest probabilities and effects") {
  const MildEquilibrium eq = SolveMild(MildExampleParams());
  CHECK(std::abs(eq.p_r - 0.6) <= 1e-12);
  CHECK(std::abs(eq.p_prior - 0.51) <= 1e-12);
  CHECK(std::abs(eq.d - (-0.09)) <= 1e-10);
  CHECK(std::abs(eq.p_nn - (0.6 - eq.c_tilde)) <= 1e-9);
  CHECK(std::abs(eq.d_lower + eq.c_tilde) <= 1e-9);
}

TEST_CASE("solve rejects parameters outside the mild assumption") {
  ModelParams p = MildExampleParams();
  p.alpha_b = 0.5;
  CHECK_THROWS_AS(SolveMild(p), AssumptionViolation);
  try {
    SolveMild(p);
  } catch (const AssumptionViolation& e) {
    CHECK(e.report().FailedClauses().front() == 1);
  }
  p = MildExampleParams();
  p.gamma = 0.0;
  CHECK_THROWS_AS(SolveMild(p), RejectedInput);
}

TEST_CASE("property: threshold residual is strictly increasing") {
  const ModelParams p = MildExampleParams();
  double prev = MildThresholdResidual(p, 0.0);
  CHECK(prev < 0.0);
  for (int i = 1; i <= 600; ++i) {
    const double r = MildThresholdResidual(p, 0.6 * i / 600.0);
    CHECK(r > prev);
    prev = r;
  }
  CHECK(prev >= 0.0);
}

TEST_CASE("estimators reproduce equilibrium quantities exactly") {
  const ModelParams p = MildExampleParams();
  const MildEquilibrium eq = SolveMild(p);
  CHECK(std::abs(EstimateTotalRepression(p.q, eq.q_prime, eq.prob.revealed) -
                 eq.prob.total) <= 1e-12);
  const ConcealmentEstimate h =
      EstimateConcealment(p.q, eq.q_prime, eq.prob.revealed);
  CHECK(h.consistent);
  CHECK(std::abs(h.value - eq.c_tilde) <= 1e-12);
}

TEST_CASE("estimators reject degenerate inputs") {
  CHECK_THROWS_AS(EstimateTotalRepression(0.5, 0.6, 0.3), DomainError);
  CHECK_THROWS_AS(EstimateTotalRepression(1.0, 0.6, 0.3), DomainError);
  CHECK_FALSE(EstimateConcealment(0.65, 0.1, 0.9).consistent);
}

TEST_CASE("degenerate-cost limits") {
  ModelParams p = MildExampleParams();
  DegenerateLimits lim = MildDegenerateLimits(p);
  CHECK(lim.prohibitive == 0.0);
  CHECK(lim.negligible == 1.0);
  CHECK(lim.all_conceal);
  p.alpha_g = 0.4;
  lim = MildDegenerateLimits(p);
  CHECK_FALSE(lim.all_conceal);
  // (1 - gamma)/gamma * x / (beta^e - x) with x = G^{-1}(0.4) = 0.4.
  CHECK(lim.negligible == doctest::Approx(1.5 * 0.4 / 0.875).epsilon(1e-12));
  CHECK(lim.negligible == doctest::Approx(0.6857).epsilon(1e-4));
}

TEST_CASE("no-concession threshold is exactly 0.625 in the mild example") {
  const ModelParams p = MildExampleParams();
  CHECK(oracle::NoConcessionExampleThreshold() ==
        doctest::Approx(0.625).epsilon(1e-15));
  const NoConcessionEquilibrium eq = SolveNoConcession(p);
  CHECK(std::abs(eq.c_tilde - 0.625) <= 1e-8);
  CHECK(eq.prob_concealed + eq.prob_revealed == doctest::Approx(1.0));
  CHECK(eq.mu_r.good == doctest::Approx(0.65));
  CHECK(eq.p_r == doctest::Approx(1.0));
  const RegretReport br = BestResponseCheck(p, eq, 1000);
  CHECK(br.max_regret <= 1e-9);
}

TEST_CASE("no-concession rejects protest costs above concealment support") {
  ModelParams p = MildExampleParams();
  p.concealment_cost = BoundedCdf::Uniform(2.0, 3.0);
  CHECK_THROWS_AS(SolveNoConcession(p), RejectedInput);
}

TEST_CASE("property: identities hold on random mild draws") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int solved = 0;
  for (int i = 0; i < 4000 && solved < 200; ++i) {
    ModelParams p;
    p.gamma = 0.1 + 0.8 * u(gen);
    p.q = 0.1 + 0.8 * u(gen);
    p.beta_g = 0.5 + 2.5 * u(gen);
    p.beta_b = -2.0 + (p.beta_g + 2.0) * 0.99 * u(gen);
    p.alpha_g = 0.05 + 0.9 * u(gen);
    p.alpha_b = p.alpha_g + (0.999 - p.alpha_g) * u(gen);
    p.protest_cost = oracle::RandomCdf(gen);
    p.concealment_cost = oracle::RandomCdf(gen);
    if (!CheckMildConflict(p).Pass()) continue;
    ++solved;
    const MildEquilibrium eq = SolveMild(p);
    CHECK(eq.c_tilde > p.concealment_cost.lo());
    CHECK(eq.c_tilde < p.alpha_g);
    for (const IdentityGap& g : MildIdentityGaps(p, eq)) {
      INFO(g.name, " = ", g.value);
      CHECK(g.Pass());
    }
    CHECK(eq.d_lower < 0.0);
    CHECK(eq.d_lower <= eq.d);
  }
  CHECK(solved == 200);
}

}  // namespace
}  // namespace repression

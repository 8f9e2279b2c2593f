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

#include "repression/verify.h"

namespace repression {
namespace {

TEST_CASE("mild example certifies with a 1000-point grid") {
  const ModelParams p = MildExampleParams();
  const RegretReport r = CertifyMild(p, SolveMild(p), 1000);
  CHECK(r.max_regret <= 1e-9);
  CHECK(r.bayes_gap <= 1e-10);
  CHECK(r.indifference_gap <= 1e-9);
  CHECK(r.reveal_on_path);
  for (const IdentityGap& g : r.identity_gaps) {
    INFO(g.name, " = ", g.value);
    CHECK(g.Pass());
  }
  CHECK(r.Pass());
}

TEST_CASE("perturbed mild threshold produces regret below the cutoff") {
  const ModelParams p = MildExampleParams();
  MildEquilibrium eq = SolveMild(p);
  const double true_cut = eq.c_tilde;
  eq.c_tilde += 0.05;
  const RegretReport r = BestResponseCheck(p, eq, 1000);
  CHECK(r.max_regret >= 0.01);
  CHECK(r.worst_c > true_cut);
  CHECK(r.worst_c <= eq.c_tilde);
}

TEST_CASE("severe example certifies and bad types prefer concession") {
  const ModelParams p = SevereExampleParams();
  const SevereEquilibrium eq = SolveSevere(p);
  const RegretReport r = CertifySevere(p, eq, 1000);
  CHECK(r.max_regret <= 1e-9);
  CHECK(r.bayes_gap <= 1e-10);
  CHECK(r.Pass());
  const ActionPayoffs pay = RegimePayoffs(p, ActivistType::kBad,
                                          eq.c_tilde_b + 0.1, eq.p_r, eq.p_nn);
  CHECK(pay.concede == doctest::Approx(0.6));
  CHECK(pay.reveal == doctest::Approx(0.1));
  CHECK(pay.concede > pay.reveal);
  CHECK(pay.concede > pay.conceal);
}

TEST_CASE("perturbed severe threshold is detected") {
  const ModelParams p = SevereExampleParams();
  SevereEquilibrium eq = SolveSevere(p);
  eq.c_tilde_b += 0.05;
  CHECK(BestResponseCheck(p, eq, 1000).max_regret >= 0.01);
}

TEST_CASE("bayes check catches a corrupted posterior") {
  const ModelParams p = MildExampleParams();
  MildEquilibrium eq = SolveMild(p);
  eq.mu_nn.good += 1e-6;
  eq.mu_nn.none -= 1e-6;
  CHECK(BayesConsistencyCheck(p, eq).bayes_gap > 1e-7);
}

TEST_CASE("fosd comparative statics on the documented pairs") {
  const ModelParams p = MildExampleParams();
  for (auto [lo1, lo2] : {std::pair{0.3, 0.0}, std::pair{0.5, 0.2}}) {
    const FosdReport r = FosdComparativeStaticsCheck(
        p, BoundedCdf::Uniform(lo1, 1.0), BoundedCdf::Uniform(lo2, 1.0));
    CHECK(r.applicable);
    CHECK(r.revealed_1 > r.revealed_2);
    CHECK(r.total_1 < r.total_2);
    CHECK(r.Pass());
  }
}

TEST_CASE("fosd check is not applicable to equal distributions") {
  const BoundedCdf u = BoundedCdf::Uniform(0.0, 1.0);
  const FosdReport r = FosdComparativeStaticsCheck(MildExampleParams(), u, u);
  CHECK_FALSE(r.applicable);
  CHECK_FALSE(r.Pass());
}

TEST_CASE("fosd check raises when the assumption fails") {
  CHECK_THROWS_AS(
      FosdComparativeStaticsCheck(MildExampleParams(),
                                  BoundedCdf::Uniform(0.7, 1.0),
                                  BoundedCdf::Uniform(0.0, 1.0)),
      AssumptionViolation);
}

TEST_CASE("limit check approaches both degenerate-cost limits") {
  const ModelParams p = MildExampleParams();
  const LimitReport r = LimitCheckDegenerateCosts(p, {0.5, 0.1, 0.02});
  CHECK(r.prohibitive_final < 0.05);
  CHECK(r.negligible_final > 0.95);
  CHECK(r.target.negligible == 1.0);
  double prev = 2.0;
  for (const LimitEntry& e : r.entries) {
    if (e.family != "prohibitive") continue;
    CHECK_FALSE(e.skipped);
    CHECK(e.h_at_threshold <= prev);
    prev = e.h_at_threshold;
  }
}

TEST_CASE("limit check converges to the interior negligible-cost limit") {
  ModelParams p = MildExampleParams();
  p.alpha_g = 0.4;
  const LimitReport r =
      LimitCheckDegenerateCosts(p, {0.5, 0.1, 0.02, 0.005, 0.002, 0.001});
  CHECK(r.target.negligible == doctest::Approx(0.6857).epsilon(1e-4));
  CHECK(r.negligible_gap < 0.01);
}

TEST_CASE("limit check validates the eps sequence") {
  const ModelParams p = MildExampleParams();
  CHECK_THROWS_AS(LimitCheckDegenerateCosts(p, {}), DomainError);
  CHECK_THROWS_AS(LimitCheckDegenerateCosts(p, {0.1, 0.2}), DomainError);
  CHECK_THROWS_AS(LimitCheckDegenerateCosts(p, {1.5}), DomainError);
}

TEST_CASE("effect increases strictly in q under the mild example") {
  const MonotonicityReport r =
      MonotonicityCheck(MildExampleParams(), EffectAxis::kQ, 0.55, 0.75, 9);
  CHECK(r.assumption == "mild");
  CHECK(r.axis_values.size() == 9);
  CHECK_FALSE(r.truncated);
  for (size_t k = 0; k + 1 < r.effect.size(); ++k) {
    CHECK(r.effect[k + 1] > r.effect[k]);
  }
  CHECK(r.Pass());
}

TEST_CASE("effect increases in gamma under the severe example") {
  const MonotonicityReport r = MonotonicityCheck(
      SevereExampleParams(), EffectAxis::kGamma, 0.3, 0.5, 9);
  CHECK(r.assumption == "severe");
  CHECK(r.Pass());
  CHECK(r.effect.back() == doctest::Approx(-0.65));
}

TEST_CASE("G-shift axis raises the effect under the mild example") {
  const MonotonicityReport r = MonotonicityCheck(
      MildExampleParams(), EffectAxis::kGShift, 0.0, 0.3, 9);
  CHECK(r.Pass());
  CHECK(r.effect.back() > r.effect.front());
  CHECK_THROWS_AS(MonotonicityCheck(SevereExampleParams(), EffectAxis::kGShift,
                                    0.0, 0.1, 9),
                  RejectedInput);
}

TEST_CASE("beta_B axis reaching beta_G is rejected up front") {
  CHECK_THROWS_AS(MonotonicityCheck(MildExampleParams(), EffectAxis::kBetaB,
                                    -1.0, 2.5, 9),
                  RejectedInput);
}

TEST_CASE("grid points breaking the assumption truncate the grid") {
  // q below about 0.46 violates the mild clause alpha_G < G(beta^e).
  const MonotonicityReport r =
      MonotonicityCheck(MildExampleParams(), EffectAxis::kQ, 0.3, 0.7, 9);
  CHECK(r.truncated);
  CHECK_FALSE(r.note.empty());
  CHECK(r.axis_values.size() < 9);
  CHECK(r.Pass());
}

TEST_CASE("randomized sign laws hold on both assumption regions") {
  const SignLawReport mild = MildSignLaw(150, 1);
  CHECK(mild.Pass(150));
  CHECK(mild.positive_effects > 0);
  CHECK(mild.positive_effects < mild.accepted);
  CHECK(mild.acceptance_rate > 0.0);
  const SignLawReport severe = SevereSignLaw(150, 1);
  CHECK(severe.Pass(150));
  CHECK(severe.positive_effects == 0);
}

TEST_CASE("random candidates are deterministic in seed and index") {
  const ModelParams a = RandomMildCandidate(4, 17);
  const ModelParams b = RandomMildCandidate(4, 17);
  CHECK(a.gamma == b.gamma);
  CHECK(a.protest_cost == b.protest_cost);
  CHECK(RandomSevereCandidate(4, 17).alpha_b < RandomSevereCandidate(4, 17).alpha_g);
}

}  // namespace
}  // namespace repression

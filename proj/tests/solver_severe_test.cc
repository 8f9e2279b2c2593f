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
#include <vector>

#include "oracles.h"
#include "repression/solver_severe.h"
#include "repression/verify.h"

namespace repression {
namespace {

oracle::UniformSevere SevereOracle(const ModelParams& p) {
  return {p.gamma, p.q, p.beta_g, p.beta_b, p.alpha_b};
}

TEST_CASE("severe example thresholds match the quadratic") {
  const SevereEquilibrium eq = SolveSevere(SevereExampleParams());
  const double x = oracle::SevereExampleBad();
  CHECK(x == doctest::Approx(0.2285271).epsilon(1e-7));
  CHECK(std::abs(eq.c_tilde_b - x) <= 1e-9);
  CHECK(std::abs(eq.c_tilde_g - (x + 0.5)) <= 1e-9);
  CHECK_FALSE(eq.corner);
  CHECK(eq.multiplicity_note.empty());
}

TEST_CASE("severe example thresholds match a zooming grid search") {
  const ModelParams p = SevereExampleParams();
  const auto [cb, cg] = SevereOracle(p).ZoomSearch();
  const SevereEquilibrium eq = SolveSevere(p);
  CHECK(std::abs(eq.c_tilde_b - cb) <= 1e-6);
  CHECK(std::abs(eq.c_tilde_g - cg) <= 1e-6);
}

TEST_CASE("severe example gap, beliefs and effect") {
  const ModelParams p = SevereExampleParams();
  const SevereEquilibrium eq = SolveSevere(p);
  CHECK(std::abs((eq.c_tilde_g - eq.c_tilde_b) - 0.5) <= 1e-8);
  CHECK(std::abs(eq.d - (-0.7)) <= 1e-10);
  CHECK(eq.mu_r.good == 1.0);
  CHECK(eq.p_r == doctest::Approx(0.9));
  // Differential concealment moves the no-news odds away from the prior.
  const double odds = eq.mu_nn.good / eq.mu_nn.bad;
  CHECK(odds == doctest::Approx(eq.c_tilde_g / eq.c_tilde_b).epsilon(1e-12));
  CHECK(std::abs(odds - 1.0) > 0.1);
  CHECK(std::abs(eq.residual_b) <= kDefaultTol);
  CHECK(std::abs(eq.residual_g) <= kDefaultTol);
  CHECK(SevereEffect(p) == doctest::Approx(-0.7));
}

TEST_CASE("severe probabilities partition organized activists") {
  const SevereEquilibrium eq = SolveSevere(SevereExampleParams());
  const double b = eq.c_tilde_b, g = eq.c_tilde_g;
  CHECK(eq.prob.revealed == doctest::Approx(0.5 * (1.0 - g)));
  CHECK(eq.prob.concealed == doctest::Approx(0.5 * g + 0.5 * b));
  CHECK(eq.prob.concession == doctest::Approx(0.5 * (1.0 - b)));
  CHECK(eq.prob.revealed + eq.prob.concealed + eq.prob.concession ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("corner solution when bad types are never worth concealing") {
  ModelParams p = SevereExampleParams();
  p.alpha_b = 0.05;
  REQUIRE(CheckSevereConflict(p).Pass());
  const SevereEquilibrium eq = SolveSevere(p);
  CHECK(eq.corner);
  CHECK(eq.c_tilde_b == 0.0);
  // Good threshold solves 0.2 c^2 + 0.6 c - 0.54 = 0.
  CHECK(std::abs(eq.c_tilde_g - oracle::QuadraticRoot(0.2, 0.6, -0.54)) <=
        1e-9);
  const auto [cb, cg] = SevereOracle(p).ZoomSearch();
  CHECK(std::abs(eq.c_tilde_g - cg) <= 1e-6);
  CHECK(cb <= 1e-6);
  const RegretReport cert = CertifySevere(p, eq, 1000);
  CHECK(cert.Pass());
}

TEST_CASE("solve rejects parameters outside the severe assumption") {
  CHECK_THROWS_AS(SolveSevere(MildExampleParams()), AssumptionViolation);
}

TEST_CASE("interior residual changes sign once on the example") {
  const ModelParams p = SevereExampleParams();
  int changes = 0;
  double prev = SevereInteriorResidual(p, 0.0);
  for (int i = 1; i <= 400; ++i) {
    const double r = SevereInteriorResidual(p, 0.4 * i / 400.0);
    if ((r > 0) != (prev > 0)) ++changes;
    prev = r;
  }
  CHECK(changes == 1);
}

TEST_CASE("fixed-point map is stationary at the solution") {
  const ModelParams p = SevereExampleParams();
  const SevereEquilibrium eq = SolveSevere(p);
  const auto [nb, ng] = SevereFixedPointMap(p, eq.c_tilde_b, eq.c_tilde_g);
  CHECK(std::abs(nb - eq.c_tilde_b) <= 1e-9);
  CHECK(std::abs(ng - eq.c_tilde_g) <= 1e-9);
  const auto [ob, og] = SevereOracle(p).Map(eq.c_tilde_b, eq.c_tilde_g);
  CHECK(nb == doctest::Approx(ob).epsilon(1e-13));
  CHECK(ng == doctest::Approx(og).epsilon(1e-13));
}

TEST_CASE("serial and parallel residual scans agree exactly") {
  const ModelParams p = SevereExampleParams();
  const ScanBox box = SevereScanBox(p, 120);
  std::vector<double> serial(120 * 120), parallel(120 * 120);
  ScanFixedPointResidualSerial(p, box, serial);
  ScanFixedPointResidualParallel(p, box, parallel);
  CHECK(serial == parallel);
  const auto [cb, cg] = SevereOracle(p).Map(box.BadAt(7), box.GoodAt(99));
  const double want =
      std::max(std::abs(cb - box.BadAt(7)), std::abs(cg - box.GoodAt(99)));
  CHECK(serial[7 * 120 + 99] == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("scan grid does not change the primary fixed point") {
  const ModelParams p = SevereExampleParams();
  SevereOptions no_scan;
  no_scan.scan_grid = 0;
  const SevereEquilibrium a = SolveSevere(p);
  const SevereEquilibrium b = SolveSevere(p, no_scan);
  CHECK(a.c_tilde_b == b.c_tilde_b);
  CHECK(a.c_tilde_g == b.c_tilde_g);
}

}  // namespace
}  // namespace repression

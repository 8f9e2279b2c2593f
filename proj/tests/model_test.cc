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

#include <random>

#include "repression/model.h"

namespace repression {
namespace {

TEST_CASE("prior splits organized activists by q") {
  const ModelParams p = MildExampleParams();
  const Belief prior = Prior(p);
  CHECK(prior.good == doctest::Approx(0.26));
  CHECK(prior.bad == doctest::Approx(0.14));
  CHECK(prior.none == doctest::Approx(0.6));
  CHECK(prior.IsValid());
  CHECK(ExpectedPolicyPayoff(p) == doctest::Approx(1.275));
}

TEST_CASE("protest probability under the prior is G(gamma beta^e)") {
  const ModelParams p = MildExampleParams();
  CHECK(ProtestCutoff(Prior(p), p) == doctest::Approx(0.51));
  CHECK(ProtestProbability(Prior(p), p) == doctest::Approx(0.51));
}

TEST_CASE("protest probability clamps outside the cost support") {
  const ModelParams p = MildExampleParams();
  CHECK(ProtestProbability({1.0, 0.0, 0.0}, p) == 1.0);  // cutoff 2.5
  CHECK(ProtestProbability({0.0, 1.0, 0.0}, p) == 0.0);  // cutoff -1
}

TEST_CASE("property: protest cutoff is linear in the belief") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const ModelParams p = MildExampleParams();
  for (int i = 0; i < 500; ++i) {
    const Belief a = Belief::FromWeights(u(gen), u(gen), u(gen));
    const Belief b = Belief::FromWeights(u(gen), u(gen), u(gen));
    const double t = u(gen);
    const Belief mix{t * a.good + (1 - t) * b.good,
                     t * a.bad + (1 - t) * b.bad,
                     t * a.none + (1 - t) * b.none};
    CHECK(ProtestCutoff(mix, p) ==
          doctest::Approx(t * ProtestCutoff(a, p) +
                          (1 - t) * ProtestCutoff(b, p))
              .epsilon(1e-12));
  }
}

TEST_CASE("belief normalization") {
  const Belief b = Belief::FromWeights(1.0, 3.0, 4.0);
  CHECK(b.good == doctest::Approx(0.125));
  CHECK(b.Of(ActivistType::kBad) == doctest::Approx(0.375));
  CHECK(b.Of(ActivistType::kNone) == doctest::Approx(0.5));
  CHECK(b.IsValid());
  CHECK_FALSE(Belief{0.5, 0.6, 0.0}.IsValid());
  CHECK_FALSE(Belief{-0.1, 0.6, 0.5}.IsValid());
}

TEST_CASE("validate rejects type-invalid parameters") {
  ModelParams p = MildExampleParams();
  CHECK_NOTHROW(p.Validate());
  p.gamma = 1.0;
  CHECK_THROWS_AS(p.Validate(), RejectedInput);
  p = MildExampleParams();
  p.beta_b = 2.5;
  CHECK_THROWS_AS(p.Validate(), RejectedInput);
  p = MildExampleParams();
  p.beta_g = -0.1;
  p.beta_b = -1.0;
  CHECK_THROWS_AS(p.Validate(), RejectedInput);
  p = MildExampleParams();
  p.alpha_b = 0.0;
  CHECK_THROWS_AS(p.Validate(), RejectedInput);
  p = MildExampleParams();
  p.concealment_cost = BoundedCdf::Uniform(-0.5, 1.0);
  CHECK_THROWS_AS(p.Validate(), RejectedInput);
}

TEST_CASE("mild example satisfies every mild clause") {
  const AssumptionReport r = CheckMildConflict(MildExampleParams());
  CHECK(r.assumption == "mild");
  REQUIRE(r.clauses.size() == 6);
  CHECK(r.Pass());
  CHECK(r.FailedClauses().empty());
  CHECK_FALSE(CheckSevereConflict(MildExampleParams()).Pass());
}

TEST_CASE("lowering alpha_B below alpha_G breaks clause 1") {
  ModelParams p = MildExampleParams();
  p.alpha_b = 0.5;
  const AssumptionReport r = CheckMildConflict(p);
  CHECK_FALSE(r.Pass());
  REQUIRE_FALSE(r.FailedClauses().empty());
  CHECK(r.FailedClauses().front() == 1);
  CHECK(r.Summary().find("clause 1") != std::string::npos);
}

TEST_CASE("interior-bound clause tolerates H(alpha_G) = 0") {
  ModelParams p = MildExampleParams();
  p.concealment_cost = BoundedCdf::Uniform(0.7, 1.0);
  const AssumptionReport r = CheckMildConflict(p);
  CHECK(r.clauses[5].rhs == 0.0);
  CHECK_FALSE(r.clauses[5].pass);
  CHECK_FALSE(r.clauses[3].pass);
}

TEST_CASE("severe example satisfies every severe clause") {
  const AssumptionReport r = CheckSevereConflict(SevereExampleParams());
  CHECK(r.assumption == "severe");
  REQUIRE(r.clauses.size() == 5);
  CHECK(r.Pass());
  CHECK_FALSE(CheckMildConflict(SevereExampleParams()).Pass());
}

TEST_CASE("assumption violation carries its report") {
  ModelParams p = MildExampleParams();
  p.alpha_b = 0.5;
  const AssumptionViolation e(CheckMildConflict(p));
  CHECK_FALSE(e.report().Pass());
  CHECK(std::string(e.what()).find("fails") != std::string::npos);
}

}  // namespace
}  // namespace repression

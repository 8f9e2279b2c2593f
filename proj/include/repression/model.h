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

// Primitives of the repression game: parameters, public beliefs, the
// public's cutoff protest rule, and the mild/severe conflict assumptions.

#ifndef REPRESSION_MODEL_H_
#define REPRESSION_MODEL_H_

#include <string>
#include <vector>

#include "repression/distributions.h"
#include "repression/errors.h"

namespace repression {

// Activist type: good, bad, or unorganized (no activist).
enum class ActivistType { kGood = 0, kBad = 1, kNone = 2 };

struct ModelParams {
  double gamma = 0.0;    // probability activists organize
  double q = 0.0;        // probability an organized activist is good
  double beta_g = 0.0;   // public payoff from the good policy
  double beta_b = 0.0;   // public payoff from the bad policy
  double alpha_g = 0.0;  // regime's cost of conceding to a good activist
  double alpha_b = 0.0;  // regime's cost of conceding to a bad activist
  BoundedCdf protest_cost = BoundedCdf::Uniform(0.0, 1.0);       // G
  BoundedCdf concealment_cost = BoundedCdf::Uniform(0.0, 1.0);   // H

  // Throws RejectedInput when a type invariant fails.
  void Validate() const;
};

// The two parameter sets used throughout the tests and documentation.
// P1 is the mild-conflict example, P2 the severe-conflict example.
ModelParams MildExampleParams();
ModelParams SevereExampleParams();

// Public belief over {G, B, N}.
struct Belief {
  double good = 0.0;
  double bad = 0.0;
  double none = 0.0;

  // Normalizes nonnegative weights onto the simplex.
  static Belief FromWeights(double good, double bad, double none);
  double Of(ActivistType t) const;
  bool IsValid(double tol = 1e-12) const;
};

Belief Prior(const ModelParams& params);

// Expected policy payoff from a successful revolt under the prior,
// q*beta_G + (1-q)*beta_B.
double ExpectedPolicyPayoff(const ModelParams& params);

// Protest-cost cutoff: the public protests iff rho <= ProtestCutoff(belief).
double ProtestCutoff(const Belief& belief, const ModelParams& params);

// G(ProtestCutoff(belief)), with the clamped CDF.
double ProtestProbability(const Belief& belief, const ModelParams& params);

struct AssumptionClause {
  std::string name;
  std::string relation;  // "<" or ">"
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct AssumptionReport {
  std::string assumption;  // "mild" or "severe"
  std::vector<AssumptionClause> clauses;

  bool Pass() const;
  // Indices (1-based) of failing clauses.
  std::vector<int> FailedClauses() const;
  std::string Summary() const;
};

// Six-clause mild-conflict check (alpha_G < alpha_B family).
AssumptionReport CheckMildConflict(const ModelParams& params);
// Five-clause severe-conflict check (alpha_B < alpha_G family).
AssumptionReport CheckSevereConflict(const ModelParams& params);

// Raised by solvers whose assumption check fails; carries the report.
class AssumptionViolation : public RejectedInput {
 public:
  explicit AssumptionViolation(AssumptionReport report);
  const AssumptionReport& report() const { return report_; }

 private:
  AssumptionReport report_;
};

}  // namespace repression

#endif  // REPRESSION_MODEL_H_

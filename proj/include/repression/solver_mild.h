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

// Mild conflict of interest (alpha_G < alpha_B).
//
// The regime conceals repression of every organized activist whose
// concealment cost lies below a single threshold c_tilde. Above it, bad
// activists are always repressed in public, and good activists are repressed
// in public with likelihood ratio kappa relative to bad ones (otherwise
// conceded to). The threshold solves
//
//   gamma H(c) / (gamma H(c) + 1 - gamma) * beta^e = G^{-1}(alpha_G - c)
//
// on (H.lo, alpha_G). All repression probabilities are conditional on an
// organized activist.

#ifndef REPRESSION_SOLVER_MILD_H_
#define REPRESSION_SOLVER_MILD_H_

#include "repression/model.h"
#include "repression/root_finding.h"

namespace repression {

struct RepressionProbabilities {
  double revealed_given_good = 0.0;
  double revealed_given_bad = 0.0;
  double revealed = 0.0;
  double concealed = 0.0;
  double total = 0.0;
  double concession = 0.0;
};

struct MildEquilibrium {
  double c_tilde = 0.0;
  double kappa = 0.0;
  double gamma_prime = 0.0;  // P(organized | no news)
  Belief mu_r;               // posterior after revealed repression
  Belief mu_nn;              // posterior after no news
  double q_prime = 0.0;      // mu_r.good
  RepressionProbabilities prob;
  double p_r = 0.0;          // protest probability after revealed repression
  double p_nn = 0.0;         // protest probability after no news
  double p_prior = 0.0;      // protest probability under the prior
  double d = 0.0;            // deterrence (> 0) or backlash (< 0) effect
  double d_lower = 0.0;      // p_nn - p_r, a lower bound on d
  double residual = 0.0;     // threshold-equation residual at c_tilde
};

// Threshold-equation residual
//   gamma'(c) beta^e - G^{-1}(alpha_G - c),
// nondecreasing minus strictly decreasing, hence strictly increasing in c.
// Requires alpha_G - c in [0, 1].
double MildThresholdResidual(const ModelParams& params, double c);

// The same equation in CDF form, G(gamma'(c) beta^e) - (alpha_G - c). Well
// conditioned where G^{-1} is steep.
double MildThresholdCdfResidual(const ModelParams& params, double c);

// P(organized | no news) when organized activists are concealed with
// probability h.
double NoNewsOrganizedShare(double gamma, double h);

// Closed-form likelihood ratio of public repression, good versus bad.
double MildKappa(const ModelParams& params);

// Solves the unique mild-conflict equilibrium, refining the threshold to
// adjacent doubles. Throws AssumptionViolation if the mild-conflict check
// fails and SolverError if the threshold equation cannot be bracketed or
// neither residual form is within tol at the refined root.
MildEquilibrium SolveMild(const ModelParams& params, double tol = kDefaultTol);

// Roots the threshold equation on [lo, hi] without the assumption gate.
// Used for limit studies where H degenerates.
RootResult SolveMildThresholdEquation(const ModelParams& params, double lo,
                                      double hi, double tol = kDefaultTol);

// The six conditional probabilities at an equilibrium threshold. Cross-checks
// the kappa-form against the beta-form of revealed and total repression and
// throws SolverError if they disagree beyond 1e-12.
RepressionProbabilities MildRepressionProbabilities(const MildEquilibrium& eq,
                                                    const ModelParams& params);

// Unconditional view: each probability multiplied by gamma.
RepressionProbabilities Unconditional(const RepressionProbabilities& prob,
                                      double gamma);

// Plug-in total-repression estimator 1 - (q - q')/(1 - q) * p. Throws
// DomainError unless 0 < q < 1 and q' < q.
double EstimateTotalRepression(double q, double q_prime, double p_revealed);

struct ConcealmentEstimate {
  double value = 0.0;
  bool consistent = true;  // false when value falls outside [0,1]
};

// Plug-in estimate of H(c_tilde): 1 - (1 - q')/(1 - q) * p.
ConcealmentEstimate EstimateConcealment(double q, double q_prime,
                                        double p_revealed);

// D = G(gamma beta^e) - alpha_G.
double MildEffect(const ModelParams& params, const MildEquilibrium& eq);

// D_lower = p_nn - p_r.
double MildEffectLowerBound(const MildEquilibrium& eq);

struct DegenerateLimits {
  double prohibitive = 0.0;  // H(c_tilde) when concealment is almost never cheap
  double negligible = 0.0;   // H(c_tilde) when concealment is almost free
  bool all_conceal = false;  // negligible-cost branch with G(gamma beta^e) < alpha_G
};

// Limits of H(c_tilde) as H degenerates. Throws RejectedInput when the
// second negligible-cost branch has a nonpositive denominator.
DegenerateLimits MildDegenerateLimits(const ModelParams& params);

// Equilibrium when the regime cannot concede: conceal below c_tilde, reveal
// above it.
struct NoConcessionEquilibrium {
  double c_tilde = 0.0;
  double gamma_prime = 0.0;
  Belief mu_r;
  Belief mu_nn;
  double p_r = 0.0;
  double p_nn = 0.0;
  double p_prior = 0.0;
  double prob_revealed = 0.0;
  double prob_concealed = 0.0;
  double residual = 0.0;
};

// Roots c = G(beta^e) - G(gamma'(c) beta^e) on (H.lo, G(beta^e)). Throws
// RejectedInput unless G(beta^e) > H.lo, SolverError on bracketing failure.
double SolveNoConcessionThreshold(const ModelParams& params,
                                  double tol = kDefaultTol);
NoConcessionEquilibrium SolveNoConcession(const ModelParams& params,
                                          double tol = kDefaultTol);

}  // namespace repression

#endif  // REPRESSION_SOLVER_MILD_H_

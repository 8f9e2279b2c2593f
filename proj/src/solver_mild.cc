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

#include "repression/solver_mild.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace repression {

namespace {

// Roots f on [lo, hi] after checking the sign pattern on the unclipped
// bracket; iterates on the inset bracket when it still straddles the root.
RootResult RootIncreasing(const std::function<double(double)>& f, double lo,
                          double hi, double tol, const char* what,
                          int max_iterations = kDefaultMaxIterations) {
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!(f_lo <= 0.0 && f_hi >= 0.0)) {
    std::ostringstream msg;
    msg << what << ": residual does not change sign on [" << lo << ", " << hi
        << "] (f(lo)=" << f_lo << ", f(hi)=" << f_hi << ")";
    throw SolverError(msg.str());
  }
  const double a = lo + kBracketInset;
  const double b = hi - kBracketInset;
  if (a < b && f(a) < 0.0 && f(b) > 0.0) {
    return BracketedRoot(f, a, b, tol, max_iterations);
  }
  return BracketedRoot(f, lo, hi, tol, max_iterations);
}

}  // namespace

double NoNewsOrganizedShare(double gamma, double h) {
  return gamma * h / (gamma * h + 1.0 - gamma);
}

double MildThresholdResidual(const ModelParams& params, double c) {
  const double h = params.concealment_cost.Cdf(c);
  const double lhs =
      NoNewsOrganizedShare(params.gamma, h) * ExpectedPolicyPayoff(params);
  const double p = std::clamp(params.alpha_g - c, 0.0, 1.0);
  return lhs - params.protest_cost.Quantile(p);
}

double MildThresholdCdfResidual(const ModelParams& params, double c) {
  const double h = params.concealment_cost.Cdf(c);
  const double lhs =
      NoNewsOrganizedShare(params.gamma, h) * ExpectedPolicyPayoff(params);
  return params.protest_cost.Cdf(lhs) - (params.alpha_g - c);
}

double MildKappa(const ModelParams& params) {
  const double cutoff = params.protest_cost.Quantile(params.alpha_g);
  return (1.0 - params.q) / params.q * (cutoff - params.beta_b) /
         (params.beta_g - cutoff);
}

RootResult SolveMildThresholdEquation(const ModelParams& params, double lo,
                                      double hi, double tol) {
  return RootIncreasing(
      [&params](double c) { return MildThresholdResidual(params, c); }, lo, hi,
      tol, "mild threshold equation");
}

MildEquilibrium SolveMild(const ModelParams& params, double tol) {
  params.Validate();
  AssumptionReport report = CheckMildConflict(params);
  if (!report.Pass()) throw AssumptionViolation(std::move(report));

  // Zero tolerance runs the bracket down to adjacent doubles, so quantities
  // evaluated at c_tilde satisfy their identities to rounding.
  const RootResult root = RootIncreasing(
      [&params](double c) { return MildThresholdResidual(params, c); },
      params.concealment_cost.lo(), params.alpha_g, 0.0,
      "mild threshold equation", 4 * kDefaultMaxIterations);
  if (std::min(std::abs(root.residual),
               std::abs(MildThresholdCdfResidual(params, root.x))) > tol) {
    std::ostringstream msg;
    msg << "mild threshold equation: residual " << root.residual
        << " exceeds tolerance " << tol;
    throw SolverError(msg.str());
  }

  MildEquilibrium eq;
  eq.c_tilde = root.x;
  eq.residual = root.residual;
  eq.kappa = MildKappa(params);
  const double h = params.concealment_cost.Cdf(eq.c_tilde);
  eq.gamma_prime = NoNewsOrganizedShare(params.gamma, h);
  eq.mu_r = Belief::FromWeights(eq.kappa * params.q, 1.0 - params.q, 0.0);
  eq.mu_nn = {eq.gamma_prime * params.q, eq.gamma_prime * (1.0 - params.q),
              1.0 - eq.gamma_prime};
  eq.q_prime = eq.mu_r.good;
  eq.prob = MildRepressionProbabilities(eq, params);
  eq.p_r = ProtestProbability(eq.mu_r, params);
  eq.p_nn = ProtestProbability(eq.mu_nn, params);
  eq.p_prior = ProtestProbability(Prior(params), params);
  eq.d = MildEffect(params, eq);
  eq.d_lower = MildEffectLowerBound(eq);
  return eq;
}

RepressionProbabilities MildRepressionProbabilities(const MildEquilibrium& eq,
                                                    const ModelParams& params) {
  const double h = params.concealment_cost.Cdf(eq.c_tilde);
  const double q = params.q;
  RepressionProbabilities p;
  p.revealed_given_bad = 1.0 - h;
  p.revealed_given_good = eq.kappa * (1.0 - h);
  p.revealed = (eq.kappa * q + 1.0 - q) * (1.0 - h);
  p.concealed = h;
  p.total = 1.0 - q * (1.0 - eq.kappa) * (1.0 - h);
  p.concession = 1.0 - p.total;

  const double cutoff = params.protest_cost.Quantile(params.alpha_g);
  const double spread = params.beta_g - cutoff;
  const double revealed_beta =
      (params.beta_g - params.beta_b) / spread * (1.0 - q) * (1.0 - h);
  const double total_beta =
      1.0 - (ExpectedPolicyPayoff(params) - cutoff) / spread * (1.0 - h);
  if (std::abs(revealed_beta - p.revealed) > 1e-12 ||
      std::abs(total_beta - p.total) > 1e-12) {
    std::ostringstream msg;
    msg << "repression probabilities disagree across closed forms: revealed "
        << p.revealed << " vs " << revealed_beta << ", total " << p.total
        << " vs " << total_beta;
    throw SolverError(msg.str());
  }
  return p;
}

RepressionProbabilities Unconditional(const RepressionProbabilities& prob,
                                      double gamma) {
  RepressionProbabilities u = prob;
  u.revealed_given_good *= gamma;
  u.revealed_given_bad *= gamma;
  u.revealed *= gamma;
  u.concealed *= gamma;
  u.total *= gamma;
  u.concession *= gamma;
  return u;
}

double EstimateTotalRepression(double q, double q_prime, double p_revealed) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("total-repression estimator needs 0 < q < 1");
  }
  if (!(q_prime < q)) {
    throw DomainError("total-repression estimator needs q' < q");
  }
  return 1.0 - (q - q_prime) / (1.0 - q) * p_revealed;
}

ConcealmentEstimate EstimateConcealment(double q, double q_prime,
                                        double p_revealed) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("concealment estimator needs 0 < q < 1");
  }
  ConcealmentEstimate e;
  e.value = 1.0 - (1.0 - q_prime) / (1.0 - q) * p_revealed;
  e.consistent = e.value >= 0.0 && e.value <= 1.0;
  return e;
}

double MildEffect(const ModelParams& params, const MildEquilibrium& eq) {
  const double prior_cutoff = params.gamma * ExpectedPolicyPayoff(params);
  return params.protest_cost.Cdf(prior_cutoff) - eq.p_r;
}

double MildEffectLowerBound(const MildEquilibrium& eq) {
  return eq.p_nn - eq.p_r;
}

DegenerateLimits MildDegenerateLimits(const ModelParams& params) {
  params.Validate();
  const double be = ExpectedPolicyPayoff(params);
  DegenerateLimits lim;
  lim.prohibitive = 0.0;
  if (params.protest_cost.Cdf(params.gamma * be) < params.alpha_g) {
    lim.negligible = 1.0;
    lim.all_conceal = true;
    return lim;
  }
  const double cutoff = params.protest_cost.Quantile(params.alpha_g);
  const double denom = be - cutoff;
  if (!(denom > 0.0)) {
    throw RejectedInput(
        "negligible-cost limit undefined: beta^e <= G^{-1}(alpha_G)");
  }
  lim.negligible = (1.0 - params.gamma) / params.gamma * cutoff / denom;
  return lim;
}

double SolveNoConcessionThreshold(const ModelParams& params, double tol) {
  params.Validate();
  const BoundedCdf& g = params.protest_cost;
  const double be = ExpectedPolicyPayoff(params);
  const double upper = g.Cdf(be);
  const double lower = params.concealment_cost.lo();
  if (!(upper > lower)) {
    throw RejectedInput("no-concession threshold needs G(beta^e) > H.lo");
  }
  auto residual = [&](double c) {
    const double gp =
        NoNewsOrganizedShare(params.gamma, params.concealment_cost.Cdf(c));
    return c - upper + g.Cdf(gp * be);
  };
  return RootIncreasing(residual, lower, upper, tol,
                        "no-concession threshold equation")
      .x;
}

NoConcessionEquilibrium SolveNoConcession(const ModelParams& params,
                                          double tol) {
  NoConcessionEquilibrium eq;
  eq.c_tilde = SolveNoConcessionThreshold(params, tol);
  const double h = params.concealment_cost.Cdf(eq.c_tilde);
  const double be = ExpectedPolicyPayoff(params);
  eq.gamma_prime = NoNewsOrganizedShare(params.gamma, h);
  eq.mu_r = {params.q, 1.0 - params.q, 0.0};
  eq.mu_nn = {eq.gamma_prime * params.q, eq.gamma_prime * (1.0 - params.q),
              1.0 - eq.gamma_prime};
  eq.p_r = ProtestProbability(eq.mu_r, params);
  eq.p_nn = ProtestProbability(eq.mu_nn, params);
  eq.p_prior = ProtestProbability(Prior(params), params);
  eq.prob_revealed = 1.0 - h;
  eq.prob_concealed = h;
  eq.residual = eq.c_tilde - params.protest_cost.Cdf(be) + eq.p_nn;
  return eq;
}

}  // namespace repression

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

#include "repression/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace repression {
namespace {

// Actions in the support of the prescribed strategy at one type.
struct Support {
  bool conceal = false;
  bool reveal = false;
  bool concede = false;
};

Support Prescribed(ActivistType theta, double c, const Strategy& s) {
  Support out;
  const bool good = theta == ActivistType::kGood;
  switch (s.variant) {
    case Variant::kMild:
      if (c <= s.c_tilde) {
        out.conceal = true;
      } else if (!good) {
        out.reveal = true;
      } else {
        out.reveal = s.reveal_mix > 0.0;
        out.concede = s.reveal_mix < 1.0;
      }
      break;
    case Variant::kSevere:
      if (c <= (good ? s.c_tilde_g : s.c_tilde_b)) {
        out.conceal = true;
      } else if (good) {
        out.reveal = true;
      } else {
        out.concede = true;
      }
      break;
    case Variant::kNoConcession:
      if (c <= s.c_tilde) {
        out.conceal = true;
      } else {
        out.reveal = true;
      }
      break;
  }
  return out;
}

RegretReport GridRegret(const ModelParams& params, const Strategy& strategy,
                        double p_r, double p_nn, int grid) {
  if (grid < 2) throw DomainError("best-response grid needs at least 2 points");
  const BoundedCdf& h = params.concealment_cost;
  const bool can_concede = strategy.variant != Variant::kNoConcession;
  RegretReport r;
  for (ActivistType theta : {ActivistType::kGood, ActivistType::kBad}) {
    for (int i = 0; i < grid; ++i) {
      const double c = h.lo() + (h.hi() - h.lo()) * i / (grid - 1);
      const ActionPayoffs pay = RegimePayoffs(params, theta, c, p_r, p_nn);
      double best = std::max(pay.conceal, pay.reveal);
      if (can_concede) best = std::max(best, pay.concede);
      const Support s = Prescribed(theta, c, strategy);
      double worst_in_support = std::numeric_limits<double>::infinity();
      double best_in_support = -std::numeric_limits<double>::infinity();
      for (auto [in, v] : {std::pair{s.conceal, pay.conceal},
                           std::pair{s.reveal, pay.reveal},
                           std::pair{s.concede, pay.concede}}) {
        if (!in) continue;
        worst_in_support = std::min(worst_in_support, v);
        best_in_support = std::max(best_in_support, v);
      }
      const double regret = std::max(0.0, best - worst_in_support);
      if (regret > r.max_regret) {
        r.max_regret = regret;
        r.worst_theta = theta;
        r.worst_c = c;
      }
      if (s.reveal && s.concede) {
        r.indifference_gap =
            std::max(r.indifference_gap, best_in_support - worst_in_support);
      }
    }
  }
  return r;
}

double MaxComponentGap(const Belief& a, const Belief& b) {
  return std::max({std::abs(a.good - b.good), std::abs(a.bad - b.bad),
                   std::abs(a.none - b.none)});
}

// Bayes update over the prior given P(reveal | theta) and P(conceal | theta)
// for the two organized types; unorganized activists always yield no news.
void BayesUpdate(const ModelParams& params, double reveal_g, double reveal_b,
                 double conceal_g, double conceal_b, const Belief& mu_r,
                 const Belief& mu_nn, RegretReport& r) {
  const Belief prior = Prior(params);
  const double w_rg = prior.good * reveal_g;
  const double w_rb = prior.bad * reveal_b;
  r.reveal_on_path = w_rg + w_rb > 0.0;
  double gap = MaxComponentGap(
      Belief::FromWeights(prior.good * conceal_g, prior.bad * conceal_b,
                          prior.none),
      mu_nn);
  if (r.reveal_on_path) {
    gap = std::max(gap, MaxComponentGap(Belief::FromWeights(w_rg, w_rb, 0.0),
                                        mu_r));
  }
  r.bayes_gap = gap;
}

void Append(std::vector<IdentityGap>& out, std::string name, double value,
            double tolerance) {
  out.push_back({std::move(name), value, tolerance});
}

bool IdentitiesPass(const std::vector<IdentityGap>& gaps) {
  return std::all_of(gaps.begin(), gaps.end(),
                     [](const IdentityGap& g) { return g.Pass(); });
}

std::string Fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

bool RegretReport::Pass() const {
  return max_regret <= kRegretTolerance &&
         indifference_gap <= kRegretTolerance && bayes_gap <= kBayesTolerance &&
         reveal_on_path && IdentitiesPass(identity_gaps);
}

ActionPayoffs RegimePayoffs(const ModelParams& params, ActivistType theta,
                            double c, double p_r, double p_nn) {
  if (theta == ActivistType::kNone) {
    throw DomainError("the regime has no move without an organized activist");
  }
  const double alpha =
      theta == ActivistType::kGood ? params.alpha_g : params.alpha_b;
  return {1.0 - p_nn - c, 1.0 - p_r, 1.0 - alpha};
}

RegretReport BestResponseCheck(const ModelParams& params,
                               const MildEquilibrium& eq, int grid) {
  return GridRegret(params, PlayFor(eq).strategy, eq.p_r, eq.p_nn, grid);
}

RegretReport BestResponseCheck(const ModelParams& params,
                               const SevereEquilibrium& eq, int grid) {
  return GridRegret(params, PlayFor(eq).strategy, eq.p_r, eq.p_nn, grid);
}

RegretReport BestResponseCheck(const ModelParams& params,
                               const NoConcessionEquilibrium& eq, int grid) {
  return GridRegret(params, PlayFor(eq).strategy, eq.p_r, eq.p_nn, grid);
}

RegretReport BayesConsistencyCheck(const ModelParams& params,
                                   const MildEquilibrium& eq) {
  const double hc = params.concealment_cost.Cdf(eq.c_tilde);
  RegretReport r;
  BayesUpdate(params, eq.kappa * (1.0 - hc), 1.0 - hc, hc, hc, eq.mu_r,
              eq.mu_nn, r);
  return r;
}

RegretReport BayesConsistencyCheck(const ModelParams& params,
                                   const SevereEquilibrium& eq) {
  const BoundedCdf& h = params.concealment_cost;
  const double hg = h.Cdf(eq.c_tilde_g);
  const double hb = h.Cdf(eq.c_tilde_b);
  RegretReport r;
  BayesUpdate(params, 1.0 - hg, 0.0, hg, hb, eq.mu_r, eq.mu_nn, r);
  return r;
}

std::vector<IdentityGap> MildIdentityGaps(const ModelParams& params,
                                          const MildEquilibrium& eq,
                                          double tol) {
  const double q = params.q;
  const double hc = params.concealment_cost.Cdf(eq.c_tilde);
  const double root_tol = 10.0 * tol;
  const RepressionProbabilities& p = eq.prob;
  std::vector<IdentityGap> out;
  Append(out, "revealed_plus_concealed_minus_total",
         p.revealed + p.concealed - p.total, kExactIdentityTolerance);
  Append(out, "estimator_total_minus_total",
         EstimateTotalRepression(q, eq.q_prime, p.revealed) - p.total,
         kExactIdentityTolerance);
  Append(out, "estimator_h_minus_h",
         EstimateConcealment(q, eq.q_prime, p.revealed).value - hc,
         kExactIdentityTolerance);
  Append(out, "q_prime_odds_minus_kappa_odds",
         eq.q_prime / (1.0 - eq.q_prime) - eq.kappa * q / (1.0 - q),
         kExactIdentityTolerance);
  Append(out, "nn_odds_minus_prior_odds",
         eq.mu_nn.good / eq.mu_nn.bad - q / (1.0 - q),
         kExactIdentityTolerance);
  Append(out, "p_r_minus_alpha_g", eq.p_r - params.alpha_g,
         kExactIdentityTolerance);
  Append(out, "d_minus_closed_form",
         eq.d - (params.protest_cost.Cdf(params.gamma *
                                         ExpectedPolicyPayoff(params)) -
                 params.alpha_g),
         kExactIdentityTolerance);
  Append(out, "p_nn_minus_alpha_g_plus_c_tilde",
         eq.p_nn - (params.alpha_g - eq.c_tilde), root_tol);
  Append(out, "d_lower_plus_c_tilde", eq.d_lower + eq.c_tilde, root_tol);
  // The CDF form is well conditioned exactly where the quantile form is
  // steep, so a root passes if either form is small.
  const double cdf_form = MildThresholdCdfResidual(params, eq.c_tilde);
  Append(out, "threshold_residual",
         std::abs(cdf_form) < std::abs(eq.residual) ? cdf_form : eq.residual,
         root_tol);
  return out;
}

std::vector<IdentityGap> SevereIdentityGaps(const ModelParams& params,
                                            const SevereEquilibrium& eq,
                                            double tol) {
  const double q = params.q;
  const BoundedCdf& g = params.protest_cost;
  const BoundedCdf& h = params.concealment_cost;
  const double root_tol = 10.0 * tol;
  const RepressionProbabilities& p = eq.prob;
  std::vector<IdentityGap> out;
  Append(out, "probability_mass_minus_one",
         p.revealed + p.concealed + p.concession - 1.0,
         kExactIdentityTolerance);
  Append(out, "revealed_plus_concealed_minus_total",
         p.revealed + p.concealed - p.total, kExactIdentityTolerance);
  Append(out, "p_r_minus_g_beta_g", eq.p_r - g.Cdf(params.beta_g),
         kExactIdentityTolerance);
  Append(out, "d_minus_closed_form", eq.d - SevereEffect(params),
         kExactIdentityTolerance);
  const double hb = h.Cdf(eq.c_tilde_b);
  if (hb > 0.0) {
    Append(out, "nn_odds_minus_concealment_odds",
           eq.mu_nn.good / eq.mu_nn.bad -
               q * h.Cdf(eq.c_tilde_g) / ((1.0 - q) * hb),
           kExactIdentityTolerance);
  }
  if (!eq.corner) {
    Append(out, "threshold_gap_minus_closed_form",
           (eq.c_tilde_g - eq.c_tilde_b) -
               (g.Cdf(params.beta_g) - params.alpha_b),
           root_tol);
  }
  Append(out, "residual_b", eq.residual_b, root_tol);
  Append(out, "residual_g", eq.residual_g, root_tol);
  return out;
}

RegretReport CertifyMild(const ModelParams& params, const MildEquilibrium& eq,
                         int grid, double tol) {
  RegretReport r = BestResponseCheck(params, eq, grid);
  const RegretReport bayes = BayesConsistencyCheck(params, eq);
  r.bayes_gap = bayes.bayes_gap;
  r.reveal_on_path = bayes.reveal_on_path;
  r.identity_gaps = MildIdentityGaps(params, eq, tol);
  return r;
}

RegretReport CertifySevere(const ModelParams& params,
                           const SevereEquilibrium& eq, int grid,
                           double tol) {
  RegretReport r = BestResponseCheck(params, eq, grid);
  const RegretReport bayes = BayesConsistencyCheck(params, eq);
  r.bayes_gap = bayes.bayes_gap;
  r.reveal_on_path = bayes.reveal_on_path;
  r.identity_gaps = SevereIdentityGaps(params, eq, tol);
  return r;
}

FosdReport FosdComparativeStaticsCheck(const ModelParams& params,
                                       const BoundedCdf& h1,
                                       const BoundedCdf& h2) {
  FosdReport r;
  r.applicable = FosdDominates(h1, h2);
  if (!r.applicable) return r;
  ModelParams p1 = params;
  p1.concealment_cost = h1;
  ModelParams p2 = params;
  p2.concealment_cost = h2;
  const MildEquilibrium e1 = SolveMild(p1);
  const MildEquilibrium e2 = SolveMild(p2);
  r.revealed_1 = e1.prob.revealed;
  r.revealed_2 = e2.prob.revealed;
  r.total_1 = e1.prob.total;
  r.total_2 = e2.prob.total;
  r.revealed_higher_under_1 = r.revealed_1 > r.revealed_2;
  r.total_lower_under_1 = r.total_1 < r.total_2;
  return r;
}

LimitReport LimitCheckDegenerateCosts(const ModelParams& params,
                                      const std::vector<double>& eps_sequence,
                                      double tol) {
  if (eps_sequence.empty()) throw DomainError("eps sequence is empty");
  for (size_t i = 0; i < eps_sequence.size(); ++i) {
    const double e = eps_sequence[i];
    if (!(e > 0.0 && e < 1.0)) throw DomainError("eps must lie in (0,1)");
    if (i > 0 && !(e < eps_sequence[i - 1])) {
      throw DomainError("eps sequence must strictly decrease");
    }
  }
  params.Validate();
  LimitReport report;
  report.target = MildDegenerateLimits(params);
  bool have_prohibitive = false, have_negligible = false;
  for (const char* family : {"prohibitive", "negligible"}) {
    const bool prohibitive = std::string(family) == "prohibitive";
    for (double eps : eps_sequence) {
      LimitEntry entry;
      entry.family = family;
      entry.eps = eps;
      ModelParams p = params;
      p.concealment_cost = prohibitive ? BoundedCdf::Uniform(1.0 - eps, 1.0)
                                       : BoundedCdf::Uniform(0.0, eps);
      const AssumptionReport check = CheckMildConflict(p);
      entry.assumption_ok = check.Pass();
      try {
        if (entry.assumption_ok) {
          entry.c_tilde = SolveMild(p, tol).c_tilde;
        } else {
          const std::vector<int> failed = check.FailedClauses();
          const bool support_only =
              std::all_of(failed.begin(), failed.end(),
                          [](int k) { return k == 3 || k == 4 || k == 6; });
          if (!support_only) {
            entry.skipped = true;
            entry.note = "assumption fails: " + check.Summary();
          } else {
            entry.c_tilde =
                SolveMildThresholdEquation(p, 0.0, p.alpha_g, tol).x;
            entry.note =
                "H-support clauses fail; threshold equation rooted on "
                "[0, alpha_G]";
          }
        }
      } catch (const SolverError& e) {
        entry.skipped = true;
        entry.note = std::string("solver failure: ") + e.what();
      }
      if (!entry.skipped) {
        entry.h_at_threshold = p.concealment_cost.Cdf(entry.c_tilde);
        if (prohibitive) {
          report.prohibitive_final = entry.h_at_threshold;
          have_prohibitive = true;
        } else {
          report.negligible_final = entry.h_at_threshold;
          have_negligible = true;
        }
      }
      report.entries.push_back(std::move(entry));
    }
  }
  if (!have_prohibitive) {
    report.prohibitive_final = std::numeric_limits<double>::quiet_NaN();
  }
  if (!have_negligible) {
    report.negligible_final = std::numeric_limits<double>::quiet_NaN();
  }
  report.negligible_gap =
      std::abs(report.negligible_final - report.target.negligible);
  return report;
}

std::string AxisName(EffectAxis axis) {
  switch (axis) {
    case EffectAxis::kQ:
      return "q";
    case EffectAxis::kBetaB:
      return "beta_B";
    case EffectAxis::kGamma:
      return "gamma";
    case EffectAxis::kGShift:
      return "G_shift";
  }
  return "unknown";
}

MonotonicityReport MonotonicityCheck(const ModelParams& params,
                                     EffectAxis axis, double start,
                                     double end, int steps) {
  if (steps < 2) throw DomainError("monotonicity grid needs at least 2 steps");
  if (!(start < end)) throw DomainError("axis range must satisfy start < end");
  params.Validate();
  MonotonicityReport r;
  r.axis = axis;
  const bool mild = CheckMildConflict(params).Pass();
  if (!mild && !CheckSevereConflict(params).Pass()) {
    throw AssumptionViolation(CheckMildConflict(params));
  }
  r.assumption = mild ? "mild" : "severe";
  if (axis == EffectAxis::kBetaB && end >= params.beta_g) {
    throw RejectedInput("beta_B range must stay below beta_G");
  }
  const BoundedCdf& g = params.protest_cost;
  if (axis == EffectAxis::kGShift) {
    if (!mild) {
      throw RejectedInput("the G-shift axis applies under the mild assumption");
    }
    if (start < 0.0 || end >= g.hi() - g.lo()) {
      throw RejectedInput("G shift must lie in [0, G.hi - G.lo)");
    }
  }

  std::vector<double> values(steps);
  std::vector<double> effect(steps);
  std::vector<bool> valid(steps, false);
  for (int k = 0; k < steps; ++k) {
    const double v = start + (end - start) * k / (steps - 1);
    values[k] = v;
    ModelParams p = params;
    switch (axis) {
      case EffectAxis::kQ:
        p.q = v;
        break;
      case EffectAxis::kBetaB:
        p.beta_b = v;
        break;
      case EffectAxis::kGamma:
        p.gamma = v;
        break;
      case EffectAxis::kGShift:
        p.protest_cost = g.WithSupport(g.lo(), g.hi() - v);
        break;
    }
    try {
      p.Validate();
    } catch (const RejectedInput&) {
      continue;
    }
    if (mild) {
      if (!CheckMildConflict(p).Pass()) continue;
      effect[k] = SolveMild(p).d;
    } else {
      if (!CheckSevereConflict(p).Pass()) continue;
      SevereOptions opts;
      opts.scan_grid = 0;
      effect[k] = SolveSevere(p, opts).d;
    }
    valid[k] = true;
  }

  int first = 0;
  while (first < steps && !valid[first]) ++first;
  int last = first;
  while (last < steps && valid[last]) ++last;
  r.truncated = first > 0 || last < steps;
  for (int k = first; k < last; ++k) {
    r.axis_values.push_back(values[k]);
    r.effect.push_back(effect[k]);
  }
  if (r.axis_values.empty()) {
    r.note = "the " + r.assumption + " assumption fails at every grid point";
  } else if (r.truncated) {
    r.note = "the " + r.assumption +
             " assumption fails on part of the range; grid truncated to [" +
             Fmt(r.axis_values.front()) + ", " + Fmt(r.axis_values.back()) +
             "]";
  }
  for (size_t k = 0; k + 1 < r.effect.size(); ++k) {
    r.max_violation = std::max(r.max_violation, r.effect[k] - r.effect[k + 1]);
  }
  return r;
}

namespace {

BoundedCdf RandomCdf(double u_family, double lo, double hi, double u_a,
                     double u_b) {
  if (u_family < 0.5) return BoundedCdf::Uniform(lo, hi);
  return BoundedCdf::ScaledBeta(lo, hi, 0.7 + 3.3 * u_a, 0.7 + 3.3 * u_b);
}

// Payoffs, type shares and both cost distributions; conflict parameters are
// filled by the callers.
ModelParams RandomCommon(uint64_t seed, uint64_t index) {
  auto u = [&](uint32_t slot) { return CounterUniform(seed, index, slot); };
  ModelParams p;
  p.gamma = 0.05 + 0.9 * u(0);
  p.q = 0.05 + 0.9 * u(1);
  p.beta_g = 0.2 + 2.8 * u(2);
  p.beta_b = -2.0 + (p.beta_g + 2.0) * 0.999 * u(3);
  const double g_lo = u(6) < 0.5 ? 0.0 : 0.3 * u(7);
  p.protest_cost = RandomCdf(u(8), g_lo, g_lo + 0.5 + 2.5 * u(9), u(10), u(11));
  const double h_lo = u(12) < 0.5 ? 0.0 : 0.3 * u(13);
  p.concealment_cost =
      RandomCdf(u(14), h_lo, h_lo + 0.5 + 1.5 * u(15), u(16), u(17));
  return p;
}

}  // namespace

ModelParams RandomMildCandidate(uint64_t seed, uint64_t index) {
  ModelParams p = RandomCommon(seed, index);
  p.alpha_g = 0.02 + 0.96 * CounterUniform(seed, index, 4);
  p.alpha_b = p.alpha_g + (0.999 - p.alpha_g) * CounterUniform(seed, index, 5);
  return p;
}

ModelParams RandomSevereCandidate(uint64_t seed, uint64_t index) {
  ModelParams p = RandomCommon(seed, index);
  const double g_beta_g = p.protest_cost.Cdf(p.beta_g);
  p.alpha_g = g_beta_g + (0.999 - g_beta_g) * CounterUniform(seed, index, 4);
  p.alpha_b = 0.001 + (p.alpha_g - 0.001) * CounterUniform(seed, index, 5);
  return p;
}

namespace {

template <typename Candidate, typename Accept, typename Judge>
SignLawReport RunSignLaw(const std::string& name, int draws, uint64_t seed,
                         int budget, Candidate candidate, Accept accept,
                         Judge judge) {
  if (draws < 1) throw DomainError("sign law needs at least one draw");
  SignLawReport r;
  r.assumption = name;
  for (int i = 0; i < budget && r.accepted < draws; ++i) {
    ++r.attempts;
    const ModelParams p = candidate(seed, static_cast<uint64_t>(i));
    try {
      p.Validate();
    } catch (const RejectedInput&) {
      continue;
    }
    if (!accept(p)) continue;
    ++r.accepted;
    try {
      judge(p, r);
    } catch (const SolverError&) {
      ++r.solver_failures;
    }
  }
  r.acceptance_rate =
      r.attempts > 0 ? static_cast<double>(r.accepted) / r.attempts : 0.0;
  return r;
}

int Sign(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

SignLawReport MildSignLaw(int draws, uint64_t seed, int budget) {
  return RunSignLaw(
      "mild", draws, seed, budget, RandomMildCandidate,
      [](const ModelParams& p) { return CheckMildConflict(p).Pass(); },
      [](const ModelParams& p, SignLawReport& r) {
        const double predictor =
            p.protest_cost.Cdf(p.gamma * ExpectedPolicyPayoff(p)) - p.alpha_g;
        const double d = SolveMild(p).d;
        if (d > 0.0) ++r.positive_effects;
        if (std::abs(predictor) < 1e-12) {
          ++r.knife_edges;
        } else if (Sign(d) != Sign(predictor)) {
          ++r.violations;
        }
      });
}

SignLawReport SevereSignLaw(int draws, uint64_t seed, int budget) {
  return RunSignLaw(
      "severe", draws, seed, budget, RandomSevereCandidate,
      [](const ModelParams& p) { return CheckSevereConflict(p).Pass(); },
      [](const ModelParams& p, SignLawReport& r) {
        SevereOptions opts;
        opts.scan_grid = 0;
        const double d = SolveSevere(p, opts).d;
        if (d > 0.0) ++r.positive_effects;
        if (!(d < 0.0)) ++r.violations;
      });
}

}  // namespace repression

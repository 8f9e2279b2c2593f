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

// Numerical certificates for solved equilibria. Nothing here trusts the
// solver's internal reasoning: regrets are computed by direct payoff
// comparison and posteriors by Bayes' rule over the strategy.

#ifndef REPRESSION_VERIFY_H_
#define REPRESSION_VERIFY_H_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "repression/model.h"
#include "repression/simulate.h"
#include "repression/solver_mild.h"
#include "repression/solver_severe.h"

namespace repression {

inline constexpr double kRegretTolerance = 1e-9;
inline constexpr double kBayesTolerance = 1e-10;
inline constexpr double kExactIdentityTolerance = 1e-12;

struct IdentityGap {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool Pass() const { return std::abs(value) <= tolerance; }
};

struct RegretReport {
  double max_regret = 0.0;
  ActivistType worst_theta = ActivistType::kGood;
  double worst_c = 0.0;
  // Largest |reveal - concede| payoff gap among mixing good types (mild).
  double indifference_gap = 0.0;
  double bayes_gap = 0.0;
  bool reveal_on_path = true;
  std::vector<IdentityGap> identity_gaps;

  bool Pass() const;
};

// Payoffs to a regime of cost c against the equilibrium protest
// probabilities.
struct ActionPayoffs {
  double conceal = 0.0;
  double reveal = 0.0;
  double concede = 0.0;
};
ActionPayoffs RegimePayoffs(const ModelParams& params, ActivistType theta,
                            double c, double p_r, double p_nn);

// Regret of the prescribed action over a grid of `grid` concealment costs
// spanning H's support, for both organized types.
RegretReport BestResponseCheck(const ModelParams& params,
                               const MildEquilibrium& eq, int grid);
RegretReport BestResponseCheck(const ModelParams& params,
                               const SevereEquilibrium& eq, int grid);
RegretReport BestResponseCheck(const ModelParams& params,
                               const NoConcessionEquilibrium& eq, int grid);

// Recomputes mu_R and mu_NN from the strategy by Bayes' rule and reports the
// largest componentwise discrepancy in bayes_gap.
RegretReport BayesConsistencyCheck(const ModelParams& params,
                                   const MildEquilibrium& eq);
RegretReport BayesConsistencyCheck(const ModelParams& params,
                                   const SevereEquilibrium& eq);

// Closed-form identities at a solved equilibrium. Root-dependent identities
// carry tolerance 10*tol, exact ones kExactIdentityTolerance.
std::vector<IdentityGap> MildIdentityGaps(const ModelParams& params,
                                          const MildEquilibrium& eq,
                                          double tol = kDefaultTol);
std::vector<IdentityGap> SevereIdentityGaps(const ModelParams& params,
                                            const SevereEquilibrium& eq,
                                            double tol = kDefaultTol);

// Best response + Bayes + identities in one report.
RegretReport CertifyMild(const ModelParams& params, const MildEquilibrium& eq,
                         int grid, double tol = kDefaultTol);
RegretReport CertifySevere(const ModelParams& params,
                           const SevereEquilibrium& eq, int grid,
                           double tol = kDefaultTol);

struct FosdReport {
  bool applicable = false;  // false when h1 does not dominate h2
  double revealed_1 = 0.0, revealed_2 = 0.0;
  double total_1 = 0.0, total_2 = 0.0;
  bool revealed_higher_under_1 = false;
  bool total_lower_under_1 = false;
  bool Pass() const {
    return applicable && revealed_higher_under_1 && total_lower_under_1;
  }
};

// Solves with H = h1 and H = h2 and checks that dominance in costs raises
// revealed repression and lowers total repression. Throws
// AssumptionViolation when the mild assumption fails under either H.
FosdReport FosdComparativeStaticsCheck(const ModelParams& params,
                                       const BoundedCdf& h1,
                                       const BoundedCdf& h2);

struct LimitEntry {
  std::string family;  // "prohibitive" (H = U[1-eps,1]) or "negligible" (U[0,eps])
  double eps = 0.0;
  bool assumption_ok = false;
  bool skipped = false;
  double c_tilde = 0.0;
  double h_at_threshold = 0.0;
  std::string note;
};

struct LimitReport {
  std::vector<LimitEntry> entries;
  double prohibitive_final = 0.0;
  double negligible_final = 0.0;
  DegenerateLimits target;
  double negligible_gap = 0.0;  // |negligible_final - target.negligible|
};

// Follows H(c_tilde) along the degenerate uniform families. When only the
// H-support clauses of the mild assumption fail (as they must for small
// eps), the threshold equation is rooted on [0, alpha_G] directly. Throws
// DomainError unless eps values lie in (0,1) and strictly decrease.
LimitReport LimitCheckDegenerateCosts(const ModelParams& params,
                                      const std::vector<double>& eps_sequence,
                                      double tol = kDefaultTol);

enum class EffectAxis { kQ, kBetaB, kGamma, kGShift };
std::string AxisName(EffectAxis axis);

struct MonotonicityReport {
  EffectAxis axis = EffectAxis::kQ;
  std::string assumption;  // "mild" or "severe"
  std::vector<double> axis_values;
  std::vector<double> effect;  // D at each retained point
  bool truncated = false;
  std::string note;
  double max_violation = 0.0;  // largest D[k] - D[k+1] over adjacent pairs
  bool Pass(double slack = 1e-12) const {
    return axis_values.size() >= 2 && max_violation <= slack;
  }
};

// Evaluates D along one axis on `steps` evenly spaced points in
// [start, end]. The G-shift axis (mild only) contracts G's support to
// [lo, hi - s], raising its CDF pointwise. Points that break the operative
// assumption truncate the grid to its longest valid leading run. Throws
// RejectedInput when the beta_B range reaches beta_G, when the G shift would
// empty the support, or when neither assumption holds at the base point.
MonotonicityReport MonotonicityCheck(const ModelParams& params,
                                     EffectAxis axis, double start,
                                     double end, int steps);

struct SignLawReport {
  std::string assumption;
  int accepted = 0;
  int attempts = 0;
  double acceptance_rate = 0.0;
  int violations = 0;
  int knife_edges = 0;  // draws with |G(gamma beta^e) - alpha_G| < 1e-12
  int positive_effects = 0;  // draws with D > 0 (deterrence)
  int solver_failures = 0;
  bool Pass(int required) const {
    return accepted >= required && violations == 0 && solver_failures == 0;
  }
};

// Rejection-samples parameter draws satisfying the mild (severe) assumption
// and checks the sign of the deterrence/backlash effect on each.
ModelParams RandomMildCandidate(uint64_t seed, uint64_t index);
ModelParams RandomSevereCandidate(uint64_t seed, uint64_t index);
SignLawReport MildSignLaw(int draws, uint64_t seed, int budget = 100000);
SignLawReport SevereSignLaw(int draws, uint64_t seed, int budget = 100000);

}  // namespace repression

#endif  // REPRESSION_VERIFY_H_

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

#include "repression/model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace repression {

namespace {

bool OpenUnit(double x) { return x > 0.0 && x < 1.0; }

AssumptionClause Less(std::string name, double lhs, double rhs) {
  return {std::move(name), "<", lhs, rhs, lhs < rhs};
}

AssumptionClause Greater(std::string name, double lhs, double rhs) {
  return {std::move(name), ">", lhs, rhs, lhs > rhs};
}

}  // namespace

void ModelParams::Validate() const {
  std::ostringstream err;
  if (!OpenUnit(gamma)) err << "gamma must lie in (0,1); ";
  if (!OpenUnit(q)) err << "q must lie in (0,1); ";
  if (!(beta_g > std::max(beta_b, 0.0))) {
    err << "beta_G must exceed max(beta_B, 0); ";
  }
  if (!std::isfinite(beta_b)) err << "beta_B must be finite; ";
  if (!OpenUnit(alpha_g)) err << "alpha_G must lie in (0,1); ";
  if (!OpenUnit(alpha_b)) err << "alpha_B must lie in (0,1); ";
  if (protest_cost.lo() < 0.0) err << "G support must be nonnegative; ";
  if (concealment_cost.lo() < 0.0) err << "H support must be nonnegative; ";
  const std::string msg = err.str();
  if (!msg.empty()) throw RejectedInput("invalid parameters: " + msg);
}

ModelParams MildExampleParams() {
  ModelParams p;
  p.gamma = 0.4;
  p.q = 0.65;
  p.beta_g = 2.5;
  p.beta_b = -1.0;
  p.alpha_g = 0.6;
  p.alpha_b = 0.7;
  return p;
}

ModelParams SevereExampleParams() {
  ModelParams p;
  p.gamma = 0.4;
  p.q = 0.5;
  p.beta_g = 0.9;
  p.beta_b = 0.1;
  p.alpha_g = 0.95;
  p.alpha_b = 0.4;
  return p;
}

Belief Belief::FromWeights(double good, double bad, double none) {
  const double total = good + bad + none;
  return {good / total, bad / total, none / total};
}

double Belief::Of(ActivistType t) const {
  switch (t) {
    case ActivistType::kGood:
      return good;
    case ActivistType::kBad:
      return bad;
    case ActivistType::kNone:
      return none;
  }
  return 0.0;
}

bool Belief::IsValid(double tol) const {
  return good >= 0.0 && bad >= 0.0 && none >= 0.0 &&
         std::abs(good + bad + none - 1.0) <= tol;
}

Belief Prior(const ModelParams& params) {
  return {params.gamma * params.q, params.gamma * (1.0 - params.q),
          1.0 - params.gamma};
}

double ExpectedPolicyPayoff(const ModelParams& params) {
  return params.q * params.beta_g + (1.0 - params.q) * params.beta_b;
}

double ProtestCutoff(const Belief& belief, const ModelParams& params) {
  return belief.good * params.beta_g + belief.bad * params.beta_b;
}

double ProtestProbability(const Belief& belief, const ModelParams& params) {
  return params.protest_cost.Cdf(ProtestCutoff(belief, params));
}

bool AssumptionReport::Pass() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const AssumptionClause& c) { return c.pass; });
}

std::vector<int> AssumptionReport::FailedClauses() const {
  std::vector<int> failed;
  for (size_t i = 0; i < clauses.size(); ++i) {
    if (!clauses[i].pass) failed.push_back(static_cast<int>(i) + 1);
  }
  return failed;
}

std::string AssumptionReport::Summary() const {
  std::ostringstream out;
  out << assumption << "-conflict assumption "
      << (Pass() ? "holds" : "fails");
  for (int i : FailedClauses()) {
    const auto& c = clauses[i - 1];
    out << "; clause " << i << " (" << c.name << ": " << c.lhs << " "
        << c.relation << " " << c.rhs << ") fails";
  }
  return out.str();
}

AssumptionReport CheckMildConflict(const ModelParams& params) {
  const BoundedCdf& g = params.protest_cost;
  const BoundedCdf& h = params.concealment_cost;
  const double be = ExpectedPolicyPayoff(params);
  const double h_alpha = h.Cdf(params.alpha_g);
  // (1 + (1-gamma)/(gamma H(alpha_G)))^{-1} beta^e, written so that
  // H(alpha_G) = 0 yields 0 rather than a division by zero.
  const double interior_bound =
      params.gamma * h_alpha /
      (params.gamma * h_alpha + 1.0 - params.gamma) * be;
  AssumptionReport r;
  r.assumption = "mild";
  r.clauses = {
      Less("alpha_G < alpha_B", params.alpha_g, params.alpha_b),
      Less("alpha_G < G(beta^e)", params.alpha_g, g.Cdf(be)),
      Less("alpha_G < H.hi", params.alpha_g, h.hi()),
      Greater("alpha_G > H.lo", params.alpha_g, h.lo()),
      Greater("alpha_G > G(beta_B)", params.alpha_g, g.Cdf(params.beta_b)),
      Less("G.lo < interior bound", g.lo(), interior_bound),
  };
  return r;
}

AssumptionReport CheckSevereConflict(const ModelParams& params) {
  const BoundedCdf& g = params.protest_cost;
  const BoundedCdf& h = params.concealment_cost;
  const double be = ExpectedPolicyPayoff(params);
  const double g_beta_g = g.Cdf(params.beta_g);
  AssumptionReport r;
  r.assumption = "severe";
  r.clauses = {
      Less("alpha_B < alpha_G", params.alpha_b, params.alpha_g),
      Less("alpha_B < G(beta^e)", params.alpha_b, g.Cdf(be)),
      Greater("alpha_G > G(beta_G)", params.alpha_g, g_beta_g),
      Less("alpha_G < H.hi", params.alpha_g, h.hi()),
      Greater("G(beta_G) > H.lo", g_beta_g, h.lo()),
  };
  return r;
}

AssumptionViolation::AssumptionViolation(AssumptionReport report)
    : RejectedInput(report.Summary()), report_(std::move(report)) {}

}  // namespace repression

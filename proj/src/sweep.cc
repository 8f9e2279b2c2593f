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

#include "repression/sweep.h"

#include <algorithm>
#include <exception>

#include "repression/config.h"
#include "repression/solver_mild.h"
#include "repression/solver_severe.h"

namespace repression {

std::string SweepAxisName(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kHLo:
      return "H_lo";
    case SweepAxis::kGLo:
      return "G_lo";
    case SweepAxis::kQ:
      return "q";
    case SweepAxis::kGamma:
      return "gamma";
    case SweepAxis::kBetaB:
      return "beta_B";
    case SweepAxis::kAlphaG:
      return "alpha_G";
  }
  return "unknown";
}

SweepAxis ParseSweepAxis(const std::string& name) {
  for (SweepAxis a : {SweepAxis::kHLo, SweepAxis::kGLo, SweepAxis::kQ,
                      SweepAxis::kGamma, SweepAxis::kBetaB,
                      SweepAxis::kAlphaG}) {
    if (SweepAxisName(a) == name) return a;
  }
  throw ConfigError("unknown sweep axis '" + name +
                    "' (expected H_lo, G_lo, q, gamma, beta_B or alpha_G)");
}

ModelParams ApplyAxis(const ModelParams& base, SweepAxis axis, double v) {
  ModelParams p = base;
  switch (axis) {
    case SweepAxis::kHLo:
      p.concealment_cost = base.concealment_cost.WithSupport(
          v, base.concealment_cost.hi());
      break;
    case SweepAxis::kGLo:
      p.protest_cost =
          base.protest_cost.WithSupport(v, base.protest_cost.hi());
      break;
    case SweepAxis::kQ:
      p.q = v;
      break;
    case SweepAxis::kGamma:
      p.gamma = v;
      break;
    case SweepAxis::kBetaB:
      p.beta_b = v;
      break;
    case SweepAxis::kAlphaG:
      p.alpha_g = v;
      break;
  }
  return p;
}

void SweepSpec::Validate() const {
  if (!(start < end)) throw DomainError("sweep range must satisfy start < end");
  if (steps < 2) throw DomainError("sweep needs at least 2 steps");
  ApplyAxis(base, axis, start).Validate();
  ApplyAxis(base, axis, end).Validate();
}

std::vector<std::string> SweepColumns(SweepVariant variant) {
  std::vector<std::string> cols = {"axis_value", "assumption_ok"};
  if (variant == SweepVariant::kMild) {
    cols.push_back("c_tilde");
  } else {
    cols.push_back("c_tilde_B");
    cols.push_back("c_tilde_G");
  }
  for (const char* c : {"prob_revealed", "prob_concealed", "prob_total", "p_R",
                        "p_NN", "p_prior", "D", "D_lower"}) {
    cols.push_back(c);
  }
  return cols;
}

namespace {

SweepRow SolvePoint(const SweepSpec& spec, double v) {
  SweepRow row;
  row.axis_value = v;
  ModelParams p;
  try {
    p = ApplyAxis(spec.base, spec.axis, v);
    p.Validate();
  } catch (const RejectedInput&) {
    return row;
  }
  if (spec.variant == SweepVariant::kMild) {
    if (!CheckMildConflict(p).Pass()) return row;
    const MildEquilibrium eq = SolveMild(p);
    row.c_tilde = eq.c_tilde;
    row.prob_revealed = eq.prob.revealed;
    row.prob_concealed = eq.prob.concealed;
    row.prob_total = eq.prob.total;
    row.p_r = eq.p_r;
    row.p_nn = eq.p_nn;
    row.p_prior = eq.p_prior;
    row.d = eq.d;
    row.d_lower = eq.d_lower;
  } else {
    if (!CheckSevereConflict(p).Pass()) return row;
    SevereOptions opts;
    opts.scan_grid = 0;
    opts.parallel = false;
    const SevereEquilibrium eq = SolveSevere(p, opts);
    row.c_tilde_b = eq.c_tilde_b;
    row.c_tilde_g = eq.c_tilde_g;
    row.prob_revealed = eq.prob.revealed;
    row.prob_concealed = eq.prob.concealed;
    row.prob_total = eq.prob.total;
    row.p_r = eq.p_r;
    row.p_nn = eq.p_nn;
    row.p_prior = eq.p_prior;
    row.d = eq.d;
    row.d_lower = eq.d_lower;
  }
  row.assumption_ok = true;
  return row;
}

}  // namespace

SweepTable RunSweep(const SweepSpec& spec, bool parallel) {
  spec.Validate();
  SweepTable table;
  table.spec = spec;
  table.rows.resize(spec.steps);
  const int n = spec.steps;
  auto value_at = [&](int k) {
    return k == n - 1 ? spec.end
                      : spec.start + (spec.end - spec.start) * k / (n - 1);
  };
  if (parallel) {
    // Solver exceptions cannot cross the parallel region; capture the first.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k) {
      try {
        table.rows[k] = SolvePoint(spec, value_at(k));
      } catch (...) {
#pragma omp critical(repression_sweep_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (int k = 0; k < n; ++k) table.rows[k] = SolvePoint(spec, value_at(k));
  }
  if (std::none_of(table.rows.begin(), table.rows.end(),
                   [](const SweepRow& r) { return r.assumption_ok; })) {
    throw RejectedInput("sweep is empty: the " +
                        std::string(spec.variant == SweepVariant::kMild
                                        ? "mild"
                                        : "severe") +
                        " assumption fails at every grid point");
  }
  return table;
}

void WriteSweepCsv(std::ostream& out, const SweepTable& table) {
  const std::vector<std::string> cols = SweepColumns(table.spec.variant);
  for (size_t i = 0; i < cols.size(); ++i) {
    out << (i ? "," : "") << cols[i];
  }
  out << "\n";
  auto cell = [&](const std::optional<double>& v) {
    out << ",";
    if (v) out << FormatReal(*v);
  };
  for (const SweepRow& r : table.rows) {
    out << FormatReal(r.axis_value) << "," << (r.assumption_ok ? "true" : "false");
    if (table.spec.variant == SweepVariant::kMild) {
      cell(r.c_tilde);
    } else {
      cell(r.c_tilde_b);
      cell(r.c_tilde_g);
    }
    for (const auto* v : {&r.prob_revealed, &r.prob_concealed, &r.prob_total,
                          &r.p_r, &r.p_nn, &r.p_prior, &r.d, &r.d_lower}) {
      cell(*v);
    }
    out << "\n";
  }
}

}  // namespace repression

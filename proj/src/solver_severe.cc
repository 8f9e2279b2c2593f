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

#include "repression/solver_severe.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace repression {

namespace {

// Sample count for locating sign changes of the interior reduction.
constexpr int kInteriorSamples = 512;
// Fixed points closer than this in both coordinates are the same point.
constexpr double kSamePoint = 1e-7;

double NoNewsProtest(const ModelParams& params, double c_b, double c_g) {
  return ProtestProbability(SevereNoNewsPosterior(c_b, c_g, params), params);
}

double CellResidual(const ModelParams& params, double c_b, double c_g) {
  const auto [map_b, map_g] = SevereFixedPointMap(params, c_b, c_g);
  return std::max(std::abs(map_b - c_b), std::abs(map_g - c_g));
}

// Corner branch: c_b = H.lo and c_g solves
//   G(rho(mu_NN(H.lo, c_g))) = G(beta_G) - c_g.
RootResult SolveCorner(const ModelParams& params, double tol) {
  const double lo = params.concealment_cost.lo();
  const double g_beta_g = params.protest_cost.Cdf(params.beta_g);
  auto residual = [&](double c_g) {
    return NoNewsProtest(params, lo, c_g) - (g_beta_g - c_g);
  };
  return BracketedRoot(residual, lo, std::max(lo, g_beta_g), tol);
}

bool CornerConsistent(const ModelParams& params, double c_g, double tol) {
  const double lo = params.concealment_cost.lo();
  return params.alpha_b - NoNewsProtest(params, lo, c_g) <= lo + 10.0 * tol;
}

SevereFixedPoint InteriorPoint(const ModelParams& params, double c_b) {
  const double gap = params.protest_cost.Cdf(params.beta_g) - params.alpha_b;
  return {c_b, c_b + gap, false};
}

// All sign changes of the interior reduction strictly above H.lo, refined.
std::vector<SevereFixedPoint> InteriorRoots(const ModelParams& params,
                                            double tol) {
  std::vector<SevereFixedPoint> roots;
  const double lo = params.concealment_cost.lo();
  const double hi = params.alpha_b;
  if (!(hi > lo)) return roots;
  auto f = [&](double c_b) { return SevereInteriorResidual(params, c_b); };
  double x_prev = lo;
  double f_prev = f(lo);
  for (int i = 1; i <= kInteriorSamples; ++i) {
    const double x = lo + (hi - lo) * i / kInteriorSamples;
    const double fx = f(x);
    const bool crosses = (f_prev < 0.0 && fx >= 0.0) ||
                         (f_prev > 0.0 && fx <= 0.0);
    if (crosses) {
      const RootResult r = BracketedRoot(f, x_prev, x, tol);
      if (r.x > lo) roots.push_back(InteriorPoint(params, r.x));
    }
    x_prev = x;
    f_prev = fx;
  }
  return roots;
}

bool SamePoint(const SevereFixedPoint& a, const SevereFixedPoint& b) {
  return std::abs(a.c_tilde_b - b.c_tilde_b) < kSamePoint &&
         std::abs(a.c_tilde_g - b.c_tilde_g) < kSamePoint;
}

// Refines local minima of the scanned residual into fixed points.
std::vector<SevereFixedPoint> ScanCandidates(const ModelParams& params,
                                             const ScanBox& box,
                                             std::span<const double> res,
                                             double tol) {
  std::vector<SevereFixedPoint> found;
  const int n = box.n;
  if (n < 3) return found;
  const double hb = (box.b_hi - box.b_lo) / (n - 1);
  const double hg = (box.g_hi - box.g_lo) / (n - 1);
  auto at = [&](int i, int j) { return res[static_cast<size_t>(i) * n + j]; };

  double slope = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i + 1 < n && hb > 0.0) {
        slope = std::max(slope, std::abs(at(i + 1, j) - at(i, j)) / hb);
      }
      if (j + 1 < n && hg > 0.0) {
        slope = std::max(slope, std::abs(at(i, j + 1) - at(i, j)) / hg);
      }
    }
  }
  const double threshold = 1.5 * slope * std::max(hb, hg) + 10.0 * tol;

  const double lo = params.concealment_cost.lo();
  std::optional<SevereFixedPoint> corner;
  bool corner_tried = false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double r = at(i, j);
      if (r > threshold) continue;
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          const int a = i + di, b = j + dj;
          if ((di || dj) && a >= 0 && a < n && b >= 0 && b < n &&
              at(a, b) < r) {
            local_min = false;
            break;
          }
        }
      }
      if (!local_min) continue;

      const double c_b = box.BadAt(i);
      if (c_b <= lo + 1.5 * hb) {
        if (corner_tried) continue;
        corner_tried = true;
        const RootResult rc = SolveCorner(params, tol);
        if (CornerConsistent(params, rc.x, tol)) {
          corner = SevereFixedPoint{lo, rc.x, true};
          found.push_back(*corner);
        }
        continue;
      }
      const double a = std::max(lo, c_b - 2.0 * hb);
      const double b = std::min(params.alpha_b, c_b + 2.0 * hb);
      auto f = [&](double x) { return SevereInteriorResidual(params, x); };
      const double fa = f(a), fb = f(b);
      if ((fa < 0.0) == (fb < 0.0) && fa != 0.0 && fb != 0.0) continue;
      const RootResult root = BracketedRoot(f, a, b, tol);
      if (root.x <= lo) continue;
      SevereFixedPoint p = InteriorPoint(params, root.x);
      if (std::none_of(found.begin(), found.end(),
                       [&](const auto& q) { return SamePoint(p, q); })) {
        found.push_back(p);
      }
    }
  }
  return found;
}

}  // namespace

Belief SevereNoNewsPosterior(double c_b, double c_g,
                             const ModelParams& params) {
  const BoundedCdf& h = params.concealment_cost;
  return Belief::FromWeights(params.gamma * h.Cdf(c_g) * params.q,
                             params.gamma * h.Cdf(c_b) * (1.0 - params.q),
                             1.0 - params.gamma);
}

std::pair<double, double> SevereIndifferenceResiduals(
    const ModelParams& params, double c_b, double c_g) {
  const double p_nn = NoNewsProtest(params, c_b, c_g);
  const double g_beta_g = params.protest_cost.Cdf(params.beta_g);
  return {params.alpha_b - p_nn - c_b, g_beta_g - p_nn - c_g};
}

std::pair<double, double> SevereFixedPointMap(const ModelParams& params,
                                              double c_b, double c_g) {
  const double lo = params.concealment_cost.lo();
  const double p_nn = NoNewsProtest(params, c_b, c_g);
  const double g_beta_g = params.protest_cost.Cdf(params.beta_g);
  return {std::max(lo, params.alpha_b - p_nn), std::max(lo, g_beta_g - p_nn)};
}

double SevereInteriorResidual(const ModelParams& params, double c_b) {
  const SevereFixedPoint p = InteriorPoint(params, c_b);
  return NoNewsProtest(params, p.c_tilde_b, p.c_tilde_g) -
         (params.alpha_b - c_b);
}

ScanBox SevereScanBox(const ModelParams& params, int n) {
  const double lo = params.concealment_cost.lo();
  ScanBox box;
  box.b_lo = lo;
  box.b_hi = std::max(lo, params.alpha_b);
  box.g_lo = lo;
  box.g_hi = std::max(lo, params.protest_cost.Cdf(params.beta_g));
  box.n = n;
  return box;
}

void ScanFixedPointResidualSerial(const ModelParams& params,
                                  const ScanBox& box, std::span<double> out) {
  const int n = box.n;
  for (int i = 0; i < n; ++i) {
    const double c_b = box.BadAt(i);
    for (int j = 0; j < n; ++j) {
      out[static_cast<size_t>(i) * n + j] =
          CellResidual(params, c_b, box.GoodAt(j));
    }
  }
}

void ScanFixedPointResidualParallel(const ModelParams& params,
                                    const ScanBox& box, std::span<double> out) {
  const int n = box.n;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const double c_b = box.BadAt(i);
    for (int j = 0; j < n; ++j) {
      out[static_cast<size_t>(i) * n + j] =
          CellResidual(params, c_b, box.GoodAt(j));
    }
  }
}

SevereEquilibrium SolveSevere(const ModelParams& params,
                              const SevereOptions& options) {
  params.Validate();
  AssumptionReport report = CheckSevereConflict(params);
  if (!report.Pass()) throw AssumptionViolation(std::move(report));

  const double tol = options.tol;
  const double lo = params.concealment_cost.lo();
  std::vector<SevereFixedPoint> points = InteriorRoots(params, tol);

  std::optional<SevereFixedPoint> chosen;
  const bool interior_first =
      params.alpha_b > lo && SevereInteriorResidual(params, lo) < 0.0;
  if (interior_first && !points.empty()) {
    chosen = points.front();
  } else {
    const RootResult rc = SolveCorner(params, tol);
    SevereFixedPoint corner{lo, rc.x, true};
    if (CornerConsistent(params, rc.x, tol)) {
      chosen = corner;
      points.insert(points.begin(), corner);
    } else if (!points.empty()) {
      chosen = points.front();
    }
  }

  if (options.scan_grid > 0) {
    const ScanBox box = SevereScanBox(params, options.scan_grid);
    std::vector<double> residual(static_cast<size_t>(box.n) * box.n);
    if (options.parallel) {
      ScanFixedPointResidualParallel(params, box, residual);
    } else {
      ScanFixedPointResidualSerial(params, box, residual);
    }
    for (const auto& p : ScanCandidates(params, box, residual, tol)) {
      if (std::none_of(points.begin(), points.end(),
                       [&](const auto& q) { return SamePoint(p, q); })) {
        points.push_back(p);
      }
    }
    if (!chosen && !points.empty()) {
      chosen = *std::min_element(points.begin(), points.end(),
                                 [](const auto& a, const auto& b) {
                                   return a.c_tilde_b < b.c_tilde_b;
                                 });
    }
  }
  if (!chosen) {
    throw SolverError("no severe-conflict fixed point found");
  }

  SevereEquilibrium eq;
  eq.c_tilde_b = chosen->c_tilde_b;
  eq.c_tilde_g = chosen->c_tilde_g;
  eq.corner = chosen->corner;
  for (const auto& p : points) {
    if (!SamePoint(p, *chosen)) eq.multiplicity_note.push_back(p);
  }
  std::sort(eq.multiplicity_note.begin(), eq.multiplicity_note.end(),
            [](const auto& a, const auto& b) {
              return a.c_tilde_b < b.c_tilde_b;
            });

  const BoundedCdf& h = params.concealment_cost;
  const double h_b = h.Cdf(eq.c_tilde_b);
  const double h_g = h.Cdf(eq.c_tilde_g);
  const double q = params.q;
  eq.mu_r = {1.0, 0.0, 0.0};
  eq.mu_nn = SevereNoNewsPosterior(eq.c_tilde_b, eq.c_tilde_g, params);
  eq.prob.revealed_given_good = 1.0 - h_g;
  eq.prob.revealed_given_bad = 0.0;
  eq.prob.revealed = q * (1.0 - h_g);
  eq.prob.concealed = q * h_g + (1.0 - q) * h_b;
  eq.prob.total = eq.prob.revealed + eq.prob.concealed;
  eq.prob.concession = (1.0 - q) * (1.0 - h_b);
  eq.p_r = ProtestProbability(eq.mu_r, params);
  eq.p_nn = ProtestProbability(eq.mu_nn, params);
  eq.p_prior = ProtestProbability(Prior(params), params);
  eq.d = eq.p_prior - eq.p_r;
  eq.d_lower = eq.p_nn - eq.p_r;
  std::tie(eq.residual_b, eq.residual_g) =
      SevereIndifferenceResiduals(params, eq.c_tilde_b, eq.c_tilde_g);
  if (eq.corner) {
    // Floored threshold: the bad type never conceals, so only the map
    // residual is meaningful.
    eq.residual_b = SevereFixedPointMap(params, eq.c_tilde_b, eq.c_tilde_g)
                        .first -
                    eq.c_tilde_b;
  }

  if (eq.c_tilde_g > h.hi()) {
    eq.notes.push_back(
        "c_tilde_G exceeds the concealment-cost support; H clamps to 1");
  }
  if (eq.p_nn == 0.0) {
    eq.notes.push_back(
        "no-news protest cutoff lies below the protest-cost support (p_NN = 0)");
  }
  if (!eq.multiplicity_note.empty()) {
    std::ostringstream msg;
    msg << eq.multiplicity_note.size()
        << " additional fixed point(s) listed in multiplicity_note";
    eq.notes.push_back(msg.str());
  }
  return eq;
}

double SevereEffect(const ModelParams& params) {
  const double be = ExpectedPolicyPayoff(params);
  return params.protest_cost.Cdf(params.gamma * be) -
         params.protest_cost.Cdf(params.beta_g);
}

}  // namespace repression

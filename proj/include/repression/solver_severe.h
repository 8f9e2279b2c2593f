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

// Severe conflict of interest (alpha_B < alpha_G).
//
// The regime conceals bad activists below c_tilde_B and good activists below
// c_tilde_G > c_tilde_B. Above their thresholds, bad activists get a
// concession and good activists are repressed in public, so revealed
// repression identifies a good activist. The thresholds are a fixed point of
//
//   c_B = alpha_B  - G(rho(mu_NN(c_B, c_G)))
//   c_G = G(beta_G) - G(rho(mu_NN(c_B, c_G)))
//
// with each threshold floored at H.lo. In the interior the gap
// c_G - c_B = G(beta_G) - alpha_B is constant, which reduces the system to
// one equation in c_B.

#ifndef REPRESSION_SOLVER_SEVERE_H_
#define REPRESSION_SOLVER_SEVERE_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "repression/model.h"
#include "repression/root_finding.h"
#include "repression/solver_mild.h"

namespace repression {

struct SevereFixedPoint {
  double c_tilde_b = 0.0;
  double c_tilde_g = 0.0;
  bool corner = false;
};

struct SevereEquilibrium {
  double c_tilde_b = 0.0;
  double c_tilde_g = 0.0;
  bool corner = false;  // c_tilde_b pinned at H.lo
  Belief mu_r{1.0, 0.0, 0.0};
  Belief mu_nn;
  RepressionProbabilities prob;
  double p_r = 0.0;
  double p_nn = 0.0;
  double p_prior = 0.0;
  double d = 0.0;
  double d_lower = 0.0;
  double residual_b = 0.0;  // bad-type indifference residual
  double residual_g = 0.0;  // good-type indifference residual
  // Additional fixed points found besides the returned one.
  std::vector<SevereFixedPoint> multiplicity_note;
  // Flags for edge cases that are reported rather than rejected.
  std::vector<std::string> notes;
};

struct SevereOptions {
  double tol = kDefaultTol;
  int scan_grid = 400;  // per-axis points of the 2-D scan; 0 disables it
  bool parallel = true;
};

// No-news posterior when bad (good) activists are concealed below c_b (c_g).
Belief SevereNoNewsPosterior(double c_b, double c_g, const ModelParams& params);

// Residuals of the two indifference conditions at (c_b, c_g), without the
// floor at H.lo.
std::pair<double, double> SevereIndifferenceResiduals(
    const ModelParams& params, double c_b, double c_g);

// The fixed-point map with each threshold floored at H.lo.
std::pair<double, double> SevereFixedPointMap(const ModelParams& params,
                                              double c_b, double c_g);

// Interior reduction in c_b:
//   G(rho(mu_NN(c_b, c_b + G(beta_G) - alpha_B))) - (alpha_B - c_b).
double SevereInteriorResidual(const ModelParams& params, double c_b);

// Box scanned for fixed points: c_b in [H.lo, max(H.lo, alpha_B)],
// c_g in [H.lo, max(H.lo, G(beta_G))].
struct ScanBox {
  double b_lo = 0.0, b_hi = 0.0;
  double g_lo = 0.0, g_hi = 0.0;
  int n = 0;

  double BadAt(int i) const {
    return n > 1 ? b_lo + (b_hi - b_lo) * i / (n - 1) : b_lo;
  }
  double GoodAt(int j) const {
    return n > 1 ? g_lo + (g_hi - g_lo) * j / (n - 1) : g_lo;
  }
};

ScanBox SevereScanBox(const ModelParams& params, int n);

// Sup-norm fixed-point residual |map(x) - x| on an n-by-n grid, written
// row-major (c_b major) into out, which must hold n*n values. The serial
// kernel is the reference; the parallel kernel must match it exactly.
void ScanFixedPointResidualSerial(const ModelParams& params,
                                  const ScanBox& box, std::span<double> out);
void ScanFixedPointResidualParallel(const ModelParams& params,
                                    const ScanBox& box, std::span<double> out);

// Throws AssumptionViolation if the severe-conflict check fails and
// SolverError if no fixed point is found.
SevereEquilibrium SolveSevere(const ModelParams& params,
                              const SevereOptions& options = {});

// D = G(gamma beta^e) - G(beta_G), negative under the severe assumption.
double SevereEffect(const ModelParams& params);

}  // namespace repression

#endif  // REPRESSION_SOLVER_SEVERE_H_

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

// Reference values computed without the library's solvers: closed-form
// quadratic roots for uniform costs, Boost bisection of hand-written
// residuals, and a zooming grid search for the severe-case fixed point.

#ifndef REPRESSION_TESTS_ORACLES_H_
#define REPRESSION_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include <boost/math/tools/roots.hpp>

#include "repression/distributions.h"

namespace repression::oracle {

// Larger root of a x^2 + b x + c = 0.
inline double QuadraticRoot(double a, double b, double c) {
  return (-b + std::sqrt(b * b - 4.0 * a * c)) / (2.0 * a);
}

// Mild example (G = H = U[0,1]): gamma c / (gamma c + 1 - gamma) beta^e =
// alpha_G - c clears to 0.4 c^2 + 0.87 c - 0.36 = 0.
inline double MildExampleThreshold() { return QuadraticRoot(0.4, 0.87, -0.36); }

// Same threshold by Boost bisection of the uniform-cost residual.
inline double MildThresholdByBisection(double gamma, double q, double beta_g,
                                       double beta_b, double alpha_g) {
  const double be = q * beta_g + (1.0 - q) * beta_b;
  auto f = [&](double c) {
    return gamma * c / (gamma * c + 1.0 - gamma) * be - (alpha_g - c);
  };
  const auto [lo, hi] = boost::math::tools::bisect(
      f, 0.0, alpha_g, boost::math::tools::eps_tolerance<double>(52));
  return 0.5 * (lo + hi);
}

// No-concession example: c = 1 - gamma' beta^e clears to
// 0.4 c^2 + 0.71 c - 0.6 = 0, whose root is exactly 0.625.
inline double NoConcessionExampleThreshold() {
  return QuadraticRoot(0.4, 0.71, -0.6);
}

// Severe example: interior root 0.4 x^2 + 0.74 x - 0.19 = 0.
inline double SevereExampleBad() { return QuadraticRoot(0.4, 0.74, -0.19); }

struct UniformSevere {
  double gamma, q, beta_g, beta_b, alpha_b;

  // Fixed-point map with G = H = U[0,1], floored at 0.
  std::pair<double, double> Map(double cb, double cg) const {
    const double wg = gamma * q * std::clamp(cg, 0.0, 1.0);
    const double wb = gamma * (1.0 - q) * std::clamp(cb, 0.0, 1.0);
    const double wn = 1.0 - gamma;
    const double rho = (wg * beta_g + wb * beta_b) / (wg + wb + wn);
    const double p = std::clamp(rho, 0.0, 1.0);
    return {std::max(0.0, alpha_b - p),
            std::max(0.0, std::clamp(beta_g, 0.0, 1.0) - p)};
  }

  double Residual(double cb, double cg) const {
    const auto [nb, ng] = Map(cb, cg);
    return std::max(std::abs(nb - cb), std::abs(ng - cg));
  }

  // Zooming grid search for the residual minimum in [0,alpha_b] x [0,1].
  std::pair<double, double> ZoomSearch(int levels = 40, int n = 41) const {
    double b_lo = 0.0, b_hi = alpha_b, g_lo = 0.0, g_hi = 1.0;
    double best_b = 0.0, best_g = 0.0;
    for (int level = 0; level < levels; ++level) {
      double best = INFINITY;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double cb = b_lo + (b_hi - b_lo) * i / (n - 1);
          const double cg = g_lo + (g_hi - g_lo) * j / (n - 1);
          const double r = Residual(cb, cg);
          if (r < best) best = r, best_b = cb, best_g = cg;
        }
      }
      const double hb = 2.0 * (b_hi - b_lo) / (n - 1);
      const double hg = 2.0 * (g_hi - g_lo) / (n - 1);
      b_lo = std::max(0.0, best_b - hb), b_hi = best_b + hb;
      g_lo = std::max(0.0, best_g - hg), g_hi = best_g + hg;
    }
    return {best_b, best_g};
  }
};

// Random distribution for property tests, drawn independently of the
// library's own parameter sampler.
inline BoundedCdf RandomCdf(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double lo = u(gen) < 0.5 ? 0.0 : 0.5 * u(gen);
  const double hi = lo + 0.2 + 2.0 * u(gen);
  const double pick = u(gen);
  if (pick < 0.34) return BoundedCdf::Uniform(lo, hi);
  if (pick < 0.67) {
    return BoundedCdf::ScaledBeta(lo, hi, 0.5 + 4.0 * u(gen),
                                  0.5 + 4.0 * u(gen));
  }
  const double x1 = lo + (hi - lo) * (0.2 + 0.6 * u(gen));
  const double f1 = 0.1 + 0.8 * u(gen);
  return BoundedCdf::PiecewiseLinear({{lo, 0.0}, {x1, f1}, {hi, 1.0}});
}

}  // namespace repression::oracle

#endif  // REPRESSION_TESTS_ORACLES_H_

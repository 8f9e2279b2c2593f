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

#include "repression/root_finding.h"

#include <cmath>
#include <sstream>

#include "repression/errors.h"

namespace repression {

RootResult BracketedRoot(const std::function<double(double)>& f, double lo,
                         double hi, double tol, int max_iterations) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fb)) {
    throw SolverError("residual is not finite at the bracket ends");
  }
  if (fa == 0.0) return {a, 0.0, 0};
  if (fb == 0.0) return {b, 0.0, 0};
  if ((fa < 0.0) == (fb < 0.0)) {
    std::ostringstream msg;
    msg << "root not bracketed on [" << lo << ", " << hi << "]: f(lo)=" << fa
        << ", f(hi)=" << fb;
    throw SolverError(msg.str());
  }

  double best = std::abs(fa) < std::abs(fb) ? a : b;
  double fbest = std::abs(fa) < std::abs(fb) ? fa : fb;
  double last_width = b - a;
  for (int it = 1; it <= max_iterations; ++it) {
    // Secant step unless it leaves the bracket or the previous step failed
    // to halve the bracket.
    double x = b - fb * (b - a) / (fb - fa);
    const double width = b - a;
    if (!(x > a && x < b) || width > 0.5 * last_width) {
      x = 0.5 * (a + b);
    }
    last_width = width;
    if (!(x > a && x < b)) {
      // Adjacent doubles.
      return {best, fbest, it};
    }
    const double fx = f(x);
    if (std::abs(fx) < std::abs(fbest)) {
      best = x;
      fbest = fx;
    }
    if (std::abs(fx) <= tol || fx == 0.0) return {x, fx, it};
    if ((fx < 0.0) == (fa < 0.0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
  }
  if (std::abs(fbest) <= tol) return {best, fbest, max_iterations};
  std::ostringstream msg;
  msg << "root finder did not converge in " << max_iterations
      << " iterations (best residual " << fbest << ")";
  throw SolverError(msg.str());
}

}  // namespace repression

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

#ifndef REPRESSION_ROOT_FINDING_H_
#define REPRESSION_ROOT_FINDING_H_

#include <functional>

namespace repression {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kDefaultMaxIterations = 200;
// Inset applied to solver brackets before iterating.
inline constexpr double kBracketInset = 1e-14;

struct RootResult {
  double x = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

// Bisection with secant acceleration on [lo, hi]. Requires f(lo) and
// f(hi) of opposite sign (or one of them zero). Stops once |f(x)| <= tol or
// the bracket collapses to adjacent doubles. Throws SolverError when the
// bracket does not straddle a root or when max_iterations is exhausted with
// |f| > tol.
RootResult BracketedRoot(const std::function<double(double)>& f, double lo,
                         double hi, double tol = kDefaultTol,
                         int max_iterations = kDefaultMaxIterations);

}  // namespace repression

#endif  // REPRESSION_ROOT_FINDING_H_

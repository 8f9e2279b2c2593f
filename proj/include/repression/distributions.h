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

#ifndef REPRESSION_DISTRIBUTIONS_H_
#define REPRESSION_DISTRIBUTIONS_H_

#include <string>
#include <utility>
#include <vector>

namespace repression {

enum class CdfFamily { kUniform, kScaledBeta, kPiecewiseLinear };

std::string FamilyName(CdfFamily family);

// A continuous distribution on a bounded interval [lo, hi]. Used for the
// protest-cost distribution G and the concealment-cost distribution H.
//
// The CDF is extended to the whole real line by clamping: 0 below lo, 1 above
// hi. Instances are immutable after construction.
class BoundedCdf {
 public:
  using Knot = std::pair<double, double>;  // (x, F(x))

  static BoundedCdf Uniform(double lo, double hi);
  // Beta(a, b) rescaled from [0,1] onto [lo, hi].
  static BoundedCdf ScaledBeta(double lo, double hi, double a, double b);
  // Knots must be strictly increasing in both coordinates, start at
  // (lo, 0) and end at (hi, 1).
  static BoundedCdf PiecewiseLinear(std::vector<Knot> knots);

  CdfFamily family() const { return family_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double shape_a() const { return a_; }
  double shape_b() const { return b_; }
  const std::vector<Knot>& knots() const { return knots_; }

  double Cdf(double x) const;
  // Smallest x in [lo, hi] with Cdf(x) >= p. Throws DomainError for p
  // outside [0,1].
  double Quantile(double p) const;
  // Inverse-transform sample for a variate u in [0,1).
  double Sample(double u) const { return Quantile(u); }

  // Same family moved onto the support [new_lo, new_hi] by an affine map
  // of the argument. Used by sweeps and shift families.
  BoundedCdf WithSupport(double new_lo, double new_hi) const;

  bool operator==(const BoundedCdf& other) const = default;

 private:
  BoundedCdf(CdfFamily family, double lo, double hi)
      : family_(family), lo_(lo), hi_(hi) {}

  CdfFamily family_;
  double lo_;
  double hi_;
  double a_ = 1.0;
  double b_ = 1.0;
  std::vector<Knot> knots_;
};

inline constexpr int kDefaultFosdGrid = 1024;

// Strict first-order stochastic dominance of d1 over d2 in the "pointwise
// smaller CDF" sense: d1.Cdf(x) < d2.Cdf(x) at every interior grid point of
// the union support where both CDFs lie strictly inside (0,1), and
// d1.Cdf(x) <= d2.Cdf(x) at every grid point. Throws DomainError when
// grid_size < 2.
bool FosdDominates(const BoundedCdf& d1, const BoundedCdf& d2,
                   int grid_size = kDefaultFosdGrid);

}  // namespace repression

#endif  // REPRESSION_DISTRIBUTIONS_H_

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

#include "repression/distributions.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/special_functions/beta.hpp>

#include "repression/errors.h"

namespace repression {

std::string FamilyName(CdfFamily family) {
  switch (family) {
    case CdfFamily::kUniform:
      return "uniform";
    case CdfFamily::kScaledBeta:
      return "scaled_beta";
    case CdfFamily::kPiecewiseLinear:
      return "piecewise_linear";
  }
  return "unknown";
}

namespace {

void CheckSupport(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    std::ostringstream msg;
    msg << "distribution support requires finite lo < hi, got [" << lo << ", "
        << hi << "]";
    throw RejectedInput(msg.str());
  }
}

}  // namespace

BoundedCdf BoundedCdf::Uniform(double lo, double hi) {
  CheckSupport(lo, hi);
  return BoundedCdf(CdfFamily::kUniform, lo, hi);
}

BoundedCdf BoundedCdf::ScaledBeta(double lo, double hi, double a, double b) {
  CheckSupport(lo, hi);
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw RejectedInput("scaled_beta shapes must be positive and finite");
  }
  BoundedCdf d(CdfFamily::kScaledBeta, lo, hi);
  d.a_ = a;
  d.b_ = b;
  return d;
}

BoundedCdf BoundedCdf::PiecewiseLinear(std::vector<Knot> knots) {
  if (knots.size() < 2) {
    throw RejectedInput("piecewise_linear needs at least two knots");
  }
  if (knots.front().second != 0.0 || knots.back().second != 1.0) {
    throw RejectedInput("piecewise_linear knots must run from F=0 to F=1");
  }
  for (size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first) ||
        !(knots[i].second > knots[i - 1].second)) {
      throw RejectedInput(
          "piecewise_linear knots must be strictly increasing in x and F");
    }
  }
  CheckSupport(knots.front().first, knots.back().first);
  BoundedCdf d(CdfFamily::kPiecewiseLinear, knots.front().first,
               knots.back().first);
  d.knots_ = std::move(knots);
  return d;
}

double BoundedCdf::Cdf(double x) const {
  if (x <= lo_) return 0.0;
  if (x >= hi_) return 1.0;
  switch (family_) {
    case CdfFamily::kUniform:
      return (x - lo_) / (hi_ - lo_);
    case CdfFamily::kScaledBeta:
      return boost::math::ibeta(a_, b_, (x - lo_) / (hi_ - lo_));
    case CdfFamily::kPiecewiseLinear: {
      auto it = std::upper_bound(
          knots_.begin(), knots_.end(), x,
          [](double v, const Knot& k) { return v < k.first; });
      const Knot& right = *it;
      const Knot& left = *(it - 1);
      double t = (x - left.first) / (right.first - left.first);
      return left.second + t * (right.second - left.second);
    }
  }
  return 0.0;
}

double BoundedCdf::Quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "quantile probability must lie in [0,1], got " << p;
    throw DomainError(msg.str());
  }
  if (p == 0.0) return lo_;
  if (p == 1.0) return hi_;
  switch (family_) {
    case CdfFamily::kUniform:
      return lo_ + (hi_ - lo_) * p;
    case CdfFamily::kScaledBeta:
      return lo_ + (hi_ - lo_) * boost::math::ibeta_inv(a_, b_, p);
    case CdfFamily::kPiecewiseLinear: {
      auto it = std::lower_bound(
          knots_.begin(), knots_.end(), p,
          [](const Knot& k, double v) { return k.second < v; });
      const Knot& right = *it;
      const Knot& left = *(it - 1);
      double t = (p - left.second) / (right.second - left.second);
      return left.first + t * (right.first - left.first);
    }
  }
  return lo_;
}

BoundedCdf BoundedCdf::WithSupport(double new_lo, double new_hi) const {
  CheckSupport(new_lo, new_hi);
  switch (family_) {
    case CdfFamily::kUniform:
      return Uniform(new_lo, new_hi);
    case CdfFamily::kScaledBeta:
      return ScaledBeta(new_lo, new_hi, a_, b_);
    case CdfFamily::kPiecewiseLinear: {
      std::vector<Knot> moved = knots_;
      double scale = (new_hi - new_lo) / (hi_ - lo_);
      for (auto& k : moved) k.first = new_lo + (k.first - lo_) * scale;
      moved.front().first = new_lo;
      moved.back().first = new_hi;
      return PiecewiseLinear(std::move(moved));
    }
  }
  return *this;
}

bool FosdDominates(const BoundedCdf& d1, const BoundedCdf& d2,
                   int grid_size) {
  if (grid_size < 2) {
    throw DomainError("FOSD grid_size must be at least 2");
  }
  const double lo = std::min(d1.lo(), d2.lo());
  const double hi = std::max(d1.hi(), d2.hi());
  bool any_strict = false;
  for (int i = 1; i <= grid_size; ++i) {
    const double x = lo + (hi - lo) * i / (grid_size + 1.0);
    const double f1 = d1.Cdf(x);
    const double f2 = d2.Cdf(x);
    if (f1 > f2) return false;
    const bool both_interior = f1 > 0.0 && f1 < 1.0 && f2 > 0.0 && f2 < 1.0;
    if (both_interior && !(f1 < f2)) return false;
    if (f1 < f2) any_strict = true;
  }
  return any_strict;
}

}  // namespace repression

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

// One-axis comparative statics: solve the equilibrium at each point of an
// evenly spaced grid and tabulate repression probabilities and effects.

#ifndef REPRESSION_SWEEP_H_
#define REPRESSION_SWEEP_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "repression/model.h"

namespace repression {

// H_lo and G_lo move the lower end of the cost support, keeping the upper
// end fixed.
enum class SweepAxis { kHLo, kGLo, kQ, kGamma, kBetaB, kAlphaG };
enum class SweepVariant { kMild, kSevere };

std::string SweepAxisName(SweepAxis axis);
// Throws ConfigError on an unknown name.
SweepAxis ParseSweepAxis(const std::string& name);

struct SweepSpec {
  SweepAxis axis = SweepAxis::kHLo;
  double start = 0.0;
  double end = 1.0;
  int steps = 2;
  ModelParams base;
  SweepVariant variant = SweepVariant::kMild;

  // Throws DomainError unless start < end and steps >= 2, and RejectedInput
  // when either endpoint yields type-invalid parameters.
  void Validate() const;
};

// Base parameters with the axis set to v.
ModelParams ApplyAxis(const ModelParams& base, SweepAxis axis, double v);

struct SweepRow {
  double axis_value = 0.0;
  bool assumption_ok = false;
  // Numeric cells are empty when the assumption fails at this point.
  std::optional<double> c_tilde;    // mild
  std::optional<double> c_tilde_b;  // severe
  std::optional<double> c_tilde_g;  // severe
  std::optional<double> prob_revealed;
  std::optional<double> prob_concealed;
  std::optional<double> prob_total;
  std::optional<double> p_r;
  std::optional<double> p_nn;
  std::optional<double> p_prior;
  std::optional<double> d;
  std::optional<double> d_lower;
};

struct SweepTable {
  SweepSpec spec;
  std::vector<SweepRow> rows;  // ordered by axis value
};

// Column names in output order for the given variant.
std::vector<std::string> SweepColumns(SweepVariant variant);

// Throws RejectedInput when no grid point satisfies the assumption.
SweepTable RunSweep(const SweepSpec& spec, bool parallel = true);

// CSV with SweepColumns as header; empty cells for invalid points.
void WriteSweepCsv(std::ostream& out, const SweepTable& table);

}  // namespace repression

#endif  // REPRESSION_SWEEP_H_

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

// Run configuration (UTF-8 JSON) and the deterministic JSON encoding of every
// result type. Reals are written with 12 significant digits and non-finite
// values as null, so repeated runs produce byte-identical output.
//
// Config layout:
//   {
//     "gamma": 0.4, "q": 0.65, "beta_G": 2.5, "beta_B": -1,
//     "alpha_G": 0.6, "alpha_B": 0.7,
//     "G": {"family": "uniform", "lo": 0, "hi": 1},
//     "H": {"family": "scaled_beta", "lo": 0, "hi": 1, "a": 2, "b": 3},
//     "tol": 1e-10, "n": 1000000, "seed": 7, "variant": "mild",
//     "grid": 1000, "draws": 500,
//     "sweep": {"axis": "H_lo", "start": 0, "end": 0.55, "steps": 12}
//   }
// G and H default to uniform on [0,1]; piecewise-linear distributions take
// "knots": [[x0, 0], ..., [xn, 1]]. Unknown keys are rejected.

#ifndef REPRESSION_CONFIG_H_
#define REPRESSION_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "repression/model.h"
#include "repression/simulate.h"
#include "repression/solver_mild.h"
#include "repression/solver_severe.h"
#include "repression/sweep.h"
#include "repression/verify.h"

namespace repression {

using Json = nlohmann::ordered_json;

struct SweepConfig {
  std::optional<std::string> axis;
  std::optional<double> start;
  std::optional<double> end;
  std::optional<int> steps;
  std::optional<std::string> variant;
};

struct RunConfig {
  ModelParams params;
  std::optional<double> tol;
  std::optional<uint64_t> n;
  std::optional<uint64_t> seed;
  std::optional<std::string> variant;
  std::optional<int> grid;
  std::optional<int> draws;
  std::optional<SweepConfig> sweep;
};

// Accepts // and /* */ comments. Throws ConfigError with a line-numbered
// message on malformed JSON, unknown keys, wrong value types, or type-invalid
// parameters.
RunConfig ParseConfig(const std::string& text);
RunConfig LoadConfig(const std::string& path);

// "%.12g"; "nan"/"inf" for non-finite values.
std::string FormatReal(double v);
// Real rounded to 12 significant digits, or null when non-finite.
Json RealJson(double v);
// Pretty-printed with a trailing newline.
std::string DumpJson(const Json& j);

Json CdfJson(const BoundedCdf& cdf);
Json ParamsJson(const ModelParams& params);
Json AssumptionJson(const AssumptionReport& report);
Json BeliefJson(const Belief& belief);
Json ProbabilitiesJson(const RepressionProbabilities& prob);
Json MildJson(const ModelParams& params, const MildEquilibrium& eq);
Json NoConcessionJson(const NoConcessionEquilibrium& eq);
Json SevereJson(const SevereEquilibrium& eq);
Json SimStatsJson(const SimStats& stats);
// Reads the "n_episodes" and "counts" members written by SimStatsJson.
// Throws ConfigError on a malformed document.
SimStats SimStatsFromJson(const Json& j);
Json EstimationJson(const EstimationReport& report);
Json SweepJson(const SweepTable& table);
Json RegretJson(const RegretReport& report);
Json FosdJson(const FosdReport& report);
Json LimitJson(const LimitReport& report);
Json MonotonicityJson(const MonotonicityReport& report);
Json SignLawJson(const SignLawReport& report);

}  // namespace repression

#endif  // REPRESSION_CONFIG_H_

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

#include "repression/config.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace repression {
namespace {

// Locates keys in the raw text so semantic errors can cite a line.
class KeyLocator {
 public:
  explicit KeyLocator(const std::string& text) : text_(text) {}

  // Offset of the first occurrence of "key" at or after `from`, or `from`.
  size_t Find(const std::string& key, size_t from = 0) const {
    const size_t pos = text_.find("\"" + key + "\"", from);
    return pos == std::string::npos ? from : pos;
  }

  int LineAt(size_t offset) const {
    return 1 + static_cast<int>(std::count(
                   text_.begin(),
                   text_.begin() + std::min(offset, text_.size()), '\n'));
  }

  [[noreturn]] void Fail(const std::string& key, size_t from,
                         const std::string& what) const {
    throw ConfigError("config line " + std::to_string(LineAt(Find(key, from))) +
                      ": '" + key + "' " + what);
  }

 private:
  const std::string& text_;
};

void RejectUnknown(const Json& obj, const std::set<std::string>& allowed,
                   const KeyLocator& loc, size_t scope) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) loc.Fail(key, scope, "is not a recognized key");
  }
}

double GetReal(const Json& obj, const std::string& key, const KeyLocator& loc,
               size_t scope) {
  const Json& v = obj.at(key);
  if (!v.is_number()) loc.Fail(key, scope, "must be a number");
  return v.get<double>();
}

uint64_t GetCount(const Json& obj, const std::string& key,
                  const KeyLocator& loc, size_t scope) {
  const Json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<int64_t>() < 0) {
    loc.Fail(key, scope, "must be a nonnegative integer");
  }
  return v.get<uint64_t>();
}

int GetInt(const Json& obj, const std::string& key, const KeyLocator& loc,
           size_t scope) {
  const uint64_t v = GetCount(obj, key, loc, scope);
  if (v > 1000000000ULL) loc.Fail(key, scope, "is too large");
  return static_cast<int>(v);
}

std::string GetString(const Json& obj, const std::string& key,
                      const KeyLocator& loc, size_t scope) {
  const Json& v = obj.at(key);
  if (!v.is_string()) loc.Fail(key, scope, "must be a string");
  return v.get<std::string>();
}

BoundedCdf ParseCdf(const Json& obj, const std::string& name,
                    const KeyLocator& loc) {
  const size_t scope = loc.Find(name);
  if (!obj.is_object()) loc.Fail(name, 0, "must be an object");
  const std::string family =
      obj.contains("family") ? GetString(obj, "family", loc, scope) : "uniform";
  const double lo = obj.contains("lo") ? GetReal(obj, "lo", loc, scope) : 0.0;
  const double hi = obj.contains("hi") ? GetReal(obj, "hi", loc, scope) : 1.0;
  try {
    if (family == "uniform") {
      RejectUnknown(obj, {"family", "lo", "hi"}, loc, scope);
      return BoundedCdf::Uniform(lo, hi);
    }
    if (family == "scaled_beta") {
      RejectUnknown(obj, {"family", "lo", "hi", "a", "b"}, loc, scope);
      if (!obj.contains("a") || !obj.contains("b")) {
        loc.Fail(name, 0, "scaled_beta needs shape parameters 'a' and 'b'");
      }
      return BoundedCdf::ScaledBeta(lo, hi, GetReal(obj, "a", loc, scope),
                                    GetReal(obj, "b", loc, scope));
    }
    if (family == "piecewise_linear") {
      RejectUnknown(obj, {"family", "knots"}, loc, scope);
      if (!obj.contains("knots") || !obj.at("knots").is_array()) {
        loc.Fail(name, 0, "piecewise_linear needs a 'knots' array");
      }
      std::vector<BoundedCdf::Knot> knots;
      for (const Json& k : obj.at("knots")) {
        if (!k.is_array() || k.size() != 2 || !k[0].is_number() ||
            !k[1].is_number()) {
          loc.Fail("knots", scope, "entries must be [x, F(x)] number pairs");
        }
        knots.emplace_back(k[0].get<double>(), k[1].get<double>());
      }
      return BoundedCdf::PiecewiseLinear(std::move(knots));
    }
  } catch (const RejectedInput& e) {
    loc.Fail(name, 0, std::string("is not a valid distribution: ") + e.what());
  }
  loc.Fail("family", scope,
           "must be uniform, scaled_beta or piecewise_linear (got '" + family +
               "')");
}

SweepConfig ParseSweep(const Json& obj, const KeyLocator& loc) {
  const size_t scope = loc.Find("sweep");
  if (!obj.is_object()) loc.Fail("sweep", 0, "must be an object");
  RejectUnknown(obj, {"axis", "start", "end", "steps", "variant"}, loc, scope);
  SweepConfig s;
  if (obj.contains("axis")) {
    s.axis = GetString(obj, "axis", loc, scope);
    try {
      ParseSweepAxis(*s.axis);
    } catch (const ConfigError& e) {
      loc.Fail("axis", scope, e.what());
    }
  }
  if (obj.contains("start")) s.start = GetReal(obj, "start", loc, scope);
  if (obj.contains("end")) s.end = GetReal(obj, "end", loc, scope);
  if (obj.contains("steps")) s.steps = GetInt(obj, "steps", loc, scope);
  if (obj.contains("variant")) {
    s.variant = GetString(obj, "variant", loc, scope);
    if (*s.variant != "mild" && *s.variant != "severe") {
      loc.Fail("variant", scope, "must be mild or severe");
    }
  }
  return s;
}

}  // namespace

RunConfig ParseConfig(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  const KeyLocator loc(text);
  if (!root.is_object()) {
    throw ConfigError("config line 1: top level must be a JSON object");
  }
  RejectUnknown(root,
                {"gamma", "q", "beta_G", "beta_B", "alpha_G", "alpha_B", "G",
                 "H", "tol", "n", "seed", "variant", "grid", "draws", "sweep"},
                loc, 0);
  for (const char* key :
       {"gamma", "q", "beta_G", "beta_B", "alpha_G", "alpha_B"}) {
    if (!root.contains(key)) {
      throw ConfigError(std::string("config line 1: missing required key '") +
                        key + "'");
    }
  }
  RunConfig cfg;
  ModelParams& p = cfg.params;
  p.gamma = GetReal(root, "gamma", loc, 0);
  p.q = GetReal(root, "q", loc, 0);
  p.beta_g = GetReal(root, "beta_G", loc, 0);
  p.beta_b = GetReal(root, "beta_B", loc, 0);
  p.alpha_g = GetReal(root, "alpha_G", loc, 0);
  p.alpha_b = GetReal(root, "alpha_B", loc, 0);
  if (root.contains("G")) p.protest_cost = ParseCdf(root.at("G"), "G", loc);
  if (root.contains("H")) {
    p.concealment_cost = ParseCdf(root.at("H"), "H", loc);
  }
  if (root.contains("tol")) {
    cfg.tol = GetReal(root, "tol", loc, 0);
    if (!(*cfg.tol > 0.0)) loc.Fail("tol", 0, "must be positive");
  }
  if (root.contains("n")) cfg.n = GetCount(root, "n", loc, 0);
  if (root.contains("seed")) cfg.seed = GetCount(root, "seed", loc, 0);
  if (root.contains("variant")) {
    cfg.variant = GetString(root, "variant", loc, 0);
    if (*cfg.variant != "mild" && *cfg.variant != "severe" &&
        *cfg.variant != "no-concession") {
      loc.Fail("variant", 0, "must be mild, severe or no-concession");
    }
  }
  if (root.contains("grid")) cfg.grid = GetInt(root, "grid", loc, 0);
  if (root.contains("draws")) cfg.draws = GetInt(root, "draws", loc, 0);
  if (root.contains("sweep")) cfg.sweep = ParseSweep(root.at("sweep"), loc);
  try {
    p.Validate();
  } catch (const RejectedInput& e) {
    throw ConfigError(std::string("config: invalid parameters: ") + e.what());
  }
  return cfg;
}

RunConfig LoadConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

std::string FormatReal(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Json RealJson(double v) {
  if (!std::isfinite(v)) return nullptr;
  const double rounded = std::strtod(FormatReal(v).c_str(), nullptr);
  // Avoid "-0.0" in output.
  return rounded == 0.0 ? 0.0 : rounded;
}

std::string DumpJson(const Json& j) { return j.dump(2) + "\n"; }

Json CdfJson(const BoundedCdf& cdf) {
  Json j;
  j["family"] = FamilyName(cdf.family());
  switch (cdf.family()) {
    case CdfFamily::kUniform:
      j["lo"] = RealJson(cdf.lo());
      j["hi"] = RealJson(cdf.hi());
      break;
    case CdfFamily::kScaledBeta:
      j["lo"] = RealJson(cdf.lo());
      j["hi"] = RealJson(cdf.hi());
      j["a"] = RealJson(cdf.shape_a());
      j["b"] = RealJson(cdf.shape_b());
      break;
    case CdfFamily::kPiecewiseLinear: {
      Json knots = Json::array();
      for (const auto& [x, f] : cdf.knots()) {
        knots.push_back(Json::array({RealJson(x), RealJson(f)}));
      }
      j["knots"] = knots;
      break;
    }
  }
  return j;
}

Json ParamsJson(const ModelParams& p) {
  Json j;
  j["gamma"] = RealJson(p.gamma);
  j["q"] = RealJson(p.q);
  j["beta_G"] = RealJson(p.beta_g);
  j["beta_B"] = RealJson(p.beta_b);
  j["alpha_G"] = RealJson(p.alpha_g);
  j["alpha_B"] = RealJson(p.alpha_b);
  j["G"] = CdfJson(p.protest_cost);
  j["H"] = CdfJson(p.concealment_cost);
  return j;
}

Json AssumptionJson(const AssumptionReport& report) {
  Json j;
  j["assumption"] = report.assumption;
  j["pass"] = report.Pass();
  Json clauses = Json::array();
  for (size_t i = 0; i < report.clauses.size(); ++i) {
    const AssumptionClause& c = report.clauses[i];
    Json cj;
    cj["index"] = i + 1;
    cj["name"] = c.name;
    cj["relation"] = c.relation;
    cj["lhs"] = RealJson(c.lhs);
    cj["rhs"] = RealJson(c.rhs);
    cj["pass"] = c.pass;
    clauses.push_back(cj);
  }
  j["clauses"] = clauses;
  return j;
}

Json BeliefJson(const Belief& b) {
  Json j;
  j["G"] = RealJson(b.good);
  j["B"] = RealJson(b.bad);
  j["N"] = RealJson(b.none);
  return j;
}

Json ProbabilitiesJson(const RepressionProbabilities& p) {
  Json j;
  j["revealed_given_good"] = RealJson(p.revealed_given_good);
  j["revealed_given_bad"] = RealJson(p.revealed_given_bad);
  j["revealed"] = RealJson(p.revealed);
  j["concealed"] = RealJson(p.concealed);
  j["total"] = RealJson(p.total);
  j["concession"] = RealJson(p.concession);
  return j;
}

Json MildJson(const ModelParams& params, const MildEquilibrium& eq) {
  Json j;
  j["variant"] = "mild";
  j["c_tilde"] = RealJson(eq.c_tilde);
  j["kappa"] = RealJson(eq.kappa);
  j["gamma_prime"] = RealJson(eq.gamma_prime);
  j["q_prime"] = RealJson(eq.q_prime);
  j["mu_R"] = BeliefJson(eq.mu_r);
  j["mu_NN"] = BeliefJson(eq.mu_nn);
  j["prob"] = ProbabilitiesJson(eq.prob);
  j["prob_unconditional"] =
      ProbabilitiesJson(Unconditional(eq.prob, params.gamma));
  j["p_R"] = RealJson(eq.p_r);
  j["p_NN"] = RealJson(eq.p_nn);
  j["p_prior"] = RealJson(eq.p_prior);
  j["D"] = RealJson(eq.d);
  j["D_lower"] = RealJson(eq.d_lower);
  j["residual"] = RealJson(eq.residual);
  Json limits;
  try {
    const DegenerateLimits lim = MildDegenerateLimits(params);
    limits["prohibitive"] = RealJson(lim.prohibitive);
    limits["negligible"] = RealJson(lim.negligible);
    limits["all_conceal"] = lim.all_conceal;
  } catch (const RejectedInput& e) {
    limits["error"] = e.what();
  }
  j["degenerate_cost_limits"] = limits;
  return j;
}

Json NoConcessionJson(const NoConcessionEquilibrium& eq) {
  Json j;
  j["variant"] = "no-concession";
  j["c_tilde"] = RealJson(eq.c_tilde);
  j["gamma_prime"] = RealJson(eq.gamma_prime);
  j["mu_R"] = BeliefJson(eq.mu_r);
  j["mu_NN"] = BeliefJson(eq.mu_nn);
  j["prob_revealed"] = RealJson(eq.prob_revealed);
  j["prob_concealed"] = RealJson(eq.prob_concealed);
  j["p_R"] = RealJson(eq.p_r);
  j["p_NN"] = RealJson(eq.p_nn);
  j["p_prior"] = RealJson(eq.p_prior);
  j["residual"] = RealJson(eq.residual);
  return j;
}

Json SevereJson(const SevereEquilibrium& eq) {
  Json j;
  j["variant"] = "severe";
  j["c_tilde_B"] = RealJson(eq.c_tilde_b);
  j["c_tilde_G"] = RealJson(eq.c_tilde_g);
  j["corner"] = eq.corner;
  j["mu_R"] = BeliefJson(eq.mu_r);
  j["mu_NN"] = BeliefJson(eq.mu_nn);
  j["prob"] = ProbabilitiesJson(eq.prob);
  j["p_R"] = RealJson(eq.p_r);
  j["p_NN"] = RealJson(eq.p_nn);
  j["p_prior"] = RealJson(eq.p_prior);
  j["D"] = RealJson(eq.d);
  j["D_lower"] = RealJson(eq.d_lower);
  j["residual_B"] = RealJson(eq.residual_b);
  j["residual_G"] = RealJson(eq.residual_g);
  Json others = Json::array();
  for (const SevereFixedPoint& fp : eq.multiplicity_note) {
    Json f;
    f["c_tilde_B"] = RealJson(fp.c_tilde_b);
    f["c_tilde_G"] = RealJson(fp.c_tilde_g);
    f["corner"] = fp.corner;
    others.push_back(f);
  }
  j["multiplicity_note"] = others;
  j["notes"] = eq.notes;
  return j;
}

Json SimStatsJson(const SimStats& s) {
  Json j;
  j["n_episodes"] = s.n_episodes;
  j["counts"] = s.counts;
  Json freq;
  freq["organized"] = s.Organized();
  freq["p_hat_revealed"] = RealJson(s.PHatRevealed());
  freq["q_hat"] = RealJson(s.QHat());
  freq["q_hat_prime"] = RealJson(s.QHatPrime());
  freq["p_hat_R"] = RealJson(s.PHatR());
  freq["p_hat_NN"] = RealJson(s.PHatNN());
  freq["se_p_hat_revealed"] = RealJson(s.SeRevealed());
  freq["se_q_hat"] = RealJson(s.SeQ());
  freq["se_q_hat_prime"] = RealJson(s.SeQPrime());
  freq["se_p_hat_R"] = RealJson(s.SeR());
  freq["se_p_hat_NN"] = RealJson(s.SeNN());
  j["frequencies"] = freq;
  return j;
}

SimStats SimStatsFromJson(const Json& j) {
  const Json* src = &j;
  if (j.is_object() && j.contains("stats")) src = &j.at("stats");
  if (!src->is_object() || !src->contains("n_episodes") ||
      !src->contains("counts")) {
    throw ConfigError("stats: expected 'n_episodes' and 'counts'");
  }
  const Json& counts = src->at("counts");
  if (!counts.is_array() || counts.size() != SimStats::kCells) {
    throw ConfigError("stats: 'counts' must hold " +
                      std::to_string(SimStats::kCells) + " integers");
  }
  SimStats s;
  try {
    s.n_episodes = src->at("n_episodes").get<uint64_t>();
    uint64_t total = 0;
    for (int i = 0; i < SimStats::kCells; ++i) {
      if (!counts[i].is_number_unsigned() && !counts[i].is_number_integer()) {
        throw ConfigError("stats: counts must be integers");
      }
      s.counts[i] = counts[i].get<uint64_t>();
      total += s.counts[i];
    }
    if (total != s.n_episodes) {
      throw ConfigError("stats: counts do not sum to n_episodes");
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("stats: ") + e.what());
  }
  return s;
}

Json EstimationJson(const EstimationReport& r) {
  Json j;
  j["total_hat"] = RealJson(r.total_hat);
  j["H_hat"] = RealJson(r.h_hat);
  j["D_lower_hat"] = RealJson(r.d_lower_hat);
  j["se_total_hat"] = RealJson(r.se_total_hat);
  j["se_H_hat"] = RealJson(r.se_h_hat);
  j["se_D_lower_hat"] = RealJson(r.se_d_lower_hat);
  j["inconsistent_sample"] = r.inconsistent_sample;
  j["warnings"] = r.warnings;
  return j;
}

Json SweepJson(const SweepTable& table) {
  const SweepSpec& spec = table.spec;
  Json j;
  j["axis"] = SweepAxisName(spec.axis);
  j["variant"] = spec.variant == SweepVariant::kMild ? "mild" : "severe";
  j["start"] = RealJson(spec.start);
  j["end"] = RealJson(spec.end);
  j["steps"] = spec.steps;
  j["base"] = ParamsJson(spec.base);
  const std::vector<std::string> cols = SweepColumns(spec.variant);
  Json rows = Json::array();
  auto opt = [](const std::optional<double>& v) -> Json {
    return v ? RealJson(*v) : Json(nullptr);
  };
  for (const SweepRow& r : table.rows) {
    std::vector<Json> cells = {RealJson(r.axis_value), r.assumption_ok};
    if (spec.variant == SweepVariant::kMild) {
      cells.push_back(opt(r.c_tilde));
    } else {
      cells.push_back(opt(r.c_tilde_b));
      cells.push_back(opt(r.c_tilde_g));
    }
    for (const auto* v : {&r.prob_revealed, &r.prob_concealed, &r.prob_total,
                          &r.p_r, &r.p_nn, &r.p_prior, &r.d, &r.d_lower}) {
      cells.push_back(opt(*v));
    }
    Json row;
    for (size_t i = 0; i < cols.size(); ++i) row[cols[i]] = cells[i];
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json RegretJson(const RegretReport& r) {
  Json j;
  j["pass"] = r.Pass();
  j["max_regret"] = RealJson(r.max_regret);
  j["worst_type"] = {{"theta", TypeName(r.worst_theta)},
                     {"c", RealJson(r.worst_c)}};
  j["indifference_gap"] = RealJson(r.indifference_gap);
  j["bayes_gap"] = RealJson(r.bayes_gap);
  j["reveal_on_path"] = r.reveal_on_path;
  Json gaps;
  for (const IdentityGap& g : r.identity_gaps) {
    gaps[g.name] = {{"value", RealJson(g.value)},
                    {"tolerance", RealJson(g.tolerance)},
                    {"pass", g.Pass()}};
  }
  j["identity_gaps"] = gaps.is_null() ? Json::object() : gaps;
  return j;
}

Json FosdJson(const FosdReport& r) {
  Json j;
  j["applicable"] = r.applicable;
  j["pass"] = r.Pass();
  j["revealed"] = Json::array({RealJson(r.revealed_1), RealJson(r.revealed_2)});
  j["total"] = Json::array({RealJson(r.total_1), RealJson(r.total_2)});
  j["revealed_higher_under_first"] = r.revealed_higher_under_1;
  j["total_lower_under_first"] = r.total_lower_under_1;
  return j;
}

Json LimitJson(const LimitReport& r) {
  Json j;
  Json entries = Json::array();
  for (const LimitEntry& e : r.entries) {
    Json ej;
    ej["family"] = e.family;
    ej["eps"] = RealJson(e.eps);
    ej["assumption_ok"] = e.assumption_ok;
    ej["skipped"] = e.skipped;
    if (!e.skipped) {
      ej["c_tilde"] = RealJson(e.c_tilde);
      ej["H_at_threshold"] = RealJson(e.h_at_threshold);
    }
    if (!e.note.empty()) ej["note"] = e.note;
    entries.push_back(ej);
  }
  j["entries"] = entries;
  j["prohibitive_final"] = RealJson(r.prohibitive_final);
  j["prohibitive_limit"] = RealJson(r.target.prohibitive);
  j["negligible_final"] = RealJson(r.negligible_final);
  j["negligible_limit"] = RealJson(r.target.negligible);
  j["negligible_gap"] = RealJson(r.negligible_gap);
  return j;
}

Json MonotonicityJson(const MonotonicityReport& r) {
  Json j;
  j["axis"] = AxisName(r.axis);
  j["assumption"] = r.assumption;
  j["pass"] = r.Pass();
  j["truncated"] = r.truncated;
  if (!r.note.empty()) j["note"] = r.note;
  j["max_violation"] = RealJson(r.max_violation);
  Json pts = Json::array();
  for (size_t k = 0; k < r.axis_values.size(); ++k) {
    pts.push_back(Json::array({RealJson(r.axis_values[k]),
                               RealJson(r.effect[k])}));
  }
  j["points"] = pts;
  return j;
}

Json SignLawJson(const SignLawReport& r) {
  Json j;
  j["assumption"] = r.assumption;
  j["accepted"] = r.accepted;
  j["attempts"] = r.attempts;
  j["acceptance_rate"] = RealJson(r.acceptance_rate);
  j["violations"] = r.violations;
  j["knife_edges"] = r.knife_edges;
  j["positive_effects"] = r.positive_effects;
  j["solver_failures"] = r.solver_failures;
  return j;
}

}  // namespace repression

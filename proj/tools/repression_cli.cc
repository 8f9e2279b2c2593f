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

// Command-line entry point.
//
// Exit codes: 0 success, 2 assumption violated, 3 solver failure,
// 4 verification failure, 5 bad config or arguments.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "repression/config.h"
#include "repression/simulate.h"
#include "repression/solver_mild.h"
#include "repression/solver_severe.h"
#include "repression/sweep.h"
#include "repression/verify.h"

namespace {

using namespace repression;

constexpr int kExitOk = 0;
constexpr int kExitAssumption = 2;
constexpr int kExitSolver = 3;
constexpr int kExitVerification = 4;
constexpr int kExitConfig = 5;

struct CommonOptions {
  std::string config;
  std::string out;
  std::optional<double> tol;
};

void AddCommon(CLI::App* cmd, CommonOptions& opt, bool config_required) {
  auto* c = cmd->add_option("--config", opt.config, "JSON run configuration");
  if (config_required) c->required();
  cmd->add_option("--out", opt.out, "Write output here instead of stdout");
  cmd->add_option("--tol", opt.tol, "Root-finding tolerance")
      ->check(CLI::PositiveNumber);
}

double Tol(const CommonOptions& opt, const RunConfig& cfg) {
  return opt.tol.value_or(cfg.tol.value_or(kDefaultTol));
}

void Emit(const CommonOptions& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + opt.out + "'");
  f << text;
}

Variant ParseVariant(const std::string& s) {
  if (s == "mild") return Variant::kMild;
  if (s == "severe") return Variant::kSevere;
  if (s == "no-concession") return Variant::kNoConcession;
  throw ConfigError("unknown variant '" + s +
                    "' (expected mild, severe or no-concession)");
}

// Explicit choice, else the assumption that holds (mild first).
Variant ResolveVariant(const std::string& flag, const RunConfig& cfg) {
  if (!flag.empty()) return ParseVariant(flag);
  if (cfg.variant) return ParseVariant(*cfg.variant);
  if (CheckMildConflict(cfg.params).Pass()) return Variant::kMild;
  if (CheckSevereConflict(cfg.params).Pass()) return Variant::kSevere;
  throw AssumptionViolation(CheckMildConflict(cfg.params));
}

int RunCheck(const CommonOptions& opt, const std::string& which) {
  const RunConfig cfg = LoadConfig(opt.config);
  const AssumptionReport mild = CheckMildConflict(cfg.params);
  const AssumptionReport severe = CheckSevereConflict(cfg.params);
  Json j;
  j["params"] = ParamsJson(cfg.params);
  bool pass = false;
  if (which == "mild" || which == "auto") {
    j["mild"] = AssumptionJson(mild);
    pass = pass || mild.Pass();
  }
  if (which == "severe" || which == "auto") {
    j["severe"] = AssumptionJson(severe);
    pass = pass || severe.Pass();
  }
  if (which == "auto") {
    j["operative"] = mild.Pass()     ? Json("mild")
                     : severe.Pass() ? Json("severe")
                                     : Json(nullptr);
  }
  Emit(opt, DumpJson(j));
  return pass ? kExitOk : kExitAssumption;
}

int RunSolveMild(const CommonOptions& opt, bool no_concession) {
  const RunConfig cfg = LoadConfig(opt.config);
  const double tol = Tol(opt, cfg);
  if (no_concession || cfg.variant == std::optional<std::string>("no-concession")) {
    Emit(opt, DumpJson(NoConcessionJson(SolveNoConcession(cfg.params, tol))));
  } else {
    Emit(opt, DumpJson(MildJson(cfg.params, SolveMild(cfg.params, tol))));
  }
  return kExitOk;
}

int RunSolveSevere(const CommonOptions& opt, int scan_grid) {
  const RunConfig cfg = LoadConfig(opt.config);
  SevereOptions so;
  so.tol = Tol(opt, cfg);
  so.scan_grid = scan_grid;
  Emit(opt, DumpJson(SevereJson(SolveSevere(cfg.params, so))));
  return kExitOk;
}

EquilibriumPlay SolvePlay(const ModelParams& params, Variant v, double tol) {
  switch (v) {
    case Variant::kMild:
      return PlayFor(SolveMild(params, tol));
    case Variant::kSevere: {
      SevereOptions so;
      so.tol = tol;
      so.scan_grid = 0;
      return PlayFor(SolveSevere(params, so));
    }
    case Variant::kNoConcession:
      return PlayFor(SolveNoConcession(params, tol));
  }
  throw ConfigError("unknown variant");
}

struct SimulateOptions {
  std::optional<uint64_t> n;
  std::optional<uint64_t> seed;
  std::string variant;
  std::string episodes_out;
};

int RunSimulate(const CommonOptions& opt, const SimulateOptions& so) {
  const RunConfig cfg = LoadConfig(opt.config);
  const Variant v = ResolveVariant(so.variant, cfg);
  const uint64_t n = so.n.value_or(cfg.n.value_or(1000000));
  const uint64_t seed = so.seed.value_or(cfg.seed.value_or(0));
  const EquilibriumPlay play = SolvePlay(cfg.params, v, Tol(opt, cfg));
  const SimStats stats = RunSimulation(cfg.params, play, n, seed);
  Json j;
  j["variant"] = VariantName(v);
  j["n"] = n;
  j["seed"] = seed;
  Json strat;
  if (v == Variant::kSevere) {
    strat["c_tilde_B"] = RealJson(play.strategy.c_tilde_b);
    strat["c_tilde_G"] = RealJson(play.strategy.c_tilde_g);
  } else {
    strat["c_tilde"] = RealJson(play.strategy.c_tilde);
    if (v == Variant::kMild) strat["kappa"] = RealJson(play.strategy.reveal_mix);
  }
  j["strategy"] = strat;
  j["stats"] = SimStatsJson(stats);
  if (v == Variant::kMild) {
    try {
      j["estimates"] = EstimationJson(EstimateFromSim(stats));
    } catch (const UndefinedEstimator& e) {
      j["estimates"] = {{"error", e.what()}};
    }
  }
  if (!so.episodes_out.empty()) {
    std::ofstream f(so.episodes_out, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + so.episodes_out + "'");
    WriteEpisodesCsv(f, cfg.params, play, n, seed);
  }
  Emit(opt, DumpJson(j));
  return kExitOk;
}

struct EstimateOptions {
  std::string stats;
  std::optional<double> q, q_prime, p, p_r, p_nn;
};

int RunEstimate(const CommonOptions& opt, const EstimateOptions& eo) {
  EstimationReport r;
  if (!eo.stats.empty()) {
    std::ifstream in(eo.stats, std::ios::binary);
    if (!in) throw ConfigError("cannot open stats file '" + eo.stats + "'");
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ConfigError(std::string("stats: malformed JSON: ") + e.what());
    }
    r = EstimateFromSim(SimStatsFromJson(doc));
  } else {
    if (!eo.q || !eo.q_prime || !eo.p || !eo.p_r || !eo.p_nn) {
      throw ConfigError(
          "estimate needs --stats or all of --q --q-prime --p --p-R --p-NN");
    }
    r = EstimateFromRaw(*eo.q, *eo.q_prime, *eo.p, *eo.p_r, *eo.p_nn);
  }
  Emit(opt, DumpJson(EstimationJson(r)));
  return kExitOk;
}

struct SweepOptions {
  std::string axis;
  std::optional<double> start, end;
  std::optional<int> steps;
  std::string format = "csv";
  std::string variant;
};

int RunSweepCommand(const CommonOptions& opt, const SweepOptions& so) {
  const RunConfig cfg = LoadConfig(opt.config);
  const SweepConfig sc = cfg.sweep.value_or(SweepConfig{});
  SweepSpec spec;
  spec.base = cfg.params;
  const std::string axis = !so.axis.empty() ? so.axis : sc.axis.value_or("");
  if (axis.empty()) throw ConfigError("sweep needs --axis or sweep.axis");
  spec.axis = ParseSweepAxis(axis);
  if (!so.start && !sc.start) throw ConfigError("sweep needs a start value");
  if (!so.end && !sc.end) throw ConfigError("sweep needs an end value");
  spec.start = so.start ? *so.start : *sc.start;
  spec.end = so.end ? *so.end : *sc.end;
  spec.steps = so.steps.value_or(sc.steps.value_or(11));
  std::string variant =
      !so.variant.empty() ? so.variant : sc.variant.value_or("");
  if (variant.empty()) {
    variant = ResolveVariant("", cfg) == Variant::kSevere ? "severe" : "mild";
  }
  if (variant != "mild" && variant != "severe") {
    throw ConfigError("sweep variant must be mild or severe");
  }
  spec.variant = variant == "mild" ? SweepVariant::kMild : SweepVariant::kSevere;
  const SweepTable table = RunSweep(spec);
  if (so.format == "json") {
    Emit(opt, DumpJson(SweepJson(table)));
  } else {
    std::ostringstream os;
    WriteSweepCsv(os, table);
    Emit(opt, os.str());
  }
  return kExitOk;
}

struct VerifyOptions {
  std::optional<int> grid;
  std::optional<int> draws;
  std::optional<uint64_t> seed;
};

int RunVerify(const CommonOptions& opt, const VerifyOptions& vo) {
  const RunConfig cfg = LoadConfig(opt.config);
  const ModelParams& p = cfg.params;
  const double tol = Tol(opt, cfg);
  const int grid = vo.grid.value_or(cfg.grid.value_or(1000));
  const int draws = vo.draws.value_or(cfg.draws.value_or(500));
  const uint64_t seed = vo.seed.value_or(cfg.seed.value_or(0));
  const bool mild = CheckMildConflict(p).Pass();
  if (!mild && !CheckSevereConflict(p).Pass()) {
    throw AssumptionViolation(CheckMildConflict(p));
  }
  bool pass = true;
  Json j;
  j["assumption"] = mild ? "mild" : "severe";
  if (mild) {
    const RegretReport cert = CertifyMild(p, SolveMild(p, tol), grid, tol);
    pass = pass && cert.Pass();
    j["certificate"] = RegretJson(cert);
    const BoundedCdf& h = p.concealment_cost;
    const BoundedCdf h_costlier =
        h.WithSupport(h.lo() + 0.5 * (p.alpha_g - h.lo()), h.hi());
    try {
      const FosdReport fosd = FosdComparativeStaticsCheck(p, h_costlier, h);
      pass = pass && fosd.Pass();
      j["fosd_costlier_concealment"] = FosdJson(fosd);
    } catch (const AssumptionViolation& e) {
      j["fosd_costlier_concealment"] = {{"skipped", e.what()}};
    }
    const LimitReport lim = LimitCheckDegenerateCosts(
        p, {0.5, 0.1, 0.02, 0.005, 0.001}, tol);
    j["degenerate_cost_limits"] = LimitJson(lim);
  } else {
    SevereOptions so;
    so.tol = tol;
    const RegretReport cert = CertifySevere(p, SolveSevere(p, so), grid, tol);
    pass = pass && cert.Pass();
    j["certificate"] = RegretJson(cert);
  }
  Json mono = Json::array();
  auto axis_check = [&](EffectAxis axis, double lo, double hi) {
    const MonotonicityReport r = MonotonicityCheck(p, axis, lo, hi, 9);
    pass = pass && r.Pass();
    mono.push_back(MonotonicityJson(r));
  };
  axis_check(EffectAxis::kQ, std::max(0.01, p.q - 0.1),
             std::min(0.99, p.q + 0.1));
  axis_check(EffectAxis::kGamma, std::max(0.01, p.gamma - 0.1),
             std::min(0.99, p.gamma + 0.1));
  axis_check(EffectAxis::kBetaB, p.beta_b - 0.5,
             p.beta_b + std::min(0.5, 0.5 * (p.beta_g - p.beta_b)));
  if (mild) {
    const BoundedCdf& g = p.protest_cost;
    axis_check(EffectAxis::kGShift, 0.0, 0.2 * (g.hi() - g.lo()));
  }
  j["monotonicity"] = mono;
  const SignLawReport mild_law = MildSignLaw(draws, seed);
  const SignLawReport severe_law = SevereSignLaw(draws, seed);
  pass = pass && mild_law.Pass(draws) && severe_law.Pass(draws);
  j["sign_laws"] = Json::array({SignLawJson(mild_law), SignLawJson(severe_law)});
  j["pass"] = pass;
  Emit(opt, DumpJson(j));
  return pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium solver, simulator and verifier for repression "
               "with concealment"};
  app.require_subcommand(1);

  CommonOptions check_opt, mild_opt, severe_opt, sim_opt, est_opt, sweep_opt,
      verify_opt;

  std::string check_which = "auto";
  auto* check = app.add_subcommand("check", "Evaluate the conflict assumptions");
  AddCommon(check, check_opt, true);
  check->add_option("--assumption", check_which, "mild, severe or auto")
      ->check(CLI::IsMember({"mild", "severe", "auto"}));

  bool no_concession = false;
  auto* solve_mild =
      app.add_subcommand("solve-mild", "Solve the mild-conflict equilibrium");
  AddCommon(solve_mild, mild_opt, true);
  solve_mild->add_flag("--no-concession", no_concession,
                       "Solve the variant without concessions");

  int scan_grid = 400;
  auto* solve_severe = app.add_subcommand(
      "solve-severe", "Solve the severe-conflict equilibrium");
  AddCommon(solve_severe, severe_opt, true);
  solve_severe
      ->add_option("--scan-grid", scan_grid,
                   "Points per axis of the multiplicity scan (0 disables)")
      ->check(CLI::NonNegativeNumber);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo play");
  AddCommon(simulate, sim_opt, true);
  simulate->add_option("--n", sim.n, "Number of episodes");
  simulate->add_option("--seed", sim.seed, "Random seed");
  simulate->add_option("--variant", sim.variant,
                       "mild, severe or no-concession");
  simulate->add_option("--episodes-out", sim.episodes_out,
                       "Write per-episode CSV here");

  EstimateOptions est;
  auto* estimate =
      app.add_subcommand("estimate", "Plug-in estimators from observables");
  AddCommon(estimate, est_opt, false);
  estimate->add_option("--stats", est.stats, "Output of the simulate command");
  estimate->add_option("--q", est.q, "Share of good among organized");
  estimate->add_option("--q-prime", est.q_prime,
                       "Share of good among revealed repression");
  estimate->add_option("--p", est.p, "Revealed repression frequency");
  estimate->add_option("--p-R", est.p_r, "Protest frequency after repression");
  estimate->add_option("--p-NN", est.p_nn, "Protest frequency after no news");

  SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "One-axis comparative statics");
  AddCommon(sweep, sweep_opt, true);
  sweep->add_option("--axis", sw.axis, "H_lo, G_lo, q, gamma, beta_B, alpha_G");
  sweep->add_option("--start", sw.start, "First axis value");
  sweep->add_option("--end", sw.end, "Last axis value");
  sweep->add_option("--steps", sw.steps, "Number of grid points");
  sweep->add_option("--format", sw.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--variant", sw.variant, "mild or severe");

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Certify the equilibrium");
  AddCommon(verify, verify_opt, true);
  verify->add_option("--grid", ver.grid, "Type-grid points")
      ->check(CLI::Range(2, 100000000));
  verify->add_option("--draws", ver.draws, "Randomized draws per sign law")
      ->check(CLI::Range(1, 100000));
  verify->add_option("--seed", ver.seed, "Seed for randomized draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*check) return RunCheck(check_opt, check_which);
    if (*solve_mild) return RunSolveMild(mild_opt, no_concession);
    if (*solve_severe) return RunSolveSevere(severe_opt, scan_grid);
    if (*simulate) return RunSimulate(sim_opt, sim);
    if (*estimate) return RunEstimate(est_opt, est);
    if (*sweep) return RunSweepCommand(sweep_opt, sw);
    if (*verify) return RunVerify(verify_opt, ver);
  } catch (const AssumptionViolation& e) {
    std::cerr << "assumption violated: " << e.what() << "\n";
    return kExitAssumption;
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const RejectedInput& e) {
    std::cerr << "rejected input: " << e.what() << "\n";
    return kExitAssumption;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const UndefinedEstimator& e) {
    std::cerr << "estimator undefined: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitConfig;
}

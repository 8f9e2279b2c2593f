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

// Seeded Monte Carlo play of the repression game under a solved equilibrium,
// plus the plug-in estimators computed from simulated observables.
//
// Every random draw is a pure function of (seed, episode index, slot), so
// episodes can be evaluated in any order or in parallel and still aggregate
// to bit-identical statistics.

#ifndef REPRESSION_SIMULATE_H_
#define REPRESSION_SIMULATE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "repression/model.h"
#include "repression/solver_mild.h"
#include "repression/solver_severe.h"

namespace repression {

enum class Variant { kMild, kSevere, kNoConcession };
enum class RegimeMove { kNone = 0, kConcede = 1, kReveal = 2, kConceal = 3 };
enum class Observation { kRevealed = 0, kNoNews = 1, kConcession = 2 };

std::string VariantName(Variant v);
std::string MoveName(RegimeMove m);
std::string ObservationName(Observation o);
std::string TypeName(ActivistType t);

// Uniform variate in [0,1) keyed by (seed, index, slot).
double CounterUniform(uint64_t seed, uint64_t index, uint32_t slot);

// Regime strategy read off a solved equilibrium.
struct Strategy {
  Variant variant = Variant::kMild;
  double c_tilde = 0.0;    // mild and no-concession threshold
  double c_tilde_b = 0.0;  // severe, bad type
  double c_tilde_g = 0.0;  // severe, good type
  // Mild: probability a good-type regime above c_tilde reveals rather than
  // concedes. Equal to kappa.
  double reveal_mix = 0.0;
};

// Strategy plus the public posteriors it induces.
struct EquilibriumPlay {
  Strategy strategy;
  Belief mu_r;
  Belief mu_nn;
};

EquilibriumPlay PlayFor(const MildEquilibrium& eq);
EquilibriumPlay PlayFor(const SevereEquilibrium& eq);
EquilibriumPlay PlayFor(const NoConcessionEquilibrium& eq);

// Throws DomainError for ActivistType::kNone (the regime has no move).
// A cost exactly at a threshold is assigned to concealment.
RegimeMove RegimeAction(ActivistType theta, double c, const Strategy& strategy,
                        double u);

// Lemma-style cutoff rule; no protest after a concession.
bool PublicAction(Observation observation, double rho, const Belief& mu_r,
                  const Belief& mu_nn, const ModelParams& params);

struct EpisodeRecord {
  ActivistType theta = ActivistType::kNone;
  std::optional<double> c;  // absent when theta is kNone
  double rho = 0.0;
  RegimeMove action = RegimeMove::kNone;
  Observation observation = Observation::kNoNews;
  bool protested = false;
  bool success = false;
};

// Plays one episode from given primitives.
EpisodeRecord PlayEpisode(const ModelParams& params, const EquilibriumPlay& play,
                          ActivistType theta, double c, double rho,
                          double u_mix);

// Draws and plays episode `index`.
EpisodeRecord DrawEpisode(const ModelParams& params,
                          const EquilibriumPlay& play, uint64_t seed,
                          uint64_t index);

struct SimStats {
  static constexpr int kCells = 3 * 4 * 3 * 2;
  uint64_t n_episodes = 0;
  // Indexed by (theta, action, observation, protested).
  std::array<uint64_t, kCells> counts{};

  static int CellIndex(ActivistType t, RegimeMove a, Observation o,
                       bool protested);
  void Add(const EpisodeRecord& e);
  // Commutative, associative merge.
  void Merge(const SimStats& other);
  bool operator==(const SimStats& other) const = default;

  uint64_t Count(std::optional<ActivistType> t, std::optional<RegimeMove> a,
                 std::optional<Observation> o,
                 std::optional<bool> protested) const;

  uint64_t Organized() const;
  // Frequencies; NaN when the conditioning set is empty.
  double PHatRevealed() const;  // revealed repression among organized
  double PHatR() const;         // protest frequency after revealed repression
  double PHatNN() const;        // protest frequency after no news
  double QHat() const;          // good among organized
  double QHatPrime() const;     // good among revealed repression
  // Binomial standard errors of the above.
  double SeRevealed() const;
  double SeR() const;
  double SeNN() const;
  double SeQ() const;
  double SeQPrime() const;
};

SimStats SimulateEpisodeRangeSerial(const ModelParams& params,
                                    const EquilibriumPlay& play, uint64_t seed,
                                    uint64_t begin, uint64_t end);
SimStats SimulateEpisodeRangeParallel(const ModelParams& params,
                                      const EquilibriumPlay& play,
                                      uint64_t seed, uint64_t begin,
                                      uint64_t end);

// n episodes with indices [0, n).
SimStats RunSimulation(const ModelParams& params, const EquilibriumPlay& play,
                       uint64_t n, uint64_t seed, bool parallel = true);

// Per-episode CSV with header theta,c,rho,action,observation,protested,success.
void WriteEpisodesCsv(std::ostream& out, const ModelParams& params,
                      const EquilibriumPlay& play, uint64_t n, uint64_t seed);

struct EstimationReport {
  double total_hat = 0.0;
  double h_hat = 0.0;
  double d_lower_hat = 0.0;
  // Delta-method standard errors; NaN when built from raw values.
  double se_total_hat = 0.0;
  double se_h_hat = 0.0;
  double se_d_lower_hat = 0.0;
  bool inconsistent_sample = false;  // q_hat' >= q_hat or H_hat outside [0,1]
  std::vector<std::string> warnings;
};

// Throws UndefinedEstimator when no episode shows revealed repression.
EstimationReport EstimateFromSim(const SimStats& stats);

// Same estimators from externally measured frequencies.
EstimationReport EstimateFromRaw(double q_hat, double q_hat_prime,
                                 double p_hat, double p_hat_r,
                                 double p_hat_nn);

}  // namespace repression

#endif  // REPRESSION_SIMULATE_H_

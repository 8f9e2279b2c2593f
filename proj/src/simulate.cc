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

#include "repression/simulate.h"

#include <cmath>
#include <functional>
#include <limits>

namespace repression {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

enum Slot : uint32_t { kThetaSlot = 0, kCostSlot = 1, kRhoSlot = 2, kMixSlot = 3 };

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Ratio(uint64_t num, uint64_t den) {
  return den == 0 ? kNaN : static_cast<double>(num) / static_cast<double>(den);
}

double BinomialSe(double p, uint64_t n) {
  return n == 0 ? kNaN : std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

ActivistType DrawType(const ModelParams& params, double u) {
  if (u < params.gamma * params.q) return ActivistType::kGood;
  if (u < params.gamma) return ActivistType::kBad;
  return ActivistType::kNone;
}

}  // namespace

std::string VariantName(Variant v) {
  switch (v) {
    case Variant::kMild:
      return "mild";
    case Variant::kSevere:
      return "severe";
    case Variant::kNoConcession:
      return "no-concession";
  }
  return "unknown";
}

std::string MoveName(RegimeMove m) {
  switch (m) {
    case RegimeMove::kNone:
      return "none";
    case RegimeMove::kConcede:
      return "concede";
    case RegimeMove::kReveal:
      return "reveal";
    case RegimeMove::kConceal:
      return "conceal";
  }
  return "unknown";
}

std::string ObservationName(Observation o) {
  switch (o) {
    case Observation::kRevealed:
      return "R";
    case Observation::kNoNews:
      return "NN";
    case Observation::kConcession:
      return "concession";
  }
  return "unknown";
}

std::string TypeName(ActivistType t) {
  switch (t) {
    case ActivistType::kGood:
      return "G";
    case ActivistType::kBad:
      return "B";
    case ActivistType::kNone:
      return "N";
  }
  return "?";
}

double CounterUniform(uint64_t seed, uint64_t index, uint32_t slot) {
  uint64_t key = Mix64(seed + 0x9e3779b97f4a7c15ULL);
  key = Mix64(key ^ (index * 0xd1b54a32d192ed03ULL + slot));
  key = Mix64(key + slot);
  return static_cast<double>(key >> 11) * 0x1.0p-53;
}

EquilibriumPlay PlayFor(const MildEquilibrium& eq) {
  EquilibriumPlay play;
  play.strategy.variant = Variant::kMild;
  play.strategy.c_tilde = eq.c_tilde;
  play.strategy.reveal_mix = eq.kappa;
  play.mu_r = eq.mu_r;
  play.mu_nn = eq.mu_nn;
  return play;
}

EquilibriumPlay PlayFor(const SevereEquilibrium& eq) {
  EquilibriumPlay play;
  play.strategy.variant = Variant::kSevere;
  // At the corner no bad type conceals, including the knife edge c = H.lo.
  play.strategy.c_tilde_b =
      eq.corner ? std::nextafter(eq.c_tilde_b, -1.0 - std::abs(eq.c_tilde_b)) : eq.c_tilde_b;
  play.strategy.c_tilde_g = eq.c_tilde_g;
  play.mu_r = eq.mu_r;
  play.mu_nn = eq.mu_nn;
  return play;
}

EquilibriumPlay PlayFor(const NoConcessionEquilibrium& eq) {
  EquilibriumPlay play;
  play.strategy.variant = Variant::kNoConcession;
  play.strategy.c_tilde = eq.c_tilde;
  play.mu_r = eq.mu_r;
  play.mu_nn = eq.mu_nn;
  return play;
}

RegimeMove RegimeAction(ActivistType theta, double c, const Strategy& strategy,
                        double u) {
  if (theta == ActivistType::kNone) {
    throw DomainError("the regime has no move without an organized activist");
  }
  const bool good = theta == ActivistType::kGood;
  switch (strategy.variant) {
    case Variant::kMild:
      if (c <= strategy.c_tilde) return RegimeMove::kConceal;
      if (!good) return RegimeMove::kReveal;
      return u < strategy.reveal_mix ? RegimeMove::kReveal
                                     : RegimeMove::kConcede;
    case Variant::kSevere:
      if (good) {
        return c <= strategy.c_tilde_g ? RegimeMove::kConceal
                                       : RegimeMove::kReveal;
      }
      return c <= strategy.c_tilde_b ? RegimeMove::kConceal
                                     : RegimeMove::kConcede;
    case Variant::kNoConcession:
      return c <= strategy.c_tilde ? RegimeMove::kConceal
                                   : RegimeMove::kReveal;
  }
  return RegimeMove::kNone;
}

bool PublicAction(Observation observation, double rho, const Belief& mu_r,
                  const Belief& mu_nn, const ModelParams& params) {
  switch (observation) {
    case Observation::kConcession:
      return false;
    case Observation::kRevealed:
      return rho <= ProtestCutoff(mu_r, params);
    case Observation::kNoNews:
      return rho <= ProtestCutoff(mu_nn, params);
  }
  return false;
}

EpisodeRecord PlayEpisode(const ModelParams& params, const EquilibriumPlay& play,
                          ActivistType theta, double c, double rho,
                          double u_mix) {
  EpisodeRecord e;
  e.theta = theta;
  e.rho = rho;
  if (theta == ActivistType::kNone) {
    e.action = RegimeMove::kNone;
    e.observation = Observation::kNoNews;
  } else {
    e.c = c;
    e.action = RegimeAction(theta, c, play.strategy, u_mix);
    switch (e.action) {
      case RegimeMove::kReveal:
        e.observation = Observation::kRevealed;
        break;
      case RegimeMove::kConcede:
        e.observation = Observation::kConcession;
        break;
      default:
        e.observation = Observation::kNoNews;
        break;
    }
  }
  e.protested = PublicAction(e.observation, rho, play.mu_r, play.mu_nn, params);
  e.success = e.protested && theta != ActivistType::kNone &&
              e.action != RegimeMove::kConcede;
  return e;
}

EpisodeRecord DrawEpisode(const ModelParams& params,
                          const EquilibriumPlay& play, uint64_t seed,
                          uint64_t index) {
  const ActivistType theta =
      DrawType(params, CounterUniform(seed, index, kThetaSlot));
  const double c =
      params.concealment_cost.Sample(CounterUniform(seed, index, kCostSlot));
  const double rho =
      params.protest_cost.Sample(CounterUniform(seed, index, kRhoSlot));
  return PlayEpisode(params, play, theta, c, rho,
                     CounterUniform(seed, index, kMixSlot));
}

int SimStats::CellIndex(ActivistType t, RegimeMove a, Observation o,
                        bool protested) {
  return ((static_cast<int>(t) * 4 + static_cast<int>(a)) * 3 +
          static_cast<int>(o)) *
             2 +
         (protested ? 1 : 0);
}

void SimStats::Add(const EpisodeRecord& e) {
  ++n_episodes;
  ++counts[CellIndex(e.theta, e.action, e.observation, e.protested)];
}

void SimStats::Merge(const SimStats& other) {
  n_episodes += other.n_episodes;
  for (int i = 0; i < kCells; ++i) counts[i] += other.counts[i];
}

uint64_t SimStats::Count(std::optional<ActivistType> t,
                         std::optional<RegimeMove> a,
                         std::optional<Observation> o,
                         std::optional<bool> protested) const {
  uint64_t total = 0;
  for (int ti = 0; ti < 3; ++ti) {
    if (t && static_cast<int>(*t) != ti) continue;
    for (int ai = 0; ai < 4; ++ai) {
      if (a && static_cast<int>(*a) != ai) continue;
      for (int oi = 0; oi < 3; ++oi) {
        if (o && static_cast<int>(*o) != oi) continue;
        for (int pi = 0; pi < 2; ++pi) {
          if (protested && (*protested ? 1 : 0) != pi) continue;
          total += counts[CellIndex(static_cast<ActivistType>(ti),
                                    static_cast<RegimeMove>(ai),
                                    static_cast<Observation>(oi), pi == 1)];
        }
      }
    }
  }
  return total;
}

uint64_t SimStats::Organized() const {
  return n_episodes - Count(ActivistType::kNone, {}, {}, {});
}

double SimStats::PHatRevealed() const {
  return Ratio(Count({}, {}, Observation::kRevealed, {}), Organized());
}

double SimStats::PHatR() const {
  return Ratio(Count({}, {}, Observation::kRevealed, true),
               Count({}, {}, Observation::kRevealed, {}));
}

double SimStats::PHatNN() const {
  return Ratio(Count({}, {}, Observation::kNoNews, true),
               Count({}, {}, Observation::kNoNews, {}));
}

double SimStats::QHat() const {
  return Ratio(Count(ActivistType::kGood, {}, {}, {}), Organized());
}

double SimStats::QHatPrime() const {
  return Ratio(Count(ActivistType::kGood, {}, Observation::kRevealed, {}),
               Count({}, {}, Observation::kRevealed, {}));
}

double SimStats::SeRevealed() const {
  return BinomialSe(PHatRevealed(), Organized());
}

double SimStats::SeR() const {
  return BinomialSe(PHatR(), Count({}, {}, Observation::kRevealed, {}));
}

double SimStats::SeNN() const {
  return BinomialSe(PHatNN(), Count({}, {}, Observation::kNoNews, {}));
}

double SimStats::SeQ() const { return BinomialSe(QHat(), Organized()); }

double SimStats::SeQPrime() const {
  return BinomialSe(QHatPrime(), Count({}, {}, Observation::kRevealed, {}));
}

SimStats SimulateEpisodeRangeSerial(const ModelParams& params,
                                    const EquilibriumPlay& play, uint64_t seed,
                                    uint64_t begin, uint64_t end) {
  SimStats stats;
  for (uint64_t i = begin; i < end; ++i) {
    stats.Add(DrawEpisode(params, play, seed, i));
  }
  return stats;
}

SimStats SimulateEpisodeRangeParallel(const ModelParams& params,
                                      const EquilibriumPlay& play,
                                      uint64_t seed, uint64_t begin,
                                      uint64_t end) {
  SimStats total;
  const int64_t first = static_cast<int64_t>(begin);
  const int64_t last = static_cast<int64_t>(end);
#pragma omp parallel
  {
    SimStats local;
#pragma omp for schedule(static) nowait
    for (int64_t i = first; i < last; ++i) {
      local.Add(DrawEpisode(params, play, seed, static_cast<uint64_t>(i)));
    }
#pragma omp critical(repression_sim_merge)
    total.Merge(local);
  }
  return total;
}

SimStats RunSimulation(const ModelParams& params, const EquilibriumPlay& play,
                       uint64_t n, uint64_t seed, bool parallel) {
  return parallel ? SimulateEpisodeRangeParallel(params, play, seed, 0, n)
                  : SimulateEpisodeRangeSerial(params, play, seed, 0, n);
}

void WriteEpisodesCsv(std::ostream& out, const ModelParams& params,
                      const EquilibriumPlay& play, uint64_t n, uint64_t seed) {
  out << "theta,c,rho,action,observation,protested,success\n";
  const auto old_precision = out.precision(12);
  for (uint64_t i = 0; i < n; ++i) {
    const EpisodeRecord e = DrawEpisode(params, play, seed, i);
    out << TypeName(e.theta) << ',';
    if (e.c) out << *e.c;
    out << ',' << e.rho << ',' << MoveName(e.action) << ','
        << ObservationName(e.observation) << ',' << (e.protested ? 1 : 0)
        << ',' << (e.success ? 1 : 0) << '\n';
  }
  out.precision(old_precision);
}

namespace {

// Cell shares among organized episodes: (G&R, G&notR, B&R, B&notR).
using Shares = std::array<double, 4>;

double TotalFromShares(const Shares& s) {
  const double q = s[0] + s[1];
  const double p = s[0] + s[2];
  const double q_prime = s[0] / p;
  return 1.0 - (q - q_prime) / (1.0 - q) * p;
}

double ConcealedFromShares(const Shares& s) {
  const double q = s[0] + s[1];
  const double p = s[0] + s[2];
  const double q_prime = s[0] / p;
  return 1.0 - (1.0 - q_prime) / (1.0 - q) * p;
}

// Delta method under the multinomial covariance (diag(s) - s s^T) / n.
double DeltaMethodSe(const std::function<double(const Shares&)>& f,
                     const Shares& s, double n) {
  constexpr double kStep = 1e-6;
  Shares grad{};
  for (int k = 0; k < 4; ++k) {
    Shares up = s, down = s;
    up[k] += kStep;
    down[k] -= kStep;
    grad[k] = (f(up) - f(down)) / (2.0 * kStep);
  }
  double mean = 0.0;
  for (int k = 0; k < 4; ++k) mean += grad[k] * s[k];
  double var = 0.0;
  for (int k = 0; k < 4; ++k) var += s[k] * (grad[k] - mean) * (grad[k] - mean);
  return std::sqrt(var / n);
}

}  // namespace

EstimationReport EstimateFromSim(const SimStats& stats) {
  const uint64_t revealed = stats.Count({}, {}, Observation::kRevealed, {});
  if (revealed == 0) {
    throw UndefinedEstimator(
        "no revealed-repression episodes; estimators are undefined");
  }
  EstimationReport report =
      EstimateFromRaw(stats.QHat(), stats.QHatPrime(), stats.PHatRevealed(),
                      stats.PHatR(), stats.PHatNN());

  const double n = static_cast<double>(stats.Organized());
  const auto g = ActivistType::kGood;
  const auto b = ActivistType::kBad;
  const auto r = Observation::kRevealed;
  const double gr = static_cast<double>(stats.Count(g, {}, r, {}));
  const double br = static_cast<double>(stats.Count(b, {}, r, {}));
  const double gg = static_cast<double>(stats.Count(g, {}, {}, {}));
  const double bb = static_cast<double>(stats.Count(b, {}, {}, {}));
  const Shares shares{gr / n, (gg - gr) / n, br / n, (bb - br) / n};
  report.se_total_hat = DeltaMethodSe(TotalFromShares, shares, n);
  report.se_h_hat = DeltaMethodSe(ConcealedFromShares, shares, n);
  // Protest frequencies after R and after NN come from disjoint episodes.
  report.se_d_lower_hat = std::hypot(stats.SeR(), stats.SeNN());
  return report;
}

EstimationReport EstimateFromRaw(double q_hat, double q_hat_prime,
                                 double p_hat, double p_hat_r,
                                 double p_hat_nn) {
  if (!(q_hat > 0.0 && q_hat < 1.0)) {
    throw UndefinedEstimator("q_hat must lie in (0,1)");
  }
  EstimationReport report;
  report.total_hat = 1.0 - (q_hat - q_hat_prime) / (1.0 - q_hat) * p_hat;
  report.h_hat = EstimateConcealment(q_hat, q_hat_prime, p_hat).value;
  report.d_lower_hat = p_hat_nn - p_hat_r;
  report.se_total_hat = kNaN;
  report.se_h_hat = kNaN;
  report.se_d_lower_hat = kNaN;
  if (!(q_hat_prime < q_hat)) {
    report.inconsistent_sample = true;
    report.warnings.push_back(
        "q_hat' >= q_hat: sample contradicts the mild-conflict equilibrium");
  }
  if (!(report.h_hat >= 0.0 && report.h_hat <= 1.0)) {
    report.inconsistent_sample = true;
    report.warnings.push_back("H_hat outside [0,1]: inconsistent inputs");
  }
  return report;
}

}  // namespace repression

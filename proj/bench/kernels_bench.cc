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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "repression/simulate.h"
#include "repression/solver_severe.h"

namespace repression {
namespace {

template <bool kParallel>
void BM_SimulateEpisodes(benchmark::State& state) {
  const ModelParams p = MildExampleParams();
  const EquilibriumPlay play = PlayFor(SolveMild(p));
  const auto n = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    const SimStats s =
        kParallel ? SimulateEpisodeRangeParallel(p, play, 1, 0, n)
                  : SimulateEpisodeRangeSerial(p, play, 1, 0, n);
    benchmark::DoNotOptimize(s.counts.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool kParallel>
void BM_ScanResidual(benchmark::State& state) {
  const ModelParams p = SevereExampleParams();
  const int n = static_cast<int>(state.range(0));
  const ScanBox box = SevereScanBox(p, n);
  std::vector<double> out(static_cast<size_t>(n) * n);
  for (auto _ : state) {
    if (kParallel) {
      ScanFixedPointResidualParallel(p, box, out);
    } else {
      ScanFixedPointResidualSerial(p, box, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

BENCHMARK(BM_SimulateEpisodes<false>)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_SimulateEpisodes<true>)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_ScanResidual<false>)->Arg(200)->Arg(400);
BENCHMARK(BM_ScanResidual<true>)->Arg(200)->Arg(400);

}  // namespace
}  // namespace repression

BENCHMARK_MAIN();

// Copyright 2026 The broadcastlab Authors
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
#include <benchmark/benchmark.h>

#include "broadcastlab/broadcast.hpp"
#include "broadcastlab/cloner.hpp"

namespace {

using namespace broadcastlab;

void BM_CloneLocal(benchmark::State& state) {
  const DensityMatrix rho = make_family(WernerParams{0.3, 0.8});
  for (auto _ : state) {
    benchmark::DoNotOptimize(clone_joint(rho, CloningMode::kLocal, 0.12, false));
  }
}
BENCHMARK(BM_CloneLocal);

void BM_CloneNonlocal(benchmark::State& state) {
  const DensityMatrix rho = make_family(WernerParams{0.3, 0.8});
  for (auto _ : state) {
    benchmark::DoNotOptimize(clone_joint(rho, CloningMode::kNonlocal, 0.1, false));
  }
}
BENCHMARK(BM_CloneNonlocal);

void BM_BuildNonlocalChannel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_nonlocal_channel(MachineGram::for_mode(CloningMode::kNonlocal, 0.1)));
  }
}
BENCHMARK(BM_BuildNonlocalChannel);

void BM_BroadcastPredicate(benchmark::State& state) {
  const CloneOutputs out =
      clone_joint(make_family(NmeParams{0.4}), CloningMode::kLocal, 1.0 / 6, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(broadcast_predicate(out));
  }
}
BENCHMARK(BM_BroadcastPredicate);

}  // namespace

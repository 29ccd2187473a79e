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

#include <array>

#include "broadcastlab/broadcast.hpp"

namespace {

using namespace broadcastlab;

void BM_ScanNmeRange(benchmark::State& state) {
  const ParamCurve curve = [](double a) -> FamilyParams { return NmeParams{a}; };
  const ClonerConfig cloner{CloningMode::kLocal, StateIndependent{}};
  ScanOptions opts;
  opts.grid_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_range_1d(curve, cloner, {0.0, 1.0}, opts));
  }
}
BENCHMARK(BM_ScanNmeRange)->Arg(201)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_WernerRegion(benchmark::State& state) {
  const std::array<NamedCloner, 2> cloners{{
      {"silc", {CloningMode::kLocal, StateIndependent{}}},
      {"dsdnlc", {CloningMode::kNonlocal, DynamicStateDependent{}}},
  }};
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::array<std::size_t, 2> res{n, n};
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_region(RegionFamily::kWerner, cloners, res, 1));
  }
}
BENCHMARK(BM_WernerRegion)->Arg(21)->Arg(51)->Unit(benchmark::kMillisecond);

}  // namespace

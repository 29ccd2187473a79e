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

#include <random>

#include "broadcastlab/linalg.hpp"

namespace {

using broadcastlab::Complex;
using broadcastlab::ComplexMatrix;

ComplexMatrix random_hermitian(std::size_t qubits, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix m(std::vector<std::size_t>(qubits, 2));
  for (std::size_t r = 0; r < m.dim(); ++r) {
    m(r, r) = g(rng);
    for (std::size_t c = r + 1; c < m.dim(); ++c) {
      m(r, c) = Complex(g(rng), g(rng));
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

void BM_HermitianEigenvalues(benchmark::State& state) {
  const ComplexMatrix m = random_hermitian(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(broadcastlab::hermitian_eigenvalues(m));
  }
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(1)->Arg(2)->Arg(4);

void BM_PartialTrace(benchmark::State& state) {
  const ComplexMatrix m = random_hermitian(4, 11);
  const std::vector<std::size_t> keep{0, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(broadcastlab::partial_trace(m, keep));
  }
}
BENCHMARK(BM_PartialTrace);

void BM_Determinant4(benchmark::State& state) {
  const ComplexMatrix m = random_hermitian(2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(broadcastlab::determinant(m));
  }
}
BENCHMARK(BM_Determinant4);

}  // namespace

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
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "broadcastlab/linalg.hpp"
#include "broadcastlab/tolerances.hpp"
#include "oracles.hpp"

namespace broadcastlab {
namespace {

ComplexMatrix phi_plus() {
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> ket{h, 0.0, 0.0, h};
  return ComplexMatrix::projector(ket, {2, 2});
}

TEST(Tensor, IdentityTimesIdentity) {
  const auto i2 = ComplexMatrix::identity({2});
  EXPECT_EQ(tensor(i2, i2).max_abs_diff(ComplexMatrix::identity({2, 2})), 0.0);
  EXPECT_EQ(tensor(i2, i2).subsystem_dims(), (std::vector<std::size_t>{2, 2}));
}

TEST(Tensor, BasisProjectors) {
  const std::array<double, 2> a{1.0, 0.0};
  const std::array<double, 2> b{0.0, 1.0};
  const std::array<double, 4> expect{0.0, 1.0, 0.0, 0.0};
  const auto t = tensor(ComplexMatrix::diagonal(a), ComplexMatrix::diagonal(b));
  EXPECT_EQ(t.max_abs_diff(ComplexMatrix::diagonal(expect)), 0.0);
}

TEST(Tensor, HandMultipliedEntry) {
  const auto r = ComplexMatrix::from_rows({{0.1, 0.3}, {0.3, 0.9}});
  EXPECT_NEAR(tensor(r, r)(0, 3).real(), 0.09, 1e-15);
}

TEST(Tensor, MatchesIndexOracle) {
  std::mt19937_64 rng(1);
  const auto a = testing::random_density(1, rng);
  const auto b = testing::random_density(2, rng);
  EXPECT_LT(tensor(a, b).max_abs_diff(testing::kron_oracle(a, b)), 1e-15);
}

TEST(PartialTrace, ProductFactorizes) {
  std::mt19937_64 rng(2);
  const auto r = testing::random_density(1, rng);
  const auto s = testing::random_density(1, rng);
  EXPECT_LT(partial_trace(tensor(r, s), {0}).max_abs_diff(r), 1e-14);
  EXPECT_LT(partial_trace(tensor(r, s), {1}).max_abs_diff(s), 1e-14);
}

TEST(PartialTrace, NmeReducedIsDiagonal) {
  const double a2 = 0.3;
  const std::vector<Complex> ket{std::sqrt(a2), 0.0, 0.0, std::sqrt(1 - a2)};
  const auto reduced = partial_trace(ComplexMatrix::projector(ket, {2, 2}), {0});
  const std::array<double, 2> expect{a2, 1 - a2};
  EXPECT_LT(reduced.max_abs_diff(ComplexMatrix::diagonal(expect)), 1e-15);
}

TEST(PartialTrace, KeepsAscendingOrderAndTrace) {
  std::mt19937_64 rng(3);
  const auto rho = testing::random_density(4, rng);
  const auto kept = partial_trace(rho, {3, 1});
  EXPECT_EQ(kept.subsystem_dims(), (std::vector<std::size_t>{2, 2}));
  EXPECT_NEAR(kept.trace().real(), 1.0, 1e-12);
  // Tracing qubits 0 and 2 one at a time by the oracle lands on qubits 1, 3.
  const auto oracle =
      testing::trace_out_qubit_oracle(testing::trace_out_qubit_oracle(rho, 2), 0);
  EXPECT_LT(kept.max_abs_diff(oracle), 1e-14);
}

TEST(PartialTrace, RejectsBadIndexSets) {
  const auto rho = ComplexMatrix::identity({2, 2});
  EXPECT_THROW(partial_trace(rho, {}), DimensionError);
  EXPECT_THROW(partial_trace(rho, {2}), DimensionError);
  EXPECT_THROW(partial_trace(rho, {0, 0}), DimensionError);
}

TEST(PartialTranspose, ProductStaysPsd) {
  std::mt19937_64 rng(4);
  const auto r = testing::random_density(1, rng);
  const auto s = testing::random_density(1, rng);
  const auto pt = partial_transpose(tensor(r, s), 1);
  EXPECT_LT(pt.max_abs_diff(tensor(r, s.transpose())), 1e-15);
  EXPECT_GE(hermitian_eigenvalues(pt).front(), -1e-12);
}

TEST(PartialTranspose, Involution) {
  std::mt19937_64 rng(5);
  const auto rho = testing::random_density(2, rng);
  EXPECT_LT(partial_transpose(partial_transpose(rho, 0), 0).max_abs_diff(rho), 1e-15);
  EXPECT_LT(partial_transpose(rho, 1).max_abs_diff(
                testing::transpose_qubit_oracle(rho, 1)),
            1e-15);
}

TEST(PartialTranspose, BellStateEigenvalues) {
  const auto ev = hermitian_eigenvalues(partial_transpose(phi_plus(), 1));
  ASSERT_EQ(ev.size(), 4u);
  EXPECT_NEAR(ev[0], -0.5, 1e-12);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(ev[k], 0.5, 1e-12);
}

TEST(PartialTranspose, RejectsBadIndex) {
  EXPECT_THROW(partial_transpose(ComplexMatrix::identity({2, 2}), 2), DimensionError);
}

TEST(PermuteSubsystems, MovesFactors) {
  std::mt19937_64 rng(6);
  const auto a = testing::random_density(1, rng);
  const auto b = testing::random_density(1, rng);
  const auto c = testing::random_density(1, rng);
  const std::array<std::size_t, 3> order{2, 0, 1};
  EXPECT_LT(permute_subsystems(tensor(tensor(a, b), c), order)
                .max_abs_diff(tensor(tensor(c, a), b)),
            1e-15);
}

TEST(HermitianEigenvalues, Identity) {
  const auto ev = hermitian_eigenvalues(ComplexMatrix::identity({2}));
  EXPECT_NEAR(ev[0], 1.0, 1e-14);
  EXPECT_NEAR(ev[1], 1.0, 1e-14);
}

TEST(HermitianEigenvalues, Diagonal) {
  const std::array<double, 2> d{0.7, 0.3};
  const auto ev = hermitian_eigenvalues(ComplexMatrix::diagonal(d));
  EXPECT_NEAR(ev[0], 0.3, 1e-14);
  EXPECT_NEAR(ev[1], 0.7, 1e-14);
}

TEST(HermitianEigenvalues, MatchesEigenOn16x16) {
  std::mt19937_64 rng(7);
  const auto rho = testing::random_density(4, rng);
  const auto ev = hermitian_eigenvalues(rho);
  const auto oracle = testing::eigen_oracle(rho);
  ASSERT_EQ(ev.size(), oracle.size());
  for (std::size_t k = 0; k < ev.size(); ++k) EXPECT_NEAR(ev[k], oracle[k], 1e-11);
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  const auto m = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  EXPECT_THROW(hermitian_eigenvalues(m), DimensionError);
}

TEST(Determinant, MatchesEigenLu) {
  std::mt19937_64 rng(8);
  const auto m = testing::random_density(2, rng);
  EXPECT_LT(std::abs(determinant(m) - testing::det_oracle(m)), 1e-14);
  EXPECT_EQ(leading_block(m, 2).dim(), 2u);
  EXPECT_EQ(leading_block(m, 2)(1, 0), m(1, 0));
}

TEST(DensityMatrix, AcceptsStatesRejectsOthers) {
  EXPECT_NO_THROW(DensityMatrix::from(phi_plus()));
  const std::array<double, 2> neg{1.5, -0.5};
  EXPECT_THROW(DensityMatrix::from(ComplexMatrix::diagonal(neg)), UnphysicalStateError);
  const std::array<double, 2> heavy{0.7, 0.7};
  EXPECT_THROW(DensityMatrix::from(ComplexMatrix::diagonal(heavy)), UnphysicalStateError);
}

TEST(Tolerances, DefaultPsdThreshold) {
  if (std::getenv("BROADCASTLAB_EPS") == nullptr) {
    EXPECT_EQ(tol::psd(), 1e-10);
  }
}

}  // namespace
}  // namespace broadcastlab

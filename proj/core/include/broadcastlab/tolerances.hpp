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
#pragma once

#include <stdexcept>
#include <string>

namespace broadcastlab {

namespace tol {

/// Entrywise |rho - rho^dagger| bound for a DensityMatrix.
inline constexpr double kHermitian = 1e-12;
/// |Tr rho - 1| bound for a DensityMatrix.
inline constexpr double kTrace = 1e-12;
/// Input Hermiticity bound accepted by the eigensolver.
inline constexpr double kEigenInput = 1e-10;
/// Jacobi stops once the off-diagonal Frobenius norm drops below this.
inline constexpr double kJacobiOffDiagonal = 1e-13;
/// Gram-table diagonal may dip this far below zero before it is rejected.
inline constexpr double kGramDiagonal = 1e-12;
/// Default for psd(); overridden by BROADCASTLAB_EPS.
inline constexpr double kDefaultPsd = 1e-10;

/// An eigenvalue counts as negative only when it is strictly below -psd().
/// Reads BROADCASTLAB_EPS once per process.
double psd();

}  // namespace tol

/// Thrown when a matrix violates the density-matrix invariants or a
/// parameter set lies outside its physical region.
class UnphysicalStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown for shape problems: wrong dimensions, bad subsystem indices.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a scalar parameter (alpha^2, p, lambda, ...) is out of range
/// or does not fit the requested family or mode.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace broadcastlab

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
/**
 * @file states.hpp
 * Input state families and the Bloch/correlation-matrix representation of
 * two-qubit states.
 *
 * Amplitudes are real and nonnegative: alpha = sqrt(alpha_sq),
 * beta = sqrt(1 - alpha_sq). Pauli order is (X, Y, Z) with Y = [[0,-i],[i,0]].
 */
#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "broadcastlab/linalg.hpp"

namespace broadcastlab {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// rho = (1/4)[I + sum x_i s_i (x) I + sum y_i I (x) s_i + sum t_ij s_i (x) s_j]
struct BlochTwoQubit {
  Vec3 x{};
  Vec3 y{};
  Mat3 t{};

  static Mat3 diag(double a, double b, double c);

  /// Largest absolute componentwise difference.
  double max_abs_diff(const BlochTwoQubit& other) const;
};

/// Single-qubit pure state alpha|0> + beta|1>.
struct PureQubitParams {
  double alpha_sq = 0.0;
};

/// Two-qubit pure state alpha|00> + beta|11>.
struct NmeParams {
  double alpha_sq = 0.0;
};

/// p |psi_nme><psi_nme| + (1 - p) I/4.
struct WernerParams {
  double alpha_sq = 0.0;
  double p = 0.0;
};

/// Bell-diagonal state with correlation matrix diag(c1, c2, c3).
struct BdsParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  /// The four eigenvalues (1-c1-c2-c3)/4, (1-c1+c2+c3)/4, (1+c1-c2+c3)/4,
  /// (1+c1+c2-c3)/4.
  std::array<double, 4> weights() const;
  /// All weights >= -tol::psd() and every |c_i| <= 1.
  bool physical() const;
};

using FamilyParams =
    std::variant<PureQubitParams, NmeParams, WernerParams, BdsParams>;

/// Short family name: "pure", "nme", "werner" or "bds".
std::string family_name(const FamilyParams& params);

/// Checks the declared ranges (alpha_sq, p in [0,1]; |c_i| <= 1).
/// @throws ParameterError when a value is out of range or not finite.
void validate(const FamilyParams& params);

/// pauli(0) = I, pauli(1..3) = X, Y, Z.
const ComplexMatrix& pauli(int index);

ComplexMatrix bloch_to_density(const BlochTwoQubit& b);

/// @throws DimensionError unless rho is 4x4 with factors {2, 2}.
BlochTwoQubit density_to_bloch(const ComplexMatrix& rho);

/// Closed Bloch forms of the two-qubit families.
BlochTwoQubit closed_bloch(const NmeParams& params);
BlochTwoQubit closed_bloch(const WernerParams& params);
BlochTwoQubit closed_bloch(const BdsParams& params);

/// State vector of a pure family member (pure qubit or NME).
std::vector<Complex> family_ket(const PureQubitParams& params);
std::vector<Complex> family_ket(const NmeParams& params);

/// Density matrix of a family member: 2x2 for the pure qubit, 4x4 with
/// factors {2, 2} otherwise.
/// @throws ParameterError for out-of-range parameters.
/// @throws UnphysicalStateError for Bell-diagonal points outside the
///         tetrahedron.
DensityMatrix make_family(const FamilyParams& params);

struct PhysicalityReport {
  bool physical = false;
  bool hermitian = false;
  double min_eigenvalue = 0.0;
  double trace_deviation = 0.0;
};

/// Never throws for square input; min_eigenvalue is only meaningful when
/// hermitian is true.
PhysicalityReport is_physical(const ComplexMatrix& rho);

}  // namespace broadcastlab

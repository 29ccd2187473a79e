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
 * @file cloner.hpp
 * Buzek-Hillery cloning channels built from machine-state overlap rules.
 *
 * An M-dimensional machine sends basis state |i> to
 *   |ii>|X_ii> + sum_{j != i} (|ij> + |ji>)|Y_ij>
 * and the channel is obtained by tracing out the machine states using only
 * their overlaps:
 *   <X_ii|X_ii> = 1 - 2(M-1) lambda,  <Y_ij|Y_ij> = lambda,
 *   <X_ii|Y_jk> = mu/2 for i != j,    mu = 1 - M lambda,
 * and zero for every other pair.
 *
 * Local mode clones each qubit with an M = 2 machine: qubit 1 -> (1, 3),
 * qubit 2 -> (2, 4). Non-local mode clones the pair with an M = 4 machine:
 * (1, 2) -> (1, 2), (3, 4). Joint outputs always use factor order 1, 2, 3, 4.
 */
#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "broadcastlab/linalg.hpp"
#include "broadcastlab/states.hpp"

namespace broadcastlab {

enum class CloningMode { kLocal, kNonlocal };

std::string_view to_string(CloningMode mode);

/// Machine dimension: 2 (local) or 4 (non-local).
int machine_dim(CloningMode mode);

/// Upper end of the lambda domain, 1/(2(M-1)), where <X_ii|X_ii> hits zero.
double lambda_max(int dim);

/// State-independent machine parameter 1/(2(M+1)).
double si_lambda(int dim);

/// Amplitudes of the (c, d) form of the state-independent machine.
struct SiAmplitudes {
  double c_sq = 0.0;
  double d_sq = 0.0;
};
SiAmplitudes si_amplitudes(int dim);

struct MachineState {
  enum class Kind { kX, kY };
  Kind kind = Kind::kX;
  int i = 0;
  int j = 0;  ///< equals i for X states

  friend bool operator==(const MachineState&, const MachineState&) = default;
};

/// The overlap table of the machine states for dimension M.
class MachineGram {
 public:
  /// @throws ParameterError unless dim is 2 or 4 and
  ///         lambda is in [0, lambda_max(dim)] (with kGramDiagonal slack).
  MachineGram(int dim, double lambda);

  static MachineGram for_mode(CloningMode mode, double lambda);

  /// Same overlap rules but with <X_ii|X_ii> replaced by `x_norm`. No range
  /// check on x_norm; used to audit alternative normalizations.
  static MachineGram with_x_norm(int dim, double lambda, double x_norm);

  int dim() const noexcept { return dim_; }
  double lambda() const noexcept { return lambda_; }
  double mu() const noexcept { return 1.0 - dim_ * lambda_; }
  double x_norm() const noexcept { return x_norm_; }

  /// X_00..X_(M-1)(M-1) followed by Y_ij in row-major (i, j != i) order.
  const std::vector<MachineState>& states() const noexcept { return states_; }

  /// <a|b>.
  double overlap(const MachineState& a, const MachineState& b) const;

  /// The full table indexed like states().
  ComplexMatrix matrix() const;

 private:
  MachineGram(int dim, double lambda, double x_norm, bool);

  int dim_ = 2;
  double lambda_ = 0.0;
  double x_norm_ = 1.0;
  std::vector<MachineState> states_;
};

/// Linear map from M x M operators to M^2 x M^2 operators stored as the
/// images of the basis operators |i><j|.
class CloningChannel {
 public:
  static CloningChannel build(const MachineGram& gram);

  const MachineGram& gram() const noexcept { return gram_; }
  int input_dim() const noexcept { return gram_.dim(); }

  /// Image of |i><j|; factors are the input's factors repeated for the two
  /// copies.
  const ComplexMatrix& basis_image(int i, int j) const;

  /// @throws DimensionError if rho is not M x M.
  ComplexMatrix apply(const ComplexMatrix& rho) const;

 private:
  CloningChannel(MachineGram gram, std::vector<ComplexMatrix> images)
      : gram_(std::move(gram)), images_(std::move(images)) {}

  MachineGram gram_;
  std::vector<ComplexMatrix> images_;
};

/// @throws ParameterError unless gram.dim() == 2.
CloningChannel build_local_channel(const MachineGram& gram);
/// @throws ParameterError unless gram.dim() == 4.
CloningChannel build_nonlocal_channel(const MachineGram& gram);

enum class PairLabel { k12, k34, k13, k24, k14, k23 };

std::string_view to_string(PairLabel label);

/// Zero-based qubit indices of the pair within the four-qubit output.
std::array<std::size_t, 2> pair_qubits(PairLabel label);

/// Pairs produced in each mode: the same-party pairs 13, 24 first, then the
/// cross pairs (14, 23 local; 12, 34 non-local).
std::array<PairLabel, 4> pairs_for(CloningMode mode);

struct CloneOutputs {
  CloningMode mode = CloningMode::kLocal;
  double lambda = 0.0;
  std::map<PairLabel, ComplexMatrix> pairs;
  /// Smallest eigenvalue of each pair state. The channel is not completely
  /// positive for every lambda, so this can dip below zero.
  std::map<PairLabel, double> min_eigenvalues;
  /// Full 16x16 output in qubit order 1, 2, 3, 4, when requested.
  std::optional<ComplexMatrix> joint;

  /// @throws std::out_of_range if the pair was not produced.
  const ComplexMatrix& pair(PairLabel label) const;

  /// Every pair is PSD within tol::psd().
  bool all_pairs_physical() const;
};

/// @throws DimensionError unless rho12 is a two-qubit state.
/// @throws ParameterError for lambda outside [0, 1/2].
CloneOutputs clone_joint_local(const DensityMatrix& rho12, double lambda,
                               bool keep_joint = true);
/// @throws ParameterError for lambda outside [0, 1/6].
CloneOutputs clone_joint_nonlocal(const DensityMatrix& rho12, double lambda,
                                  bool keep_joint = true);
CloneOutputs clone_joint(const DensityMatrix& rho12, CloningMode mode,
                         double lambda, bool keep_joint = true);

/// Same as the overloads above with a prebuilt channel (reused in scans).
CloneOutputs clone_joint(const DensityMatrix& rho12, const CloningChannel& channel,
                         bool keep_joint = true);

struct PureCloneOutputs {
  ComplexMatrix joint;    ///< M^2 x M^2, copy a then copy b
  ComplexMatrix reduced;  ///< M x M, either copy
};

/// Closed sums for a pure input sum_i a_i |i> with real amplitudes. The joint
/// output expands the overlap rules term by term; the reduced output is
/// (1-2(M-1)l) sum a_i^2 |i><i| + (mu/2) sum_{i != j} a_i a_j (|i><j| + |j><i|)
///   + l sum_i a_i^2 sum_{j != i} (|i><i| + |j><j|).
/// @throws ParameterError if the amplitudes are not normalized within 1e-12
///         or M is not 2 or 4.
PureCloneOutputs bh_pure_outputs(std::span<const double> amplitudes,
                                 double lambda);

/// <psi|rho|psi>.
/// @throws DimensionError on a size mismatch.
double fidelity(const ComplexMatrix& rho, std::span<const Complex> psi);

/// Closed Bloch forms of the local outputs for input {x, y, T}:
///   13 = {mu x, mu x, diag(2l, 2l, 1-4l)},  24 = {mu y, mu y, same},
///   14 = {mu x, mu y, mu^2 T},              23 = {mu y, mu x, mu^2 T^t}.
std::map<PairLabel, BlochTwoQubit> closed_local_outputs(const BlochTwoQubit& in,
                                                        double lambda);

/// Closed Bloch forms of the non-local outputs:
///   12 = 34 = {mu x, mu y, mu T},
///   13 = {mu x, mu x, diag(2l, 2l, 1-8l)},  24 = {mu y, mu y, same}.
std::map<PairLabel, BlochTwoQubit> closed_nonlocal_outputs(
    const BlochTwoQubit& in, double lambda);

struct StateIndependent {};
struct StaticStateDependent {
  double lambda = 0.0;
};
/// Lambda from the optimal-parameter rule evaluated at alpha_sq = k, keeping
/// the input's remaining parameters (p for Werner inputs). Only defined for
/// the NME and Werner families.
struct PreparedStateDependent {
  double k = 0.5;
};
/// Lambda re-evaluated from the optimal-parameter rule for every input.
struct DynamicStateDependent {};

using ClonerFlavor = std::variant<StateIndependent, StaticStateDependent,
                                  PreparedStateDependent, DynamicStateDependent>;

struct ClonerConfig {
  CloningMode mode = CloningMode::kLocal;
  ClonerFlavor flavor = StateIndependent{};
};

}  // namespace broadcastlab

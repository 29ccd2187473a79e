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
 * @file distortion.hpp
 * Hilbert-Schmidt distortions, optimal machine parameters and the numeric
 * minimizer that cross-checks them.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "broadcastlab/cloner.hpp"
#include "broadcastlab/linalg.hpp"
#include "broadcastlab/states.hpp"

namespace broadcastlab {

/// Tr[(a - b)^2] = sum |a_ij - b_ij|^2 for Hermitian a, b.
/// @throws DimensionError on a size mismatch.
double hs_dist_sq(const ComplexMatrix& a, const ComplexMatrix& b);

/// D_a = M(M-1) lambda^2.
double closed_da(int dim, double lambda);

/// D_a of a single-qubit pure input before mu is tied to lambda:
/// 2(1-2a^2)^2 l^2 - 2(a^2-1) a^2 (mu-1)^2.
double closed_da_pure(double alpha_sq, double lambda, double mu);

/// D_ab of a single-qubit pure input with mu = 1 - 2 lambda:
/// 2a^2(1-a^2) - 12a^2(1-a^2) l + 8 l^2.
double closed_dab_pure(double alpha_sq, double lambda);

/// The same polynomial with constant term 2(1-2a^2)a^2. Kept for audits; it
/// disagrees with direct matrix evaluation.
double closed_dab_pure_literal(double alpha_sq, double lambda);

enum class RuleFamily {
  kPureQubit,
  kNmeLocal,
  kNmeNonlocal,
  kWernerLocal,
  kWernerNonlocal,
  kBdsLocal,
  kBdsNonlocal,
};

std::string_view to_string(RuleFamily rule);

/// kLiteral switches the local Werner rule to (q-1)/(2(3+q)),
/// q = p^2 (2a^2-1)^2. Every other rule is the same under both variants.
enum class FormulaVariant { kCorrected, kLiteral };

/// Mode whose lambda domain the rule lives in (pure qubit counts as local).
CloningMode rule_mode(RuleFamily rule);

/// Rule for a family in a mode; nullopt for the pure qubit in non-local mode.
std::optional<RuleFamily> rule_for(const FamilyParams& params, CloningMode mode);

/// Closed-form optimal lambda.
/// @throws ParameterError if the params do not match the rule's family or
///         are out of range.
double optimal_lambda(RuleFamily rule, const FamilyParams& params,
                      FormulaVariant variant = FormulaVariant::kCorrected);

struct NumericMinimum {
  double argmin = 0.0;
  double value = 0.0;
  /// True when the minimum sits on an end of the domain.
  bool at_boundary = false;
};

/// Brackets the minimum on a 201-point grid, then golden-section search to
/// a bracket width of 1e-9.
/// @throws ParameterError for an empty or non-finite domain.
NumericMinimum optimal_lambda_numeric(const std::function<double(double)>& curve,
                                      double lo, double hi);

/// The distortion whose stationary point defines the rule, evaluated through
/// the channel: D_ab for the pure qubit, D_13 = ||Lambda(rho_1) - rho_1 (x)
/// rho_1||^2 with rho_1 = Tr_2 rho_12 for local rules, and D_1234 =
/// ||Lambda(rho_12) - rho_12 (x) rho_12||^2 for non-local rules.
std::function<double(double)> distortion_curve(RuleFamily rule,
                                               const FamilyParams& params);

/// Optimizes distortion_curve over [0, lambda_max] of the rule's mode.
NumericMinimum optimal_lambda_numeric(RuleFamily rule, const FamilyParams& params);

/// Lambda actually used by a cloner on a given input.
/// @throws ParameterError for a static lambda outside the mode's domain or a
///         pure-qubit input in non-local mode.
double lambda_for(const ClonerConfig& config, const FamilyParams& params);

struct DistortionReport {
  double d_single = 0.0;
  double d_joint = 0.0;
  double lambda_used = 0.0;
  std::string single_label;  ///< "D_a", "D_1" or "D_12"
  std::string joint_label;   ///< "D_ab", "D_13" or "D_1234"
  FamilyParams params;
};

/// Distortions measured against the ideal references: the input itself for a
/// pure qubit, the reduced input rho_1 for local cloning of a pair, and the
/// pair rho_12 for non-local cloning.
DistortionReport distortion_report(const FamilyParams& params,
                                   const ClonerConfig& config);

}  // namespace broadcastlab

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
 * @file broadcast.hpp
 * PPT separability, the optimal-broadcasting predicate and the range and
 * region scanners built on it.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "broadcastlab/cloner.hpp"
#include "broadcastlab/states.hpp"

namespace broadcastlab {

struct SeparabilityVerdict {
  bool separable = true;
  double min_pt_eigenvalue = 0.0;
  /// det of the partial transpose and of its leading 3x3 and 2x2 blocks.
  double w44 = 0.0;
  double w33 = 0.0;
  double w22 = 0.0;

  /// Determinant form of the test: entangled iff W44 < 0 or W33 < 0, read
  /// together with W22 >= 0.
  bool determinant_rule_entangled() const { return w44 < 0.0 || w33 < 0.0; }
};

/// Partial transpose on the second qubit; entangled iff its smallest
/// eigenvalue is below -tol::psd().
/// @throws DimensionError unless rho is a 4x4 two-qubit matrix.
SeparabilityVerdict ppt_verdict(const ComplexMatrix& rho);

struct BroadcastVerdict {
  bool broadcastable = false;
  std::map<PairLabel, SeparabilityVerdict> pairs;
};

/// Optimal broadcasting: both cross pairs ({14, 23} local, {12, 34}
/// non-local) entangled and both same-party pairs {13, 24} separable.
/// @throws std::out_of_range if a required pair is missing.
BroadcastVerdict broadcast_predicate(const CloneOutputs& outputs);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct BroadcastRange {
  std::vector<Interval> intervals;
  /// Bisection stops once a boundary bracket is narrower than this.
  double boundary_tol = 1e-6;

  bool empty() const noexcept { return intervals.empty(); }
};

enum class PointClass { kOutOfDomain, kNotBroadcastable, kBroadcastable };

/// Classifies one input. Bell-diagonal points outside the tetrahedron are out
/// of domain.
PointClass classify_point(const FamilyParams& params, const ClonerConfig& cloner);

/// Maps the scanned parameter to a family member.
using ParamCurve = std::function<FamilyParams(double)>;

struct ScanOptions {
  std::size_t grid_points = 2001;
  double boundary_tol = 1e-6;
};

/// Classifies a uniform grid over the domain, then bisects every transition
/// into or out of the broadcastable class. Boundaries at the ends of the
/// domain stay at the domain ends.
/// @throws ParameterError for an empty domain or fewer than 2 grid points.
BroadcastRange scan_range_1d(const ParamCurve& curve, const ClonerConfig& cloner,
                             Interval domain, const ScanOptions& options = {});

/// scan_range_1d with the dynamic flavor in the given mode.
BroadcastRange dynamic_range(const ParamCurve& curve, CloningMode mode,
                             Interval domain, const ScanOptions& options = {});

enum class RegionFamily { kWerner, kBds };

struct NamedCloner {
  std::string name;
  ClonerConfig config;
};

struct RegionAxis {
  std::string name;
  std::vector<double> values;
};

struct RegionRecord {
  bool input_physical = false;
  bool input_entangled = false;
  /// One flag per cloner, in the order given to scan_region.
  std::vector<std::uint8_t> broadcastable;
};

struct RegionGrid {
  std::vector<RegionAxis> axes;
  std::vector<std::string> cloner_names;
  /// Row-major over axes (last axis fastest).
  std::vector<RegionRecord> records;
};

/// Werner axes: (alpha_sq, p) over [0, 1]^2. Bell-diagonal axes:
/// (c1, c2, c3) over [-1, 1]^3. Points are classified on `threads` workers
/// (0 = hardware concurrency); results are written by grid index, so the
/// output does not depend on scheduling.
/// @throws ParameterError if the resolution list has the wrong length or an
///         entry below 2.
RegionGrid scan_region(RegionFamily family, std::span<const NamedCloner> cloners,
                       std::span<const std::size_t> resolution,
                       unsigned threads = 0);

}  // namespace broadcastlab

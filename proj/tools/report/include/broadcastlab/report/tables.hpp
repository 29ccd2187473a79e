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
 * @file tables.hpp
 * Regenerates every published table from the core library and checks the
 * result against the golden registry.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "broadcastlab/broadcast.hpp"
#include "broadcastlab/report/golden.hpp"

namespace broadcastlab::report {

using ComputedCell = std::variant<double, BroadcastRange>;

struct TableRow {
  std::string label;
  /// Aligned with TableArtifact::columns; nullopt where nothing is computed.
  std::vector<std::optional<ComputedCell>> cells;
};

struct CellCheck {
  std::size_t row = 0;
  std::string column;
  std::string printed;
  std::string computed;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool ok = false;
  bool gating = true;
  std::string note;  ///< waiver or remark
};

struct TableArtifact {
  TableId id{};
  std::string name;
  std::string title;
  int golden_version = kGoldenVersion;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
  std::vector<CellCheck> checks;

  /// Gating checks that exceeded their tolerance.
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Renders a range as "(lo, hi)" pieces joined by " U ", or "False".
std::string describe(const BroadcastRange& range);

/// Deviation between a computed range and a golden one: 0 when both are empty,
/// the largest endpoint error for two single intervals, +inf otherwise.
double range_deviation(const BroadcastRange& computed, const GoldenRange& golden);

/// Computes every cell of the table and attaches the golden checks.
TableArtifact build_table(TableId id);

}  // namespace broadcastlab::report

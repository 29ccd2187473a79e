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
 * @file golden.hpp
 * Versioned registry of published table values with per-cell tolerances.
 *
 * Every registered cell stores the value exactly as printed. A waivered cell
 * keeps the printed text but is checked against a replacement value; the
 * waiver text says why.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "broadcastlab/broadcast.hpp"

namespace broadcastlab::report {

inline constexpr int kGoldenVersion = 1;

enum class TableId {
  kStaticConstruction = 1,
  kStaticPerformance,
  kDynamicPerformance,
  kCloningComparison,
  kLocalNonmaximally,
  kNonlocalNonmaximally,
  kWernerP065,
  kWernerP080,
  kWernerP095,
  kDsdWerner,
  kBellLocal,
  kBellLambdaNonlocal,
  kBellNonlocal,
  kBellDynamic,
};

struct TableInfo {
  TableId id;
  std::string_view name;   ///< CLI id, e.g. "staticConstruction"
  std::string_view title;  ///< one-line description
};

/// All tables in numeric order 1..14.
std::span<const TableInfo> all_tables();
const TableInfo& table_info(TableId id);

/// Accepts a table name (case-insensitive) or its number.
std::optional<TableId> parse_table_id(std::string_view text);

/// nullopt stands for a printed "False" (no broadcasting anywhere).
using GoldenRange = std::optional<Interval>;
using GoldenValue = std::variant<double, GoldenRange>;

struct GoldenCell {
  std::size_t row = 0;
  std::string column;
  std::string printed;   ///< as printed
  GoldenValue expected;  ///< value the check uses
  /// Decimal places of the printed scalar; -1 for exact fractions and ranges.
  int decimals = -1;
  double tolerance = 0.0;
  /// Informational cells are reported but never fail a table.
  bool gating = true;
  std::string waiver;  ///< set when `expected` differs from `printed`
  std::string note;
};

struct GoldenTable {
  TableId id;
  /// Scalars are rounded to the printed precision before comparing.
  bool compare_rounded = false;
  std::vector<std::string> row_labels;
  std::vector<GoldenCell> cells;
};

const GoldenTable& golden_table(TableId id);

}  // namespace broadcastlab::report

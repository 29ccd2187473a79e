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
 * @file region_io.hpp
 * Region grids, the NME range-width curve and their CSV/JSON writers.
 *
 * CSV: header row, 6 significant digits, booleans as 0/1, row-major order.
 * JSON: numbers as decimal strings with 12 significant digits.
 */
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "broadcastlab/broadcast.hpp"

namespace broadcastlab::report {

/// Cloner tokens: silc, sinlc, dsdlc, dsdnlc, ssdlc@k, ssdnlc@k (lambda from
/// the rule at alpha^2 = k), lc=<lambda>, nlc=<lambda> (fixed lambda).
/// @throws ParameterError for an unknown token.
NamedCloner parse_cloner(std::string_view token);

/// Comma-separated list of cloner tokens.
std::vector<NamedCloner> parse_cloner_list(std::string_view list);

/// silc, dsdlc, sinlc, dsdnlc.
std::vector<NamedCloner> default_cloners();

void write_region_csv(std::ostream& out, const RegionGrid& grid);
void write_region_json(std::ostream& out, const RegionGrid& grid);

/// Total length of the intervals.
double range_width(const BroadcastRange& range);

struct Fig2Options {
  std::size_t points = 9;
  double k_lo = 0.1;
  double k_hi = 0.9;
  ScanOptions scan{};
};

struct Fig2Row {
  double k = 0.0;
  double lambda_lc = 0.0;
  double lambda_nlc = 0.0;
  double r_ssdlc = 0.0;
  double r_ssdnlc = 0.0;
};

/// Width R of the NME broadcasting range for static machines prepared at
/// alpha^2 = k, plus the k-independent widths of the SI and dynamic machines.
struct Fig2Data {
  std::vector<Fig2Row> rows;
  double r_silc = 0.0;
  double r_sinlc = 0.0;
  double r_dsdlc = 0.0;
  double r_dsdnlc = 0.0;
};

/// @throws ParameterError for fewer than 1 point or k outside (0, 1).
Fig2Data fig2_data(const Fig2Options& options = {});

void write_fig2_csv(std::ostream& out, const Fig2Data& data);
void write_fig2_json(std::ostream& out, const Fig2Data& data);

}  // namespace broadcastlab::report

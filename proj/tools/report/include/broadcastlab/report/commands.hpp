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
 * @file commands.hpp
 * Computations and renderers behind the CLI subcommands.
 */
#pragma once

#include <string>

#include "broadcastlab/cloner.hpp"
#include "broadcastlab/distortion.hpp"
#include "broadcastlab/report/tables.hpp"
#include "broadcastlab/states.hpp"

namespace broadcastlab::report {

enum class OutputFormat { kText, kCsv, kJson };

/// Text: aligned rows then one line per failed or waivered check. CSV: the
/// computed rows only. JSON: rows plus every check.
std::string render_table(const TableArtifact& table, OutputFormat format);

/// All four pair outputs (entries as [re, im] pairs), their Bloch forms and
/// PPT verdicts, the broadcasting verdict, the distortion report and the
/// lambda used.
/// @throws ParameterError, UnphysicalStateError for bad inputs.
std::string clone_report_json(const FamilyParams& params, const ClonerConfig& config);

struct OptimizeResult {
  RuleFamily rule{};
  double lambda_closed = 0.0;
  double lambda_numeric = 0.0;
  double gap = 0.0;
  bool at_boundary = false;
};

/// Closed-form rule vs golden-section minimum of its distortion curve.
/// @throws ParameterError when no rule exists for the family in that mode.
OptimizeResult optimize(const FamilyParams& params, CloningMode mode);

std::string optimize_json(const FamilyParams& params, CloningMode mode,
                          const OptimizeResult& result);

}  // namespace broadcastlab::report

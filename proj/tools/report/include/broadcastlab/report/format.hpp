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
 * @file format.hpp
 * Locale-independent number formatting shared by the CSV, JSON and text
 * writers.
 */
#pragma once

#include <string>

namespace broadcastlab::report {

/// Shortest %g rendering with `digits` significant digits; "-0" prints as "0".
std::string format_sig(double value, int digits);

/// Fixed-point rendering with `decimals` places.
std::string format_fixed(double value, int decimals);

/// Rounds half away from zero to `decimals` places.
double round_to(double value, int decimals);

}  // namespace broadcastlab::report

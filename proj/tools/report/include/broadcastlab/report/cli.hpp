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
 * @file cli.hpp
 * Entry point of the broadcastlab command line, callable in-process.
 *
 * Exit codes: 0 success, 2 a golden tolerance or optimizer gap was exceeded,
 * 3 invalid arguments (including rejected parameters and unwritable output
 * paths), 1 any other failure.
 */
#pragma once

#include <iosfwd>

namespace broadcastlab::report {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitTolerance = 2;
inline constexpr int kExitInvalid = 3;

/// Parses argv (argv[0] is the program name) and runs one subcommand.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace broadcastlab::report

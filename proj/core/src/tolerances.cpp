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
#include "broadcastlab/tolerances.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace broadcastlab::tol {

namespace {

double read_psd_override() {
  const char* raw = std::getenv("BROADCASTLAB_EPS");
  if (raw == nullptr || *raw == '\0') return kDefaultPsd;
  double value = 0.0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || !(value >= 0.0)) {
    throw std::invalid_argument(
        std::string("BROADCASTLAB_EPS is not a non-negative number: ") + raw);
  }
  return value;
}

}  // namespace

double psd() {
  static const double value = read_psd_override();
  return value;
}

}  // namespace broadcastlab::tol

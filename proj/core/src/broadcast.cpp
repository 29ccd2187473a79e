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
#include "broadcastlab/broadcast.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "broadcastlab/distortion.hpp"
#include "broadcastlab/tolerances.hpp"

namespace broadcastlab {

namespace {

constexpr std::size_t kRegionChunk = 64;

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = k + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(k) /
                                      static_cast<double>(n - 1);
  }
  return v;
}

bool in_domain(const FamilyParams& params) {
  if (const auto* b = std::get_if<BdsParams>(&params)) return b->physical();
  return true;
}

}  // namespace

SeparabilityVerdict ppt_verdict(const ComplexMatrix& rho) {
  if (rho.dim() != 4 || rho.subsystem_dims() != std::vector<std::size_t>{2, 2}) {
    throw DimensionError("ppt_verdict needs a 4x4 two-qubit matrix");
  }
  const ComplexMatrix pt = partial_transpose(rho, 1);
  SeparabilityVerdict v;
  v.min_pt_eigenvalue = hermitian_eigenvalues(pt).front();
  v.separable = v.min_pt_eigenvalue >= -tol::psd();
  v.w44 = determinant(pt).real();
  v.w33 = determinant(leading_block(pt, 3)).real();
  v.w22 = determinant(leading_block(pt, 2)).real();
  return v;
}

BroadcastVerdict broadcast_predicate(const CloneOutputs& outputs) {
  BroadcastVerdict verdict;
  const auto labels = pairs_for(outputs.mode);
  for (PairLabel label : labels) {
    verdict.pairs[label] = ppt_verdict(outputs.pair(label));
  }
  // labels[0..1] are the same-party pairs, labels[2..3] the cross pairs.
  verdict.broadcastable = verdict.pairs[labels[0]].separable &&
                          verdict.pairs[labels[1]].separable &&
                          !verdict.pairs[labels[2]].separable &&
                          !verdict.pairs[labels[3]].separable;
  return verdict;
}

PointClass classify_point(const FamilyParams& params, const ClonerConfig& cloner) {
  if (!in_domain(params)) return PointClass::kOutOfDomain;
  const DensityMatrix rho = make_family(params);
  const double lambda = lambda_for(cloner, params);
  const CloneOutputs out = clone_joint(rho, cloner.mode, lambda, false);
  return broadcast_predicate(out).broadcastable ? PointClass::kBroadcastable
                                                : PointClass::kNotBroadcastable;
}

BroadcastRange scan_range_1d(const ParamCurve& curve, const ClonerConfig& cloner,
                             Interval domain, const ScanOptions& options) {
  if (!(domain.hi > domain.lo) || options.grid_points < 2) {
    throw ParameterError("scan_range_1d needs a nonempty domain and >= 2 points");
  }
  auto hit = [&](double x) {
    return classify_point(curve(x), cloner) == PointClass::kBroadcastable;
  };
  // Location of the flip between a (with value `at_a`) and b.
  auto bisect = [&](double a, double b, bool at_a) {
    while (b - a >= options.boundary_tol) {
      const double m = 0.5 * (a + b);
      if (hit(m) == at_a) {
        a = m;
      } else {
        b = m;
      }
    }
    return 0.5 * (a + b);
  };

  const auto xs = linspace(domain.lo, domain.hi, options.grid_points);
  std::vector<bool> flags(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) flags[k] = hit(xs[k]);

  BroadcastRange range;
  range.boundary_tol = options.boundary_tol;
  double start = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const bool prev = k > 0 && flags[k - 1];
    if (flags[k] && !prev) {
      start = k == 0 ? domain.lo : bisect(xs[k - 1], xs[k], false);
    } else if (!flags[k] && prev) {
      range.intervals.push_back({start, bisect(xs[k - 1], xs[k], true)});
    }
  }
  if (flags.back()) range.intervals.push_back({start, domain.hi});
  return range;
}

BroadcastRange dynamic_range(const ParamCurve& curve, CloningMode mode,
                             Interval domain, const ScanOptions& options) {
  return scan_range_1d(curve, ClonerConfig{mode, DynamicStateDependent{}}, domain,
                       options);
}

RegionGrid scan_region(RegionFamily family, std::span<const NamedCloner> cloners,
                       std::span<const std::size_t> resolution, unsigned threads) {
  const std::size_t n_axes = family == RegionFamily::kWerner ? 2 : 3;
  if (resolution.size() != n_axes) {
    throw ParameterError("region scan needs " + std::to_string(n_axes) +
                         " resolution values");
  }
  if (std::any_of(resolution.begin(), resolution.end(),
                  [](std::size_t r) { return r < 2; })) {
    throw ParameterError("every region resolution must be >= 2");
  }

  RegionGrid grid;
  if (family == RegionFamily::kWerner) {
    grid.axes = {{"alpha_sq", linspace(0.0, 1.0, resolution[0])},
                 {"p", linspace(0.0, 1.0, resolution[1])}};
  } else {
    grid.axes = {{"c1", linspace(-1.0, 1.0, resolution[0])},
                 {"c2", linspace(-1.0, 1.0, resolution[1])},
                 {"c3", linspace(-1.0, 1.0, resolution[2])}};
  }
  for (const auto& c : cloners) grid.cloner_names.push_back(c.name);

  std::size_t total = 1;
  for (std::size_t r : resolution) total *= r;
  grid.records.resize(total);

  auto params_at = [&](std::size_t index) -> FamilyParams {
    std::vector<double> coords(n_axes);
    for (std::size_t a = n_axes; a-- > 0;) {
      const std::size_t n = grid.axes[a].values.size();
      coords[a] = grid.axes[a].values[index % n];
      index /= n;
    }
    if (family == RegionFamily::kWerner) return WernerParams{coords[0], coords[1]};
    return BdsParams{coords[0], coords[1], coords[2]};
  };

  auto classify = [&](std::size_t index) {
    RegionRecord rec;
    rec.broadcastable.assign(cloners.size(), 0);
    const FamilyParams params = params_at(index);
    rec.input_physical = in_domain(params);
    if (rec.input_physical) {
      const DensityMatrix rho = make_family(params);
      rec.input_entangled = !ppt_verdict(rho.matrix()).separable;
      for (std::size_t c = 0; c < cloners.size(); ++c) {
        const double lambda = lambda_for(cloners[c].config, params);
        const CloneOutputs out = clone_joint(rho, cloners[c].config.mode, lambda, false);
        rec.broadcastable[c] = broadcast_predicate(out).broadcastable ? 1 : 0;
      }
    }
    grid.records[index] = std::move(rec);
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1u, workers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(kRegionChunk);
        if (begin >= total) return;
        const std::size_t end = std::min(total, begin + kRegionChunk);
        for (std::size_t i = begin; i < end; ++i) classify(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(total);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

}  // namespace broadcastlab

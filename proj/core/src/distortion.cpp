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
#include "broadcastlab/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "broadcastlab/tolerances.hpp"

namespace broadcastlab {

namespace {

constexpr std::size_t kBracketGrid = 201;
constexpr double kGoldenWidth = 1e-9;

template <typename T>
const T& params_as(const FamilyParams& params, RuleFamily rule) {
  if (const T* p = std::get_if<T>(&params)) return *p;
  throw ParameterError("rule " + std::string(to_string(rule)) +
                       " does not apply to " + family_name(params) + " input");
}

/// State cloned by the machine that a rule optimizes: the pure qubit itself,
/// the reduced state for local rules, the pair for non-local rules.
ComplexMatrix machine_input(RuleFamily rule, const FamilyParams& params) {
  const DensityMatrix rho = make_family(params);
  if (rule == RuleFamily::kPureQubit || rule_mode(rule) == CloningMode::kNonlocal) {
    return rho.matrix();
  }
  return partial_trace(rho.matrix(), {0});
}

}  // namespace

double hs_dist_sq(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("hs_dist_sq: dimension mismatch");
  }
  double sum = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) sum += std::norm(ea[i] - eb[i]);
  return sum;
}

double closed_da(int dim, double lambda) {
  return dim * (dim - 1) * lambda * lambda;
}

double closed_da_pure(double alpha_sq, double lambda, double mu) {
  const double a2 = alpha_sq;
  return 2.0 * (1.0 - 2.0 * a2) * (1.0 - 2.0 * a2) * lambda * lambda -
         2.0 * (a2 - 1.0) * a2 * (mu - 1.0) * (mu - 1.0);
}

double closed_dab_pure(double alpha_sq, double lambda) {
  const double ab2 = alpha_sq * (1.0 - alpha_sq);
  return 2.0 * ab2 - 12.0 * ab2 * lambda + 8.0 * lambda * lambda;
}

double closed_dab_pure_literal(double alpha_sq, double lambda) {
  const double a2 = alpha_sq;
  return 2.0 * (1.0 - 2.0 * a2) * a2 + 12.0 * (a2 - 1.0) * lambda * a2 +
         8.0 * lambda * lambda;
}

std::string_view to_string(RuleFamily rule) {
  switch (rule) {
    case RuleFamily::kPureQubit: return "pure_qubit";
    case RuleFamily::kNmeLocal: return "nme_local";
    case RuleFamily::kNmeNonlocal: return "nme_nonlocal";
    case RuleFamily::kWernerLocal: return "werner_local";
    case RuleFamily::kWernerNonlocal: return "werner_nonlocal";
    case RuleFamily::kBdsLocal: return "bds_local";
    case RuleFamily::kBdsNonlocal: return "bds_nonlocal";
  }
  return "?";
}

CloningMode rule_mode(RuleFamily rule) {
  switch (rule) {
    case RuleFamily::kNmeNonlocal:
    case RuleFamily::kWernerNonlocal:
    case RuleFamily::kBdsNonlocal:
      return CloningMode::kNonlocal;
    default:
      return CloningMode::kLocal;
  }
}

std::optional<RuleFamily> rule_for(const FamilyParams& params, CloningMode mode) {
  const bool local = mode == CloningMode::kLocal;
  struct Visitor {
    bool local;
    std::optional<RuleFamily> operator()(const PureQubitParams&) const {
      if (!local) return std::nullopt;
      return RuleFamily::kPureQubit;
    }
    std::optional<RuleFamily> operator()(const NmeParams&) const {
      return local ? RuleFamily::kNmeLocal : RuleFamily::kNmeNonlocal;
    }
    std::optional<RuleFamily> operator()(const WernerParams&) const {
      return local ? RuleFamily::kWernerLocal : RuleFamily::kWernerNonlocal;
    }
    std::optional<RuleFamily> operator()(const BdsParams&) const {
      return local ? RuleFamily::kBdsLocal : RuleFamily::kBdsNonlocal;
    }
  };
  return std::visit(Visitor{local}, params);
}

double optimal_lambda(RuleFamily rule, const FamilyParams& params,
                      FormulaVariant variant) {
  validate(params);
  switch (rule) {
    case RuleFamily::kPureQubit: {
      const double a2 = params_as<PureQubitParams>(params, rule).alpha_sq;
      return 3.0 * a2 * (1.0 - a2) / 4.0;
    }
    case RuleFamily::kNmeLocal: {
      const double a2 = params_as<NmeParams>(params, rule).alpha_sq;
      return a2 * (1.0 - a2) / (2.0 * (1.0 - a2 + a2 * a2));
    }
    case RuleFamily::kNmeNonlocal: {
      const double a2 = params_as<NmeParams>(params, rule).alpha_sq;
      return 13.0 * a2 * (1.0 - a2) / (4.0 * (6.0 + a2 - a2 * a2));
    }
    case RuleFamily::kWernerLocal: {
      const auto& w = params_as<WernerParams>(params, rule);
      const double s = 2.0 * w.alpha_sq - 1.0;
      const double q = w.p * w.p * s * s;
      const double numerator = variant == FormulaVariant::kLiteral ? q - 1.0 : 1.0 - q;
      return numerator / (2.0 * (3.0 + q));
    }
    case RuleFamily::kWernerNonlocal: {
      const auto& w = params_as<WernerParams>(params, rule);
      const double a2 = w.alpha_sq;
      const double a4 = a2 * a2;
      const double p = w.p;
      const double p2 = p * p;
      return (-3.0 + p2 * (34.0 * a4 - 34.0 * a2 - 3.0) +
              6.0 * p2 * p * (3.0 * a4 - 3.0 * a2 + 1.0)) /
             (2.0 * (-15.0 + p2 * (8.0 * a4 - 8.0 * a2 - 33.0)));
    }
    case RuleFamily::kBdsLocal:
      params_as<BdsParams>(params, rule);
      return 1.0 / 6.0;
    case RuleFamily::kBdsNonlocal: {
      const auto& b = params_as<BdsParams>(params, rule);
      const double c1 = b.c1;
      const double c2 = b.c2;
      const double c3 = b.c3;
      return (21.0 * c1 * c1 + 6.0 * c1 * c2 * c3 + 21.0 * c2 * c2 +
              4.0 * c3 * c3 + 12.0) /
             (8.0 * (12.0 * c1 * c1 + 12.0 * c2 * c2 + 11.0 * c3 * c3 + 15.0));
    }
  }
  throw ParameterError("unknown rule");
}

NumericMinimum optimal_lambda_numeric(const std::function<double(double)>& curve,
                                      double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    throw ParameterError("optimal_lambda_numeric needs a nonempty interval");
  }
  const std::size_t n = kBracketGrid;
  const double step = (hi - lo) / static_cast<double>(n - 1);
  auto grid = [&](std::size_t k) {
    return k == n - 1 ? hi : lo + step * static_cast<double>(k);
  };
  std::size_t best = 0;
  double best_value = curve(lo);
  for (std::size_t k = 1; k < n; ++k) {
    const double v = curve(grid(k));
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }

  double a = grid(best == 0 ? 0 : best - 1);
  double b = grid(best == n - 1 ? n - 1 : best + 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = curve(c);
  double fd = curve(d);
  while (b - a > kGoldenWidth) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = curve(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = curve(d);
    }
  }
  NumericMinimum result;
  result.argmin = 0.5 * (a + b);
  result.value = curve(result.argmin);

  // A minimum that collapses onto an end of the domain is reported there.
  for (double edge : {lo, hi}) {
    if (std::abs(result.argmin - edge) <= 2.0 * kGoldenWidth) {
      const double fe = curve(edge);
      if (fe <= result.value) {
        result.argmin = edge;
        result.value = fe;
      }
      result.at_boundary = true;
    }
  }
  return result;
}

std::function<double(double)> distortion_curve(RuleFamily rule,
                                               const FamilyParams& params) {
  // Validates the family/rule pairing up front.
  optimal_lambda(rule, params);
  const ComplexMatrix input = machine_input(rule, params);
  const ComplexMatrix ideal = tensor(input, input);
  const int dim = machine_dim(rule_mode(rule));
  return [input, ideal, dim](double lambda) {
    const CloningChannel channel = CloningChannel::build(MachineGram(dim, lambda));
    return hs_dist_sq(channel.apply(input), ideal);
  };
}

NumericMinimum optimal_lambda_numeric(RuleFamily rule, const FamilyParams& params) {
  const auto curve = distortion_curve(rule, params);
  return optimal_lambda_numeric(curve, 0.0, lambda_max(machine_dim(rule_mode(rule))));
}

double lambda_for(const ClonerConfig& config, const FamilyParams& params) {
  const int dim = machine_dim(config.mode);
  struct Visitor {
    const ClonerConfig& config;
    const FamilyParams& params;
    int dim;
    double operator()(const StateIndependent&) const { return si_lambda(dim); }
    double operator()(const StaticStateDependent& s) const {
      if (!std::isfinite(s.lambda) || s.lambda < 0.0 || s.lambda > lambda_max(dim)) {
        std::ostringstream msg;
        msg << "lambda " << s.lambda << " outside [0, " << lambda_max(dim)
            << "] for " << to_string(config.mode) << " cloning";
        throw ParameterError(msg.str());
      }
      return s.lambda;
    }
    double operator()(const PreparedStateDependent& s) const {
      FamilyParams prepared = params;
      if (auto* n = std::get_if<NmeParams>(&prepared)) {
        n->alpha_sq = s.k;
      } else if (auto* w = std::get_if<WernerParams>(&prepared)) {
        w->alpha_sq = s.k;
      } else {
        throw ParameterError("a machine prepared at alpha_sq = k needs an nme or "
                             "werner input, got " + family_name(params));
      }
      return (*this)(DynamicStateDependent{}, prepared);
    }
    double operator()(const DynamicStateDependent&) const {
      return (*this)(DynamicStateDependent{}, params);
    }
    double operator()(const DynamicStateDependent&, const FamilyParams& at) const {
      const auto rule = rule_for(at, config.mode);
      if (!rule) {
        throw ParameterError("no optimal-lambda rule for " + family_name(at) +
                             " input in " + std::string(to_string(config.mode)) +
                             " mode");
      }
      return optimal_lambda(*rule, at);
    }
  };
  if (std::holds_alternative<PureQubitParams>(params) &&
      config.mode == CloningMode::kNonlocal) {
    throw ParameterError("a single-qubit input can only be cloned locally");
  }
  return std::visit(Visitor{config, params, dim}, config.flavor);
}

DistortionReport distortion_report(const FamilyParams& params,
                                   const ClonerConfig& config) {
  DistortionReport report;
  report.params = params;
  report.lambda_used = lambda_for(config, params);
  const DensityMatrix rho = make_family(params);
  const CloningChannel channel =
      CloningChannel::build(MachineGram::for_mode(config.mode, report.lambda_used));

  ComplexMatrix input = rho.matrix();
  if (std::holds_alternative<PureQubitParams>(params)) {
    report.single_label = "D_a";
    report.joint_label = "D_ab";
  } else if (config.mode == CloningMode::kLocal) {
    input = partial_trace(rho.matrix(), {0});
    report.single_label = "D_1";
    report.joint_label = "D_13";
  } else {
    report.single_label = "D_12";
    report.joint_label = "D_1234";
  }
  const ComplexMatrix out = channel.apply(input);
  const std::size_t copy_factors = input.subsystem_count();
  std::vector<std::size_t> first_copy(copy_factors);
  for (std::size_t k = 0; k < copy_factors; ++k) first_copy[k] = k;
  report.d_joint = hs_dist_sq(out, tensor(input, input));
  report.d_single = hs_dist_sq(partial_trace(out, first_copy), input);
  return report;
}

}  // namespace broadcastlab

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
#include "broadcastlab/report/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "broadcastlab/broadcast.hpp"
#include "broadcastlab/report/format.hpp"
#include "broadcastlab/tolerances.hpp"
#include "json.hpp"

namespace broadcastlab::report {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kJsonDigits = 12;
constexpr int kCsvDigits = 6;

std::string num(double v) { return format_sig(v, kJsonDigits); }

std::string cell_text(const std::optional<ComputedCell>& cell, int digits) {
  if (!cell) return "";
  if (const double* v = std::get_if<double>(&*cell)) return format_sig(*v, digits);
  return describe(std::get<BroadcastRange>(*cell));
}

Json range_json(const BroadcastRange& range) {
  Json arr = Json::array();
  for (const Interval& i : range.intervals) arr.push_back({num(i.lo), num(i.hi)});
  return arr;
}

Json cell_json(const std::optional<ComputedCell>& cell) {
  if (!cell) return nullptr;
  if (const double* v = std::get_if<double>(&*cell)) return num(*v);
  return range_json(std::get<BroadcastRange>(*cell));
}

std::string render_text(const TableArtifact& t) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"row"});
  for (const auto& c : t.columns) grid.back().push_back(c);
  for (const TableRow& r : t.rows) {
    grid.push_back({r.label});
    for (const auto& c : r.cells) grid.back().push_back(cell_text(c, kCsvDigits));
  }
  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }

  std::ostringstream out;
  out << "table " << static_cast<int>(t.id) << " " << t.name << ": " << t.title
      << "\n";
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << "\n";
  }
  std::size_t informational_misses = 0;
  for (const CellCheck& c : t.checks) {
    if (!c.gating && !c.ok) ++informational_misses;
    if (c.ok && c.note.empty()) continue;
    const char* status = c.ok ? "ok  " : (c.gating ? "FAIL" : "info");
    out << status << " row " << t.rows[c.row].label << " " << c.column
        << ": printed " << c.printed << ", computed " << c.computed << ", |d| "
        << format_sig(c.deviation, 3) << " (tol " << format_sig(c.tolerance, 3) << ")";
    if (!c.note.empty()) out << " [" << c.note << "]";
    out << "\n";
  }
  out << "golden v" << t.golden_version << ": " << t.checks.size() << " checks, "
      << t.failures() << " failed, " << informational_misses
      << " informational mismatches\n";
  return out.str();
}

std::string render_csv(const TableArtifact& t) {
  std::ostringstream out;
  out << "row";
  for (const auto& c : t.columns) out << "," << c;
  out << "\n";
  for (const TableRow& r : t.rows) {
    out << '"' << r.label << '"';
    for (const auto& c : r.cells) {
      const std::string text = cell_text(c, kCsvDigits);
      if (c && std::holds_alternative<BroadcastRange>(*c)) {
        out << ",\"" << text << '"';
      } else {
        out << "," << text;
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string render_json(const TableArtifact& t) {
  Json j;
  j["table"] = static_cast<int>(t.id);
  j["name"] = t.name;
  j["title"] = t.title;
  j["golden_version"] = t.golden_version;
  j["columns"] = t.columns;
  Json rows = Json::array();
  for (const TableRow& r : t.rows) {
    Json cells = Json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      cells[t.columns[c]] = cell_json(r.cells[c]);
    }
    rows.push_back({{"label", r.label}, {"cells", cells}});
  }
  j["rows"] = std::move(rows);
  Json checks = Json::array();
  for (const CellCheck& c : t.checks) {
    checks.push_back({{"row", t.rows[c.row].label},
                      {"column", c.column},
                      {"printed", c.printed},
                      {"computed", c.computed},
                      {"deviation", num(c.deviation)},
                      {"tolerance", num(c.tolerance)},
                      {"ok", c.ok},
                      {"gating", c.gating},
                      {"note", c.note}});
  }
  j["checks"] = std::move(checks);
  j["passed"] = t.passed();
  return j.dump(2) + "\n";
}

Json matrix_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      row.push_back({num(m(r, c).real()), num(m(r, c).imag())});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vec_json(const Vec3& v) { return {num(v[0]), num(v[1]), num(v[2])}; }

Json bloch_json(const BlochTwoQubit& b) {
  return {{"x", vec_json(b.x)},
          {"y", vec_json(b.y)},
          {"t", {vec_json(b.t[0]), vec_json(b.t[1]), vec_json(b.t[2])}}};
}

Json params_json(const FamilyParams& params) {
  return std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PureQubitParams> || std::is_same_v<T, NmeParams>) {
          return {{"alpha_sq", num(p.alpha_sq)}};
        } else if constexpr (std::is_same_v<T, WernerParams>) {
          return {{"alpha_sq", num(p.alpha_sq)}, {"p", num(p.p)}};
        } else {
          return {{"c1", num(p.c1)}, {"c2", num(p.c2)}, {"c3", num(p.c3)}};
        }
      },
      params);
}

std::string flavor_name(const ClonerFlavor& flavor) {
  struct Visitor {
    std::string operator()(const StateIndependent&) const { return "si"; }
    std::string operator()(const StaticStateDependent&) const { return "ssd"; }
    std::string operator()(const PreparedStateDependent&) const { return "ssd@k"; }
    std::string operator()(const DynamicStateDependent&) const { return "dsd"; }
  };
  return std::visit(Visitor{}, flavor);
}

}  // namespace

std::string render_table(const TableArtifact& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::kCsv:
      return render_csv(table);
    case OutputFormat::kJson:
      return render_json(table);
    case OutputFormat::kText:
      break;
  }
  return render_text(table);
}

std::string clone_report_json(const FamilyParams& params, const ClonerConfig& config) {
  validate(params);
  const DensityMatrix rho = make_family(params);
  if (rho.dim() != 4) throw ParameterError("clone needs a two-qubit family");
  const double lambda = lambda_for(config, params);
  const CloneOutputs out = clone_joint(rho, config.mode, lambda, false);
  const BroadcastVerdict verdict = broadcast_predicate(out);
  const DistortionReport dist = distortion_report(params, config);

  Json j;
  j["family"] = family_name(params);
  j["params"] = params_json(params);
  j["mode"] = std::string(to_string(config.mode));
  j["flavor"] = flavor_name(config.flavor);
  j["lambda"] = num(lambda);
  j["input_entangled"] = !ppt_verdict(rho.matrix()).separable;
  Json pairs = Json::object();
  for (PairLabel label : pairs_for(config.mode)) {
    const ComplexMatrix& m = out.pair(label);
    const SeparabilityVerdict& v = verdict.pairs.at(label);
    pairs[std::string(to_string(label))] = {
        {"matrix", matrix_json(m)},
        {"bloch", bloch_json(density_to_bloch(m))},
        {"min_eigenvalue", num(out.min_eigenvalues.at(label))},
        {"ppt",
         {{"separable", v.separable},
          {"min_pt_eigenvalue", num(v.min_pt_eigenvalue)},
          {"w44", num(v.w44)},
          {"w33", num(v.w33)},
          {"w22", num(v.w22)}}}};
  }
  j["pairs"] = std::move(pairs);
  j["broadcastable"] = verdict.broadcastable;
  j["distortion"] = {{dist.single_label, num(dist.d_single)},
                     {dist.joint_label, num(dist.d_joint)}};
  return j.dump(2) + "\n";
}

OptimizeResult optimize(const FamilyParams& params, CloningMode mode) {
  validate(params);
  const auto rule = rule_for(params, mode);
  if (!rule) {
    throw ParameterError("no optimal-lambda rule for " + family_name(params) + " in " +
                         std::string(to_string(mode)) + " mode");
  }
  OptimizeResult r;
  r.rule = *rule;
  r.lambda_closed = optimal_lambda(*rule, params);
  const NumericMinimum m = optimal_lambda_numeric(*rule, params);
  r.lambda_numeric = m.argmin;
  r.at_boundary = m.at_boundary;
  r.gap = std::abs(r.lambda_closed - r.lambda_numeric);
  return r;
}

std::string optimize_json(const FamilyParams& params, CloningMode mode,
                          const OptimizeResult& result) {
  Json j;
  j["family"] = family_name(params);
  j["params"] = params_json(params);
  j["mode"] = std::string(to_string(mode));
  j["rule"] = std::string(to_string(result.rule));
  j["lambda_closed"] = num(result.lambda_closed);
  j["lambda_numeric"] = num(result.lambda_numeric);
  j["gap"] = num(result.gap);
  j["at_boundary"] = result.at_boundary;
  return j.dump(2) + "\n";
}

}  // namespace broadcastlab::report

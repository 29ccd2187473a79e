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
#include "broadcastlab/report/tables.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <stdexcept>

#include "broadcastlab/distortion.hpp"
#include "broadcastlab/report/format.hpp"

namespace broadcastlab::report {

namespace {

const std::vector<double> kGrid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
constexpr Interval kUnit{0.0, 1.0};
constexpr Interval kCorrelation{-1.0, 1.0};

// Rows are independent, so range-heavy tables compute them concurrently.
std::vector<TableRow> rows_parallel(std::size_t n,
                                    const std::function<TableRow(std::size_t)>& row) {
  std::vector<std::future<TableRow>> jobs;
  jobs.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    jobs.push_back(std::async(std::launch::async, row, r));
  }
  std::vector<TableRow> rows;
  rows.reserve(n);
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

std::string grid_label(double x) { return format_fixed(x, 1); }

ClonerConfig si(CloningMode mode) { return {mode, StateIndependent{}}; }
ClonerConfig fixed(CloningMode mode, double lambda) {
  return {mode, StaticStateDependent{lambda}};
}
ClonerConfig dynamic(CloningMode mode) { return {mode, DynamicStateDependent{}}; }

ParamCurve nme_curve() {
  return [](double a) -> FamilyParams { return NmeParams{a}; };
}
ParamCurve werner_in_alpha(double p) {
  return [p](double a) -> FamilyParams { return WernerParams{a, p}; };
}
ParamCurve werner_in_p(double alpha_sq) {
  return [alpha_sq](double p) -> FamilyParams { return WernerParams{alpha_sq, p}; };
}
ParamCurve bds_in_c3(double c1, double c2) {
  return [c1, c2](double c3) -> FamilyParams { return BdsParams{c1, c2, c3}; };
}

double printed_value(TableId id, std::size_t row, const std::string& column) {
  for (const GoldenCell& c : golden_table(id).cells) {
    if (c.row == row && c.column == column) return std::get<double>(c.expected);
  }
  throw std::logic_error("no golden cell " + column);
}

struct Layout {
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
};

Layout static_construction() {
  Layout t{{"alpha_sq", "lambda", "d_a"}, {}};
  for (double a : kGrid) {
    const PureQubitParams in{a};
    const double lambda = optimal_lambda(RuleFamily::kPureQubit, in);
    const auto rep = distortion_report(in, fixed(CloningMode::kLocal, lambda));
    t.rows.push_back({grid_label(a), {a, lambda, rep.d_single}});
  }
  return t;
}

Layout static_performance() {
  Layout t{{"alpha_sq", "lambda", "d_a", "d_ab"}, {}};
  const double lambda = optimal_lambda(RuleFamily::kPureQubit, PureQubitParams{0.1});
  for (double a : kGrid) {
    const auto rep =
        distortion_report(PureQubitParams{a}, fixed(CloningMode::kLocal, lambda));
    t.rows.push_back({grid_label(a), {a, lambda, rep.d_single, rep.d_joint}});
  }
  return t;
}

Layout dynamic_performance() {
  Layout t{{"alpha_sq", "lambda", "d_a", "d_ab"}, {}};
  for (double a : kGrid) {
    const auto rep = distortion_report(PureQubitParams{a}, dynamic(CloningMode::kLocal));
    t.rows.push_back(
        {grid_label(a), {a, rep.lambda_used, rep.d_single, rep.d_joint}});
  }
  return t;
}

Layout cloning_comparison() {
  Layout t{{"alpha_sq", "lambda_dsdlc", "d_a_dsdlc", "d_a_sil", "lambda_dsdnlc",
            "d_a_dsdnlc", "d_a_sinl"},
           {}};
  for (double a : kGrid) {
    const auto dsdlc = distortion_report(PureQubitParams{a}, dynamic(CloningMode::kLocal));
    const auto sil = distortion_report(PureQubitParams{a}, si(CloningMode::kLocal));
    const auto dsdnlc = distortion_report(NmeParams{a}, dynamic(CloningMode::kNonlocal));
    const auto sinl = distortion_report(NmeParams{a}, si(CloningMode::kNonlocal));
    t.rows.push_back({grid_label(a),
                      {a, dsdlc.lambda_used, dsdlc.d_single, sil.d_single,
                       dsdnlc.lambda_used, dsdnlc.d_single, sinl.d_single}});
  }
  return t;
}

Layout nme_machines(TableId id, CloningMode mode, RuleFamily rule,
                    const std::string& ssd, const std::string& si_name) {
  Layout t{{"k", "lambda", "lambda_used", ssd, si_name}, {}};
  const BroadcastRange si_range = scan_range_1d(nme_curve(), si(mode), kUnit);
  t.rows = rows_parallel(kGrid.size(), [&](std::size_t r) {
    const double k = kGrid[r];
    const double lambda = optimal_lambda(rule, NmeParams{k});
    // Ranges use the lambda as printed, the column above is recomputed.
    const double used = printed_value(id, r, "lambda");
    return TableRow{"M" + std::to_string(r + 1),
                    {k, lambda, used,
                     scan_range_1d(nme_curve(), fixed(mode, used), kUnit), si_range}};
  });
  return t;
}

Layout werner_table(TableId id, double p) {
  Layout t{{"k", "lambda_lc", "ssdlc", "lambda_nlc", "ssdnlc"}, {}};
  const GoldenTable& golden = golden_table(id);
  t.rows = rows_parallel(kGrid.size(), [&](std::size_t r) {
    const double k = kGrid[r];
    const WernerParams at{k, p};
    const double lc = optimal_lambda(RuleFamily::kWernerLocal, at);
    const double nlc = optimal_lambda(RuleFamily::kWernerNonlocal, at);
    // Static machines run at the printed lambda (after any waiver).
    double used_lc = 0.0;
    double used_nlc = 0.0;
    for (const GoldenCell& c : golden.cells) {
      if (c.row != r) continue;
      if (c.column == "lambda_lc") used_lc = std::get<double>(c.expected);
      if (c.column == "lambda_nlc") used_nlc = std::get<double>(c.expected);
    }
    return TableRow{
        grid_label(k),
        {k, lc,
         scan_range_1d(werner_in_alpha(p), fixed(CloningMode::kLocal, used_lc), kUnit),
         nlc,
         scan_range_1d(werner_in_alpha(p), fixed(CloningMode::kNonlocal, used_nlc),
                       kUnit)}};
  });
  return t;
}

Layout dsd_werner() {
  Layout t{{"alpha_sq", "silc", "dsdlc", "sinlc", "dsdnlc"}, {}};
  t.rows = rows_parallel(kGrid.size(), [&](std::size_t r) {
    const double a = kGrid[r];
    const ParamCurve curve = werner_in_p(a);
    return TableRow{grid_label(a),
                    {a, scan_range_1d(curve, si(CloningMode::kLocal), kUnit),
                     dynamic_range(curve, CloningMode::kLocal, kUnit),
                     scan_range_1d(curve, si(CloningMode::kNonlocal), kUnit),
                     dynamic_range(curve, CloningMode::kNonlocal, kUnit)}};
  });
  return t;
}

// Physical c3 interval of a Bell-diagonal state with the given c1, c2.
BroadcastRange physical_window(double c1, double c2) {
  const double lo = std::max({-1.0, c1 - c2 - 1.0, c2 - c1 - 1.0});
  const double hi = std::min({1.0, 1.0 - c1 - c2, 1.0 + c1 + c2});
  BroadcastRange w;
  if (hi >= lo) w.intervals.push_back({lo, hi});
  return w;
}

struct C1C2 {
  double c1;
  double c2;
};

Layout bell_local() {
  const std::vector<C1C2> inputs{
      {-7.0 / 8, -7.0 / 8}, {-0.75, -0.75}, {-7.0 / 8, -0.75}, {-0.75, -7.0 / 8}};
  Layout t{{"c1", "c2", "silc", "dsdlc", "window"}, {}};
  const auto& labels = golden_table(TableId::kBellLocal).row_labels;
  t.rows = rows_parallel(inputs.size(), [&](std::size_t r) {
    const auto [c1, c2] = inputs[r];
    const ParamCurve curve = bds_in_c3(c1, c2);
    return TableRow{labels[r],
                    {c1, c2, scan_range_1d(curve, si(CloningMode::kLocal), kCorrelation),
                     dynamic_range(curve, CloningMode::kLocal, kCorrelation),
                     physical_window(c1, c2)}};
  });
  return t;
}

constexpr double kA = -7.0 / 9;
constexpr double kB = -5.0 / 9;

Layout bell_lambda_nonlocal() {
  const std::vector<BdsParams> inputs{{kA, kA, kA}, {kA, kA, kB}, {kA, kB, kA},
                                      {kA, kB, kB}, {kB, kA, kA}, {kB, kA, kB},
                                      {kB, kB, kA}, {kB, kB, kB}};
  Layout t{{"c1", "c2", "c3", "lambda"}, {}};
  const auto& labels = golden_table(TableId::kBellLambdaNonlocal).row_labels;
  for (std::size_t r = 0; r < inputs.size(); ++r) {
    const BdsParams& b = inputs[r];
    t.rows.push_back({labels[r],
                      {b.c1, b.c2, b.c3, optimal_lambda(RuleFamily::kBdsNonlocal, b)}});
  }
  return t;
}

Layout bell_nonlocal() {
  struct Row {
    double c1, c2, lambda;
  };
  const std::vector<Row> inputs{{kA, kA, 0.1278}, {kA, kA, 0.1391}, {kA, kB, 0.1210},
                                {kA, kB, 0.1319}, {kB, kA, 0.1210}, {kB, kA, 0.1319},
                                {kB, kB, 0.1116}, {kB, kB, 0.1219}};
  Layout t{{"c1", "c2", "lambda", "ssdnlc"}, {}};
  const auto& labels = golden_table(TableId::kBellNonlocal).row_labels;
  t.rows = rows_parallel(inputs.size(), [&](std::size_t r) {
    const Row& in = inputs[r];
    return TableRow{labels[r],
                    {in.c1, in.c2, in.lambda,
                     scan_range_1d(bds_in_c3(in.c1, in.c2),
                                   fixed(CloningMode::kNonlocal, in.lambda),
                                   kCorrelation)}};
  });
  return t;
}

Layout bell_dynamic() {
  const std::vector<C1C2> inputs{{kA, kA},          {kB, kB},
                                 {kA, kB},          {kB, kA},
                                 {-0.4, -0.4},      {-1.0 / 3, -1.0 / 3}};
  Layout t{{"c1", "c2", "sinlc", "dsdnlc"}, {}};
  const auto& labels = golden_table(TableId::kBellDynamic).row_labels;
  t.rows = rows_parallel(inputs.size(), [&](std::size_t r) {
    const auto [c1, c2] = inputs[r];
    const ParamCurve curve = bds_in_c3(c1, c2);
    return TableRow{labels[r],
                    {c1, c2,
                     scan_range_1d(curve, si(CloningMode::kNonlocal), kCorrelation),
                     dynamic_range(curve, CloningMode::kNonlocal, kCorrelation)}};
  });
  return t;
}

Layout compute(TableId id) {
  switch (id) {
    case TableId::kStaticConstruction:
      return static_construction();
    case TableId::kStaticPerformance:
      return static_performance();
    case TableId::kDynamicPerformance:
      return dynamic_performance();
    case TableId::kCloningComparison:
      return cloning_comparison();
    case TableId::kLocalNonmaximally:
      return nme_machines(id, CloningMode::kLocal, RuleFamily::kNmeLocal, "ssdlc",
                          "silc");
    case TableId::kNonlocalNonmaximally:
      return nme_machines(id, CloningMode::kNonlocal, RuleFamily::kNmeNonlocal,
                          "ssdnlc", "sinlc");
    case TableId::kWernerP065:
      return werner_table(id, 0.65);
    case TableId::kWernerP080:
      return werner_table(id, 0.80);
    case TableId::kWernerP095:
      return werner_table(id, 0.95);
    case TableId::kDsdWerner:
      return dsd_werner();
    case TableId::kBellLocal:
      return bell_local();
    case TableId::kBellLambdaNonlocal:
      return bell_lambda_nonlocal();
    case TableId::kBellNonlocal:
      return bell_nonlocal();
    case TableId::kBellDynamic:
      return bell_dynamic();
  }
  throw std::logic_error("unknown table id");
}

std::string describe_cell(const ComputedCell& cell) {
  if (const double* v = std::get_if<double>(&cell)) return format_sig(*v, 6);
  return describe(std::get<BroadcastRange>(cell));
}

CellCheck check_cell(const GoldenTable& golden, const GoldenCell& cell,
                     const ComputedCell& computed) {
  CellCheck c;
  c.row = cell.row;
  c.column = cell.column;
  c.printed = cell.printed;
  c.tolerance = cell.tolerance;
  c.gating = cell.gating;
  c.note = !cell.waiver.empty() ? "waiver: " + cell.waiver : cell.note;
  c.computed = describe_cell(computed);
  if (const double* expected = std::get_if<double>(&cell.expected)) {
    double value = std::get<double>(computed);
    if (golden.compare_rounded && cell.decimals >= 0) {
      value = round_to(value, cell.decimals);
    }
    c.deviation = std::abs(value - *expected);
  } else {
    c.deviation = range_deviation(std::get<BroadcastRange>(computed),
                                  std::get<GoldenRange>(cell.expected));
  }
  c.ok = c.deviation <= c.tolerance;
  return c;
}

}  // namespace

std::size_t TableArtifact::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const CellCheck& c) { return c.gating && !c.ok; }));
}

std::string describe(const BroadcastRange& range) {
  if (range.empty()) return "False";
  std::string out;
  for (const Interval& i : range.intervals) {
    if (!out.empty()) out += " U ";
    out += "(" + format_sig(i.lo, 6) + ", " + format_sig(i.hi, 6) + ")";
  }
  return out;
}

double range_deviation(const BroadcastRange& computed, const GoldenRange& golden) {
  if (!golden) {
    return computed.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  }
  if (computed.intervals.size() != 1) return std::numeric_limits<double>::infinity();
  const Interval& i = computed.intervals.front();
  return std::max(std::abs(i.lo - golden->lo), std::abs(i.hi - golden->hi));
}

TableArtifact build_table(TableId id) {
  const TableInfo& info = table_info(id);
  const GoldenTable& golden = golden_table(id);
  Layout layout = compute(id);

  TableArtifact art;
  art.id = id;
  art.name = info.name;
  art.title = info.title;
  art.columns = std::move(layout.columns);
  art.rows = std::move(layout.rows);

  for (const GoldenCell& cell : golden.cells) {
    const auto col = std::find(art.columns.begin(), art.columns.end(), cell.column);
    if (col == art.columns.end() || cell.row >= art.rows.size()) {
      throw std::logic_error("golden cell without a computed counterpart: " +
                             cell.column);
    }
    const auto& computed =
        art.rows[cell.row].cells[static_cast<std::size_t>(col - art.columns.begin())];
    if (!computed) throw std::logic_error("missing computed cell: " + cell.column);
    art.checks.push_back(check_cell(golden, cell, *computed));
  }

  if (id == TableId::kBellLocal) {
    // Informational: does each SI range coincide with the physical window?
    for (std::size_t r = 0; r < art.rows.size(); ++r) {
      const auto& silc = std::get<BroadcastRange>(*art.rows[r].cells[2]);
      const auto& window = std::get<BroadcastRange>(*art.rows[r].cells[4]);
      CellCheck c;
      c.row = r;
      c.column = "silc=window";
      c.printed = describe(window);
      c.computed = describe(silc);
      c.deviation = range_deviation(
          silc, window.empty() ? GoldenRange{} : GoldenRange{window.intervals.front()});
      c.tolerance = 1e-3;
      c.ok = c.deviation <= c.tolerance;
      c.gating = false;
      c.note = "SI range vs physical c3 window";
      art.checks.push_back(std::move(c));
    }
  }
  return art;
}

}  // namespace broadcastlab::report

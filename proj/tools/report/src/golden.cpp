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
#include "broadcastlab/report/golden.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>

namespace broadcastlab::report {

namespace {

constexpr std::array<TableInfo, 14> kTables{{
    {TableId::kStaticConstruction, "staticConstruction",
     "Static machine: optimal lambda and D_a vs alpha^2 (pure qubit)"},
    {TableId::kStaticPerformance, "staticPerformance",
     "Static machine fixed at alpha^2 = 0.1: D_a, D_ab vs alpha^2"},
    {TableId::kDynamicPerformance, "DynamicPerformance",
     "Dynamic machine: lambda, D_a, D_ab vs alpha^2"},
    {TableId::kCloningComparison, "cloningComparison",
     "Local vs non-local cloning: lambda and D_a for DSD and SI machines"},
    {TableId::kLocalNonmaximally, "localnonmaximally",
     "NME input, local static machines M1..M9: lambda and broadcasting range"},
    {TableId::kNonlocalNonmaximally, "nonlocalnonmaximally",
     "NME input, non-local static machines M1..M9: lambda and broadcasting range"},
    {TableId::kWernerP065, "SSDwenerp=0.65",
     "Werner-like input, p = 0.65: static machines vs k"},
    {TableId::kWernerP080, "SSDwenerp=0.80",
     "Werner-like input, p = 0.80: static machines vs k"},
    {TableId::kWernerP095, "SSDwenerp=0.95",
     "Werner-like input, p = 0.95: static machines vs k"},
    {TableId::kDsdWerner, "DSDwerner",
     "Werner-like input: p ranges for SI and dynamic machines vs alpha^2"},
    {TableId::kBellLocal, "bellLocal",
     "Bell-diagonal input, local SI and dynamic machines: c3 ranges"},
    {TableId::kBellLambdaNonlocal, "belllambdanonlocal",
     "Bell-diagonal input: optimal non-local lambda"},
    {TableId::kBellNonlocal, "bellNonlocal",
     "Bell-diagonal input, non-local static machines: c3 ranges"},
    {TableId::kBellDynamic, "bellDynamic",
     "Bell-diagonal input, non-local SI and dynamic machines: c3 ranges"},
}};

// Scalar tolerances.
constexpr double kStaticTol = 5e-4;
constexpr double kNmeRangeTol = 5e-4;
constexpr double kLambdaTol = 1e-4;
constexpr double kWernerRangeTol = 2e-3;
constexpr double kBellRangeTol = 1e-3;

struct Parsed {
  double value;
  int decimals;
};

// "0.0675" -> {0.0675, 4}; "-7/9" -> {-0.777..., -1}.
Parsed parse_printed(std::string_view text) {
  auto number = [&](std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::logic_error("bad golden literal: " + std::string(text));
    }
    return v;
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return {number(text.substr(0, slash)) / number(text.substr(slash + 1)), -1};
  }
  const auto dot = text.find('.');
  const int decimals =
      dot == std::string_view::npos ? 0 : static_cast<int>(text.size() - dot - 1);
  return {number(text), decimals};
}

struct Span {
  const char* lo = nullptr;  // nullptr: printed "False"
  const char* hi = nullptr;
};
constexpr Span kFalse{};

template <typename T>
const T& mirrored(const std::array<T, 5>& half, std::size_t row) {
  return half[row < 5 ? row : 8 - row];
}

class Builder {
 public:
  Builder(TableId id, bool compare_rounded, std::vector<std::string> labels) {
    table_.id = id;
    table_.compare_rounded = compare_rounded;
    table_.row_labels = std::move(labels);
  }

  GoldenCell& scalar(std::size_t row, std::string column, std::string_view printed,
                     double tol) {
    const Parsed p = parse_printed(printed);
    GoldenCell c;
    c.row = row;
    c.column = std::move(column);
    c.printed = printed;
    c.expected = p.value;
    c.decimals = p.decimals;
    c.tolerance = tol;
    return push(std::move(c));
  }

  GoldenCell& range(std::size_t row, std::string column, Span s, double tol) {
    GoldenCell c;
    c.row = row;
    c.column = std::move(column);
    c.tolerance = tol;
    if (s.lo == nullptr) {
      c.printed = "False";
      c.expected = GoldenRange{};
    } else {
      c.printed = std::string("(") + s.lo + ", " + s.hi + ")";
      c.expected = GoldenRange{Interval{parse_printed(s.lo).value,
                                        parse_printed(s.hi).value}};
    }
    return push(std::move(c));
  }

  void scalar_column(const std::string& column, const std::array<const char*, 5>& half,
                     double tol) {
    for (std::size_t r = 0; r < 9; ++r) scalar(r, column, mirrored(half, r), tol);
  }
  void scalar_constant(const std::string& column, const char* printed, double tol) {
    for (std::size_t r = 0; r < 9; ++r) scalar(r, column, printed, tol);
  }
  void range_column(const std::string& column, const std::array<Span, 5>& half,
                    double tol) {
    for (std::size_t r = 0; r < 9; ++r) range(r, column, mirrored(half, r), tol);
  }
  void range_constant(const std::string& column, Span s, double tol) {
    for (std::size_t r = 0; r < 9; ++r) range(r, column, s, tol);
  }

  GoldenTable take() { return std::move(table_); }

 private:
  GoldenCell& push(GoldenCell c) {
    table_.cells.push_back(std::move(c));
    return table_.cells.back();
  }

  GoldenTable table_;
};

std::vector<std::string> grid_labels() {
  return {"0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9"};
}

std::vector<std::string> machine_labels() {
  return {"M1", "M2", "M3", "M4", "M5", "M6", "M7", "M8", "M9"};
}

constexpr std::array<const char*, 5> kPureLambda{"0.0675", "0.12", "0.1575", "0.18",
                                                 "0.1875"};
constexpr std::array<const char*, 5> kPureDa{"0.0091", "0.0288", "0.0496", "0.0648",
                                             "0.0703"};
constexpr std::array<const char*, 5> kNmeNonlocalLambda{"0.0480", "0.0844", "0.1099",
                                                        "0.125", "0.13"};

GoldenTable static_construction() {
  Builder b(TableId::kStaticConstruction, true, grid_labels());
  b.scalar_column("lambda", kPureLambda, kStaticTol);
  b.scalar_column("d_a", kPureDa, kStaticTol);
  return b.take();
}

GoldenTable static_performance() {
  Builder b(TableId::kStaticPerformance, true, grid_labels());
  b.scalar_constant("lambda", "0.0675", kStaticTol);
  b.scalar_constant("d_a", "0.0091", kStaticTol);
  b.scalar_column("d_ab", {"0.1436", "0.2269", "0.2864", "0.3221", "0.3340"},
                  kStaticTol);
  return b.take();
}

GoldenTable dynamic_performance() {
  Builder b(TableId::kDynamicPerformance, true, grid_labels());
  b.scalar_column("lambda", kPureLambda, kStaticTol);
  b.scalar_column("d_a", kPureDa, kStaticTol);
  b.scalar_column("d_ab", {"0.1436", "0.2048", "0.2216", "0.2208", "0.2188"},
                  kStaticTol);
  return b.take();
}

GoldenTable cloning_comparison() {
  Builder b(TableId::kCloningComparison, true, grid_labels());
  b.scalar_column("lambda_dsdlc", kPureLambda, kStaticTol);
  b.scalar_column("d_a_dsdlc", kPureDa, kStaticTol);
  b.scalar_constant("d_a_sil", "0.0556", kStaticTol);
  b.scalar_column("lambda_dsdnlc", kNmeNonlocalLambda, kStaticTol);
  b.scalar_column("d_a_dsdnlc", {"0.0276", "0.0855", "0.1449", "0.1875", "0.2028"},
                  kStaticTol);
  b.scalar_constant("d_a_sinl", "0.12", kStaticTol);
  return b.take();
}

GoldenTable local_nonmaximally() {
  Builder b(TableId::kLocalNonmaximally, false, machine_labels());
  b.scalar_column("lambda", {"0.0494", "0.0952", "0.1329", "0.1578", "0.1666"},
                  kLambdaTol);
  b.range_column("ssdlc",
                 {{{"0.0034", "0.9966"},
                   {"0.0176", "0.9824"},
                   {"0.0480", "0.9520"},
                   {"0.0885", "0.9120"},
                   {"0.1097", "0.8903"}}},
                 kNmeRangeTol);
  b.range_constant("silc", {"0.1097", "0.8903"}, kNmeRangeTol);
  return b.take();
}

GoldenTable nonlocal_nonmaximally() {
  Builder b(TableId::kNonlocalNonmaximally, false, machine_labels());
  b.scalar_column("lambda", kNmeNonlocalLambda, kLambdaTol);
  b.range_column("ssdnlc",
                 {{{"0.0035", "0.9965"},
                   {"0.0165", "0.9835"},
                   {"0.0401", "0.9599"},
                   {"0.0670", "0.9330"},
                   {"0.0797", "0.9203"}}},
                 kNmeRangeTol);
  b.range_constant("sinlc", {"0.0286", "0.9714"}, kNmeRangeTol);
  return b.take();
}

struct WernerColumns {
  std::array<const char*, 5> lambda_lc;
  std::array<Span, 5> ssdlc;
  std::array<const char*, 5> lambda_nlc;
  std::array<Span, 5> ssdnlc;
};

GoldenTable werner(TableId id, const WernerColumns& w) {
  Builder b(id, false, grid_labels());
  b.scalar_column("lambda_lc", w.lambda_lc, kLambdaTol);
  b.range_column("ssdlc", w.ssdlc, kWernerRangeTol);
  b.scalar_column("lambda_nlc", w.lambda_nlc, kLambdaTol);
  b.range_column("ssdnlc", w.ssdnlc, kWernerRangeTol);
  return b.take();
}

GoldenTable werner_p065() {
  return werner(TableId::kWernerP065,
                {{"0.1115", "0.1344", "0.1519", "0.1629", "0.1666"},
                 {{{"0.183", "0.816"}, {"0.32", "0.67"}, kFalse, kFalse, kFalse}},
                 {"0.0744", "0.0968", "0.1125", "0.1218", "0.1249"},
                 {{{"0.098", "0.90"}, {"0.172", "0.827"}, {"0.281", "0.718"}, kFalse,
                   kFalse}}});
}

GoldenTable werner_p080() {
  return werner(TableId::kWernerP080,
                {{"0.0865", "0.1191", "0.1446", "0.1610", "0.1666"},
                 {{{"0.044", "0.955"},
                   {"0.09", "0.908"},
                   {"0.163", "0.837"},
                   {"0.244", "0.755"},
                   {"0.288", "0.711"}}},
                 {"0.0633", "0.0920", "0.1122", "0.1242", "0.1282"},
                 {{{"0.029", "0.97"},
                   {"0.064", "0.93"},
                   {"0.113", "0.886"},
                   {"0.165", "0.83"},
                   {"0.189", "0.81"}}}});
}

GoldenTable werner_p095() {
  GoldenTable t = werner(TableId::kWernerP095,
                         {{"0.0590", "0.1015", "0.1360", "0.1587", "0.6666"},
                          {{{"0.007", "0.992"},
                            {"0.027", "0.972"},
                            {"0.065", "0.934"},
                            {"0.111", "0.888"},
                            {"0.135", "0.864"}}},
                          {"0.0518", "0.0864", "0.1106", "0.1250", "0.1297"},
                          {{{"0.006", "0.994"},
                            {"0.023", "0.97"},
                            {"0.050", "0.94"},
                            {"0.083", "0.916"},
                            {"0.097", "0.090"}}}});
  for (GoldenCell& c : t.cells) {
    if (c.row == 4 && c.column == "lambda_lc") {
      c.expected = 0.1666;
      c.waiver =
          "printed 0.6666 lies outside the local lambda domain [0, 1/2]; "
          "checked as 0.1666";
    }
    if (c.row == 4 && c.column == "ssdnlc") {
      c.note = "printed upper bound is below its lower bound";
    }
  }
  return t;
}

GoldenTable dsd_werner() {
  Builder b(TableId::kDsdWerner, false, grid_labels());
  b.range_column("silc",
                 {{kFalse, {"0.865", "1"}, {"0.794", "1"}, {"0.760", "1"},
                   {"0.75", "1"}}},
                 kWernerRangeTol);
  b.range_column("dsdlc",
                 {{{"0.71", "1"}, {"0.70", "1"}, {"0.71", "1"}, {"0.73", "1"},
                   {"0.75", "1"}}},
                 kWernerRangeTol);
  b.range_column("sinlc",
                 {{{"0.75", "1"}, {"0.64", "1"}, {"0.58", "1"}, {"0.56", "1"},
                   {"0.55", "1"}}},
                 kWernerRangeTol);
  b.range_column("dsdnlc",
                 {{{"0.64", "1"}, {"0.62", "1"}, {"0.64", "1"}, {"0.66", "1"},
                   {"0.67", "1"}}},
                 kWernerRangeTol);
  return b.take();
}

GoldenTable bell_local() {
  Builder b(TableId::kBellLocal, false,
            {"(-7/8,-7/8)", "(-3/4,-3/4)", "(-7/8,-3/4)", "(-3/4,-7/8)"});
  const std::array<Span, 4> ranges{{{"-1", "-3/4"},
                                    {"-1", "-3/4"},
                                    {"-7/8", "-5/8"},
                                    {"-7/8", "-5/8"}}};
  for (std::size_t r = 0; r < ranges.size(); ++r) {
    b.range(r, "silc", ranges[r], kBellRangeTol);
    b.range(r, "dsdlc", ranges[r], kBellRangeTol);
  }
  return b.take();
}

GoldenTable bell_lambda_nonlocal() {
  Builder b(TableId::kBellLambdaNonlocal, false,
            {"(-7/9,-7/9,-7/9)", "(-7/9,-7/9,-5/9)", "(-7/9,-5/9,-7/9)",
             "(-7/9,-5/9,-5/9)", "(-5/9,-7/9,-7/9)", "(-5/9,-7/9,-5/9)",
             "(-5/9,-5/9,-7/9)", "(-5/9,-5/9,-5/9)"});
  const std::array<const char*, 8> lambdas{"0.1278", "0.1391", "0.1210", "0.1319",
                                           "0.1210", "0.1319", "0.1116", "0.1219"};
  for (std::size_t r = 0; r < lambdas.size(); ++r) {
    b.scalar(r, "lambda", lambdas[r], kLambdaTol);
  }
  return b.take();
}

GoldenTable bell_nonlocal() {
  Builder b(TableId::kBellNonlocal, false,
            {"(-7/9,-7/9) l=0.1278", "(-7/9,-7/9) l=0.1391", "(-7/9,-5/9) l=0.1210",
             "(-7/9,-5/9) l=0.1319", "(-5/9,-7/9) l=0.1210", "(-5/9,-7/9) l=0.1319",
             "(-5/9,-5/9) l=0.1116", "(-5/9,-5/9) l=0.1219"});
  const std::array<Span, 8> ranges{{{"-1", "-5/9"},
                                    {"-1", "-0.698728"},
                                    {"-7/9", "-0.604651"},
                                    kFalse,
                                    {"-7/9", "-0.604651"},
                                    kFalse,
                                    {"-1", "-0.695247"},
                                    {"-1", "-0.840489"}}};
  for (std::size_t r = 0; r < ranges.size(); ++r) {
    b.range(r, "ssdnlc", ranges[r], kBellRangeTol);
  }
  return b.take();
}

GoldenTable bell_dynamic() {
  Builder b(TableId::kBellDynamic, false,
            {"(-7/9,-7/9)", "(-5/9,-5/9)", "(-7/9,-5/9)", "(-5/9,-7/9)",
             "(-2/5,-2/5)", "(-1/3,-1/3)"});
  const std::array<Span, 6> si{{{"-1", "-5/9"},
                                {"-1", "-5/9"},
                                {"-7/9", "-1/3"},
                                {"-7/9", "-1/3"},
                                {"-1", "-0.86"},
                                kFalse}};
  const std::array<Span, 6> dynamic{{{"-1", "-0.62809"},
                                     {"-1", "-0.72682"},
                                     {"-0.77777", "-0.68061"},
                                     {"-0.77777", "-0.68061"},
                                     {"-1", "-0.839078"},
                                     {"-1", "-0.902749"}}};
  for (std::size_t r = 0; r < si.size(); ++r) {
    b.range(r, "sinlc", si[r], kBellRangeTol).gating = false;
    b.range(r, "dsdnlc", dynamic[r], kBellRangeTol);
  }
  return b.take();
}

std::map<TableId, GoldenTable> build_registry() {
  std::map<TableId, GoldenTable> reg;
  for (GoldenTable t :
       {static_construction(), static_performance(), dynamic_performance(),
        cloning_comparison(), local_nonmaximally(), nonlocal_nonmaximally(),
        werner_p065(), werner_p080(), werner_p095(), dsd_werner(), bell_local(),
        bell_lambda_nonlocal(), bell_nonlocal(), bell_dynamic()}) {
    const TableId id = t.id;
    reg.emplace(id, std::move(t));
  }
  return reg;
}

}  // namespace

std::span<const TableInfo> all_tables() { return kTables; }

const TableInfo& table_info(TableId id) {
  return kTables.at(static_cast<std::size_t>(id) - 1);
}

std::optional<TableId> parse_table_id(std::string_view text) {
  int number = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), number);
  if (ec == std::errc{} && ptr == text.data() + text.size()) {
    if (number >= 1 && number <= static_cast<int>(kTables.size())) {
      return static_cast<TableId>(number);
    }
    return std::nullopt;
  }
  auto iequal = [](std::string_view a, std::string_view b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
      return std::tolower(static_cast<unsigned char>(x)) ==
             std::tolower(static_cast<unsigned char>(y));
    });
  };
  for (const TableInfo& t : kTables) {
    if (iequal(t.name, text)) return t.id;
  }
  return std::nullopt;
}

const GoldenTable& golden_table(TableId id) {
  static const std::map<TableId, GoldenTable> registry = build_registry();
  return registry.at(id);
}

}  // namespace broadcastlab::report

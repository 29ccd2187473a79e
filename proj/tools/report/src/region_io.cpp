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
#include "broadcastlab/report/region_io.hpp"

#include <charconv>
#include <future>
#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"

#include "broadcastlab/distortion.hpp"
#include "broadcastlab/report/format.hpp"
#include "broadcastlab/tolerances.hpp"

namespace broadcastlab::report {

namespace {

constexpr int kCsvDigits = 6;
constexpr int kJsonDigits = 12;

double parse_number(std::string_view text, std::string_view token) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParameterError("bad number in cloner token: " + std::string(token));
  }
  return v;
}

std::string csv_num(double v) { return format_sig(v, kCsvDigits); }
std::string json_num(double v) { return format_sig(v, kJsonDigits); }

}  // namespace

NamedCloner parse_cloner(std::string_view token) {
  const std::string name(token);
  if (token == "silc") return {name, {CloningMode::kLocal, StateIndependent{}}};
  if (token == "sinlc") return {name, {CloningMode::kNonlocal, StateIndependent{}}};
  if (token == "dsdlc") return {name, {CloningMode::kLocal, DynamicStateDependent{}}};
  if (token == "dsdnlc") {
    return {name, {CloningMode::kNonlocal, DynamicStateDependent{}}};
  }
  auto suffix = [&](std::string_view prefix) -> std::optional<double> {
    if (token.substr(0, prefix.size()) != prefix) return std::nullopt;
    return parse_number(token.substr(prefix.size()), token);
  };
  if (auto k = suffix("ssdlc@")) {
    return {name, {CloningMode::kLocal, PreparedStateDependent{*k}}};
  }
  if (auto k = suffix("ssdnlc@")) {
    return {name, {CloningMode::kNonlocal, PreparedStateDependent{*k}}};
  }
  if (auto l = suffix("lc=")) {
    return {name, {CloningMode::kLocal, StaticStateDependent{*l}}};
  }
  if (auto l = suffix("nlc=")) {
    return {name, {CloningMode::kNonlocal, StaticStateDependent{*l}}};
  }
  throw ParameterError("unknown cloner: " + name);
}

std::vector<NamedCloner> parse_cloner_list(std::string_view list) {
  std::vector<NamedCloner> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view token = list.substr(0, comma);
    if (token.empty()) throw ParameterError("empty cloner token");
    out.push_back(parse_cloner(token));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
    if (list.empty()) throw ParameterError("empty cloner token");
  }
  if (out.empty()) throw ParameterError("no cloners given");
  return out;
}

std::vector<NamedCloner> default_cloners() {
  return parse_cloner_list("silc,dsdlc,sinlc,dsdnlc");
}

void write_region_csv(std::ostream& out, const RegionGrid& grid) {
  std::string header;
  for (const auto& axis : grid.axes) header += axis.name + ",";
  header += "input_physical,input_entangled";
  for (const auto& name : grid.cloner_names) header += "," + name;
  out << header << '\n';

  std::vector<std::size_t> idx(grid.axes.size(), 0);
  for (const RegionRecord& rec : grid.records) {
    std::string line;
    for (std::size_t a = 0; a < grid.axes.size(); ++a) {
      line += csv_num(grid.axes[a].values[idx[a]]) + ",";
    }
    line += rec.input_physical ? "1," : "0,";
    line += rec.input_entangled ? "1" : "0";
    for (std::uint8_t b : rec.broadcastable) line += b ? ",1" : ",0";
    out << line << '\n';
    // Advance the row-major index, last axis fastest.
    for (std::size_t a = grid.axes.size(); a-- > 0;) {
      if (++idx[a] < grid.axes[a].values.size()) break;
      idx[a] = 0;
    }
  }
}

void write_region_json(std::ostream& out, const RegionGrid& grid) {
  nlohmann::ordered_json j;
  j["axes"] = nlohmann::ordered_json::array();
  for (const auto& axis : grid.axes) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (double v : axis.values) values.push_back(json_num(v));
    j["axes"].push_back({{"name", axis.name}, {"values", values}});
  }
  j["cloners"] = grid.cloner_names;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const RegionRecord& rec : grid.records) {
    std::vector<int> flags(rec.broadcastable.begin(), rec.broadcastable.end());
    records.push_back({{"input_physical", rec.input_physical ? 1 : 0},
                       {"input_entangled", rec.input_entangled ? 1 : 0},
                       {"broadcastable", flags}});
  }
  j["records"] = std::move(records);
  out << j.dump(2) << '\n';
}

double range_width(const BroadcastRange& range) {
  double w = 0.0;
  for (const Interval& i : range.intervals) w += i.hi - i.lo;
  return w;
}

Fig2Data fig2_data(const Fig2Options& options) {
  if (options.points < 1 || !(options.k_lo > 0.0) || !(options.k_hi < 1.0) ||
      options.k_hi < options.k_lo) {
    throw ParameterError("fig2 needs >= 1 point and 0 < k_lo <= k_hi < 1");
  }
  const ParamCurve nme = [](double a) -> FamilyParams { return NmeParams{a}; };
  const Interval unit{0.0, 1.0};
  auto width = [&](CloningMode mode, const ClonerFlavor& flavor) {
    return range_width(scan_range_1d(nme, {mode, flavor}, unit, options.scan));
  };

  Fig2Data data;
  auto r_silc = std::async(std::launch::async, width, CloningMode::kLocal,
                           ClonerFlavor{StateIndependent{}});
  auto r_sinlc = std::async(std::launch::async, width, CloningMode::kNonlocal,
                            ClonerFlavor{StateIndependent{}});
  auto r_dsdlc = std::async(std::launch::async, width, CloningMode::kLocal,
                            ClonerFlavor{DynamicStateDependent{}});
  auto r_dsdnlc = std::async(std::launch::async, width, CloningMode::kNonlocal,
                             ClonerFlavor{DynamicStateDependent{}});

  std::vector<std::future<Fig2Row>> jobs;
  for (std::size_t n = 0; n < options.points; ++n) {
    const double k =
        options.points == 1
            ? options.k_lo
            : options.k_lo + (options.k_hi - options.k_lo) * static_cast<double>(n) /
                                 static_cast<double>(options.points - 1);
    jobs.push_back(std::async(std::launch::async, [&, k] {
      Fig2Row row;
      row.k = k;
      row.lambda_lc = optimal_lambda(RuleFamily::kNmeLocal, NmeParams{k});
      row.lambda_nlc = optimal_lambda(RuleFamily::kNmeNonlocal, NmeParams{k});
      row.r_ssdlc = width(CloningMode::kLocal, StaticStateDependent{row.lambda_lc});
      row.r_ssdnlc = width(CloningMode::kNonlocal, StaticStateDependent{row.lambda_nlc});
      return row;
    }));
  }
  for (auto& j : jobs) data.rows.push_back(j.get());
  data.r_silc = r_silc.get();
  data.r_sinlc = r_sinlc.get();
  data.r_dsdlc = r_dsdlc.get();
  data.r_dsdnlc = r_dsdnlc.get();
  return data;
}

void write_fig2_csv(std::ostream& out, const Fig2Data& data) {
  out << "k,lambda_lc,lambda_nlc,r_ssdlc,r_ssdnlc,r_silc,r_sinlc,r_dsdlc,r_dsdnlc\n";
  for (const Fig2Row& r : data.rows) {
    out << csv_num(r.k) << ',' << csv_num(r.lambda_lc) << ',' << csv_num(r.lambda_nlc)
        << ',' << csv_num(r.r_ssdlc) << ',' << csv_num(r.r_ssdnlc) << ','
        << csv_num(data.r_silc) << ',' << csv_num(data.r_sinlc) << ','
        << csv_num(data.r_dsdlc) << ',' << csv_num(data.r_dsdnlc) << '\n';
  }
}

void write_fig2_json(std::ostream& out, const Fig2Data& data) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Fig2Row& r : data.rows) {
    rows.push_back({{"k", json_num(r.k)},
                    {"lambda_lc", json_num(r.lambda_lc)},
                    {"lambda_nlc", json_num(r.lambda_nlc)},
                    {"r_ssdlc", json_num(r.r_ssdlc)},
                    {"r_ssdnlc", json_num(r.r_ssdnlc)}});
  }
  j["rows"] = std::move(rows);
  j["r_silc"] = json_num(data.r_silc);
  j["r_sinlc"] = json_num(data.r_sinlc);
  j["r_dsdlc"] = json_num(data.r_dsdlc);
  j["r_dsdnlc"] = json_num(data.r_dsdnlc);
  out << j.dump(2) << '\n';
}

}  // namespace broadcastlab::report

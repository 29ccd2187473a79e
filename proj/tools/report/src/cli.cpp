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
#include "broadcastlab/report/cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "broadcastlab/report/commands.hpp"
#include "broadcastlab/report/region_io.hpp"
#include "broadcastlab/report/tables.hpp"
#include "broadcastlab/tolerances.hpp"

namespace broadcastlab::report {

namespace {

// Bad user input that CLI11 cannot see (missing family parameters etc).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr double kOptimizeGap = 1e-5;

struct FamilyArgs {
  std::string family;
  std::optional<double> alpha2, p, c1, c2, c3;

  void attach(CLI::App& cmd) {
    cmd.add_option("--alpha2", alpha2, "alpha^2 of the pure, NME or Werner input");
    cmd.add_option("--p", p, "Werner mixing weight");
    cmd.add_option("--c1", c1, "Bell-diagonal correlation c1");
    cmd.add_option("--c2", c2, "Bell-diagonal correlation c2");
    cmd.add_option("--c3", c3, "Bell-diagonal correlation c3");
  }

  FamilyParams params() const {
    auto need = [&](const std::optional<double>& v, const char* flag) {
      if (!v) throw UsageError(family + " needs " + flag);
      return *v;
    };
    if (family == "pure") return PureQubitParams{need(alpha2, "--alpha2")};
    if (family == "nme") return NmeParams{need(alpha2, "--alpha2")};
    if (family == "werner") {
      return WernerParams{need(alpha2, "--alpha2"), need(p, "--p")};
    }
    return BdsParams{need(c1, "--c1"), need(c2, "--c2"), need(c3, "--c3")};
  }
};

CloningMode parse_mode(const std::string& s) {
  return s == "nonlocal" ? CloningMode::kNonlocal : CloningMode::kLocal;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  return OutputFormat::kText;
}

std::vector<std::size_t> parse_resolution(const std::string& text, std::size_t axes) {
  std::vector<std::size_t> res;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw UsageError("bad --res value: " + text);
    }
    res.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (res.size() == 1) res.assign(axes, res.front());
  if (res.size() != axes) {
    throw UsageError("--res needs 1 or " + std::to_string(axes) + " values");
  }
  return res;
}

// Writes to --out when given, else to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
  if (!file.flush()) throw UsageError("cannot write " + path);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Buzek-Hillery cloning and entanglement-broadcasting toolkit",
               "broadcastlab"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "csv", "json"};

  // table
  std::string table_id;
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "Regenerate one table and check it");
  table->add_option("id", table_id, "Table name or number 1-14")->required();
  table->add_option("--format", table_format)->check(CLI::IsMember(formats));

  // region
  std::string region_family;
  std::string cloner_list;
  std::string res_text;
  std::string region_out;
  std::string region_format = "csv";
  unsigned threads = 0;
  std::size_t fig2_points = 9;
  auto* region = app.add_subcommand("region", "Classify a parameter grid");
  region->add_option("family", region_family)
      ->required()
      ->check(CLI::IsMember({"werner", "bds", "fig2"}));
  region->add_option("--cloners", cloner_list,
                     "silc,sinlc,dsdlc,dsdnlc,ssdlc@k,ssdnlc@k,lc=x,nlc=x");
  region->add_option("--res", res_text, "n or n,n[,n]; default 201 (2D), 61 (3D)");
  region->add_option("--out", region_out, "Output path (default stdout)");
  region->add_option("--format", region_format)
      ->check(CLI::IsMember({"csv", "json"}));
  region->add_option("--threads", threads, "Worker count, 0 = all cores");
  region->add_option("--points", fig2_points, "fig2: number of k values")
      ->check(CLI::PositiveNumber);

  // clone
  FamilyArgs clone_args;
  std::string clone_mode = "local";
  std::string flavor = "dsd";
  std::optional<double> lambda;
  std::optional<double> prepared_k;
  auto* clone = app.add_subcommand("clone", "Clone one input and report everything");
  clone->add_option("family", clone_args.family)
      ->required()
      ->check(CLI::IsMember({"nme", "werner", "bds"}));
  clone_args.attach(*clone);
  clone->add_option("--mode", clone_mode)->check(CLI::IsMember({"local", "nonlocal"}));
  clone->add_option("--flavor", flavor)->check(CLI::IsMember({"si", "ssd", "dsd"}));
  clone->add_option("--lambda", lambda, "Static machine parameter (ssd)");
  clone->add_option("--k", prepared_k, "Preparation alpha^2 of a static machine (ssd)");

  // optimize
  FamilyArgs opt_args;
  std::string opt_mode = "local";
  auto* optimize_cmd =
      app.add_subcommand("optimize", "Closed-form vs numeric optimal lambda");
  optimize_cmd->add_option("family", opt_args.family)
      ->required()
      ->check(CLI::IsMember({"pure", "nme", "werner", "bds"}));
  opt_args.attach(*optimize_cmd);
  optimize_cmd->add_option("--mode", opt_mode)
      ->check(CLI::IsMember({"local", "nonlocal"}));

  // verify
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Run every golden table");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*table) {
      const auto id = parse_table_id(table_id);
      if (!id) throw UsageError("unknown table id: " + table_id);
      const TableArtifact art = build_table(*id);
      out << render_table(art, parse_format(table_format));
      return art.passed() ? kExitOk : kExitTolerance;
    }

    if (*region) {
      std::ostringstream text;
      if (region_family == "fig2") {
        Fig2Options opts;
        opts.points = fig2_points;
        const Fig2Data data = fig2_data(opts);
        region_format == "json" ? write_fig2_json(text, data) : write_fig2_csv(text, data);
      } else {
        const RegionFamily fam =
            region_family == "werner" ? RegionFamily::kWerner : RegionFamily::kBds;
        const std::size_t axes = fam == RegionFamily::kWerner ? 2 : 3;
        const auto res = parse_resolution(
            res_text.empty() ? (axes == 2 ? "201" : "61") : res_text, axes);
        const auto cloners =
            cloner_list.empty() ? default_cloners() : parse_cloner_list(cloner_list);
        const RegionGrid grid = scan_region(fam, cloners, res, threads);
        region_format == "json" ? write_region_json(text, grid)
                                : write_region_csv(text, grid);
      }
      emit(region_out, text.str(), out);
      return kExitOk;
    }

    if (*clone) {
      ClonerConfig config{parse_mode(clone_mode), DynamicStateDependent{}};
      if (flavor == "si") {
        config.flavor = StateIndependent{};
      } else if (flavor == "ssd") {
        if (lambda.has_value() == prepared_k.has_value()) {
          throw UsageError("ssd needs exactly one of --lambda, --k");
        }
        if (lambda) {
          config.flavor = StaticStateDependent{*lambda};
        } else {
          config.flavor = PreparedStateDependent{*prepared_k};
        }
      }
      if (flavor != "ssd" && (lambda || prepared_k)) {
        throw UsageError("--lambda and --k need --flavor ssd");
      }
      out << clone_report_json(clone_args.params(), config);
      return kExitOk;
    }

    if (*optimize_cmd) {
      const FamilyParams params = opt_args.params();
      const CloningMode mode = parse_mode(opt_mode);
      const OptimizeResult r = optimize(params, mode);
      out << optimize_json(params, mode, r);
      return r.gap > kOptimizeGap ? kExitTolerance : kExitOk;
    }

    if (*verify) {
      bool all = true;
      std::ostringstream json_rows;
      std::string sep;
      if (verify_format == "json") json_rows << "[\n";
      for (const TableInfo& info : all_tables()) {
        const auto t0 = std::chrono::steady_clock::now();
        const TableArtifact art = build_table(info.id);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && art.passed();
        if (verify_format == "json") {
          json_rows << sep << "  {\"table\": " << static_cast<int>(info.id)
                    << ", \"name\": \"" << info.name << "\", \"checks\": "
                    << art.checks.size() << ", \"failed\": " << art.failures()
                    << ", \"passed\": " << (art.passed() ? "true" : "false") << "}";
          sep = ",\n";
        } else {
          char line[160];
          std::snprintf(line, sizeof line, "%-4s %2d %-22s %3zu checks %3zu failed  %.2fs\n",
                        art.passed() ? "PASS" : "FAIL", static_cast<int>(info.id),
                        std::string(info.name).c_str(), art.checks.size(),
                        art.failures(), secs);
          out << line;
        }
      }
      if (verify_format == "json") {
        out << json_rows.str() << "\n]\n";
      } else {
        out << (all ? "all tables within tolerance\n" : "some tables out of tolerance\n");
      }
      return all ? kExitOk : kExitTolerance;
    }
  } catch (const std::invalid_argument& e) {
    // UsageError, ParameterError, DimensionError.
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const UnphysicalStateError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInvalid;
}

}  // namespace broadcastlab::report

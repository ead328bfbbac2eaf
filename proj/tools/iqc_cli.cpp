// Copyright 2026 The iqc Authors
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

// Command-line front end. Talks to the library only through iqc.h.
//
// Exit codes: 0 success, 1 infeasible verdict with --fail-on-infeasible,
// 2 usage error, 3 data error.

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "iqc/iqc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct CliFailure {
  int code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& msg) { throw CliFailure{kExitUsage, msg}; }

void check(iqc_status st, int exit_code) {
  if (st != IQC_OK) throw CliFailure{exit_code, iqc_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { iqc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ScenarioDeleter {
  void operator()(iqc_scenario* s) const { iqc_scenario_free(s); }
};
struct ReportDeleter {
  void operator()(iqc_report* r) const { iqc_report_free(r); }
};

double parse_flag(const std::string& flag, const std::string& text, iqc_dimension expected) {
  double value = 0.0;
  iqc_dimension dim = IQC_DIM_DIMENSIONLESS;
  if (iqc_parse_quantity(text.c_str(), &value, &dim) != IQC_OK)
    usage_error(flag + ": " + iqc_last_error());
  if (dim != expected) usage_error(flag + ": wrong dimension in '" + text + "'");
  return value;
}

std::string format(double si, iqc_dimension dim, const std::string& unit, int digits) {
  char* raw = nullptr;
  if (iqc_format_quantity(si, dim, unit.c_str(), digits, &raw) != IQC_OK)
    usage_error(std::string("--unit: ") + iqc_last_error());
  return OwnedString(raw).get();
}

std::unique_ptr<iqc_scenario, ScenarioDeleter> load_scenario(const std::string& path) {
  iqc_scenario* raw = nullptr;
  check(iqc_scenario_load(path.c_str(), &raw), kExitData);
  return std::unique_ptr<iqc_scenario, ScenarioDeleter>(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasibility analysis for interstellar quantum communication links"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(iqc_version()));

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Evaluate a scenario file");
  std::string analyze_scenario;
  std::string analyze_format = "text";
  bool per_mechanism = false;
  bool fail_on_infeasible = false;
  analyze->add_option("--scenario", analyze_scenario, "Scenario JSON file")->required();
  analyze->add_option("--format", analyze_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze->add_flag("--per-mechanism", per_mechanism,
                    "Gate each erasure mechanism separately instead of the combined budget");
  analyze->add_flag("--fail-on-infeasible", fail_on_infeasible,
                    "Exit with status 1 when the verdict is infeasible");

  // min-diameter
  auto* mind = app.add_subcommand("min-diameter", "Minimum geometric-mean telescope diameter");
  std::string md_wavelength, md_distance, md_d1, md_unit = "km", md_format = "text";
  int md_digits = 3;
  mind->add_option("--wavelength", md_wavelength, "e.g. \"300 nm\"")->required();
  mind->add_option("--distance", md_distance, "e.g. \"1 pc\"")->required();
  mind->add_option("--d1", md_d1, "Sender diameter; also report the required receiver diameter");
  mind->add_option("--unit", md_unit, "Output length unit");
  mind->add_option("--digits", md_digits, "Significant digits (0 = full precision)")
      ->check(CLI::Range(0, 17));
  mind->add_option("--format", md_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // max-wavelength
  auto* maxw = app.add_subcommand("max-wavelength", "Longest wavelength allowed by the CMB");
  std::string mw_mode = "q", mw_temperature = "2.726 K", mw_unit = "cm", mw_format = "text";
  int mw_digits = 3;
  bool mw_planck = false;
  maxw->add_option("--mode", mw_mode, "q (forward) or q2 (two-way assisted)")
      ->check(CLI::IsMember({"q", "q2"}));
  maxw->add_option("--temperature", mw_temperature, "Background temperature");
  maxw->add_option("--unit", mw_unit, "Output length unit");
  maxw->add_option("--digits", mw_digits, "Significant digits (0 = full precision)")
      ->check(CLI::Range(0, 17));
  maxw->add_flag("--planck", mw_planck, "Use the full Planck spectrum instead of Rayleigh-Jeans");
  maxw->add_option("--format", mw_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // relay-plan
  auto* relay = app.add_subcommand("relay-plan", "Relay spacing, count and per-element diameters");
  std::string rp_wavelength, rp_distance, rp_diameter, rp_mode = "exact";
  relay->add_option("--wavelength", rp_wavelength)->required();
  relay->add_option("--distance", rp_distance)->required();
  relay->add_option("--diameter", rp_diameter, "Relay element diameter");
  relay->add_option("--relay-mode", rp_mode, "exact or order_of_magnitude")
      ->check(CLI::IsMember({"exact", "order_of_magnitude"}));

  // scan
  auto* scan = app.add_subcommand("scan", "Wavelength scan of a scenario as CSV");
  std::string sc_scenario, sc_from = "100 nm", sc_to = "1 m";
  std::size_t sc_points = 100;
  bool sc_linear = false;
  unsigned sc_threads = 0;
  scan->add_option("--scenario", sc_scenario)->required();
  scan->add_option("--from", sc_from, "Shortest wavelength");
  scan->add_option("--to", sc_to, "Longest wavelength");
  scan->add_option("--points", sc_points)->check(CLI::PositiveNumber);
  scan->add_flag("--linear", sc_linear, "Linear instead of logarithmic spacing");
  scan->add_option("--threads", sc_threads, "Worker threads (0 = all cores)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo cross-check of a scenario");
  std::string sim_scenario;
  std::uint64_t sim_photons = 1000000;
  std::uint64_t sim_seed = 1;
  unsigned sim_threads = 0;
  sim->add_option("--scenario", sim_scenario)->required();
  sim->add_option("--photons", sim_photons)->check(CLI::PositiveNumber);
  sim->add_option("--seed", sim_seed);
  sim->add_option("--threads", sim_threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) {
      auto scenario = load_scenario(analyze_scenario);
      if (per_mechanism) check(iqc_scenario_set_policy(scenario.get(), IQC_POLICY_PER_MECHANISM), kExitUsage);
      iqc_report* raw = nullptr;
      check(iqc_evaluate(scenario.get(), &raw), kExitData);
      std::unique_ptr<iqc_report, ReportDeleter> report(raw);
      char* text = nullptr;
      check(iqc_report_render(report.get(), analyze_format == "json" ? IQC_FORMAT_JSON : IQC_FORMAT_TEXT,
                              &text),
            kExitData);
      std::cout << OwnedString(text).get();
      iqc_tier tier = IQC_TIER_INFEASIBLE;
      check(iqc_report_verdict(report.get(), &tier, nullptr), kExitData);
      return fail_on_infeasible && tier == IQC_TIER_INFEASIBLE ? kExitInfeasible : kExitOk;
    }

    if (*mind) {
      const double wl = parse_flag("--wavelength", md_wavelength, IQC_DIM_LENGTH);
      const double dist = parse_flag("--distance", md_distance, IQC_DIM_LENGTH);
      double d = 0.0;
      check(iqc_min_diameter(wl, dist, &d), kExitUsage);
      double partner = 0.0;
      double d1 = 0.0;
      if (!md_d1.empty()) {
        d1 = parse_flag("--d1", md_d1, IQC_DIM_LENGTH);
        check(iqc_required_partner_diameter(d1, wl, dist, &partner), kExitUsage);
      }
      if (md_format == "json") {
        nlohmann::json doc = {{"schema", 1}, {"wavelength_m", wl}, {"distance_m", dist},
                              {"min_diameter_m", d}};
        if (!md_d1.empty()) {
          doc["d1_m"] = d1;
          doc["required_d2_m"] = partner;
        }
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << format(d, IQC_DIM_LENGTH, md_unit, md_digits) << "\n";
        if (!md_d1.empty())
          std::cout << "required d2: " << format(partner, IQC_DIM_LENGTH, md_unit, md_digits) << "\n";
      }
      return kExitOk;
    }

    if (*maxw) {
      const double T = parse_flag("--temperature", mw_temperature, IQC_DIM_TEMPERATURE);
      const double eps = mw_mode == "q" ? 1.0 / 3.0 : 2.0 / 3.0;
      double wl = 0.0;
      check(mw_planck ? iqc_max_wavelength_planck(eps, T, &wl) : iqc_max_wavelength(eps, T, &wl),
            kExitUsage);
      if (mw_format == "json") {
        const nlohmann::json doc = {{"schema", 1},
                                    {"mode", mw_mode},
                                    {"spectrum", mw_planck ? "planck" : "rayleigh_jeans"},
                                    {"temperature_k", T},
                                    {"max_wavelength_m", wl}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << format(wl, IQC_DIM_LENGTH, mw_unit, mw_digits) << "\n";
      }
      return kExitOk;
    }

    if (*relay) {
      const double wl = parse_flag("--wavelength", rp_wavelength, IQC_DIM_LENGTH);
      const double dist = parse_flag("--distance", rp_distance, IQC_DIM_LENGTH);
      char* out = nullptr;
      if (rp_diameter.empty()) {
        check(iqc_min_design_json(dist, wl, &out), kExitUsage);
      } else {
        const double d = parse_flag("--diameter", rp_diameter, IQC_DIM_LENGTH);
        const auto mode = rp_mode == "exact" ? IQC_RELAY_EXACT : IQC_RELAY_ORDER_OF_MAGNITUDE;
        check(iqc_relay_plan_json(d, wl, dist, mode, &out), kExitUsage);
      }
      std::cout << OwnedString(out).get();
      return kExitOk;
    }

    if (*scan) {
      const double lo = parse_flag("--from", sc_from, IQC_DIM_LENGTH);
      const double hi = parse_flag("--to", sc_to, IQC_DIM_LENGTH);
      if (!(lo <= hi)) usage_error("--from must not exceed --to");
      auto scenario = load_scenario(sc_scenario);
      char* out = nullptr;
      check(iqc_scan_csv(scenario.get(), lo, hi, sc_points, sc_linear ? 0 : 1, sc_threads, &out),
            kExitData);
      std::cout << OwnedString(out).get();
      return kExitOk;
    }

    if (*sim) {
      auto scenario = load_scenario(sim_scenario);
      char* out = nullptr;
      check(iqc_simulate_json(scenario.get(), sim_photons, sim_seed, sim_threads, &out), kExitData);
      std::cout << OwnedString(out).get();
      return kExitOk;
    }
  } catch (const CliFailure& f) {
    std::cerr << "iqc: " << f.message << "\n";
    return f.code;
  }
  return kExitUsage;
}

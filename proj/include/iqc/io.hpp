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

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "iqc/channels.hpp"
#include "iqc/feasibility.hpp"
#include "iqc/montecarlo.hpp"

// Scenario files and report serialisation.
//
// Scenario JSON keys: distance, wavelength, d1, d2 (unit strings),
// receiver_site ("ground" | "space"), extinction_curve (path or builtin:*),
// and optionally n_H (number, m^-3), relay_n, policy ("combined" |
// "per_mechanism"), relay_aggregation ("compose" | "ideal"),
// atmosphere_bands (path, builtin:* or null), background_components (array
// of paths), description, schema (must be 1). Relative paths resolve
// against the scenario file's directory.

namespace iqc::io {

inline constexpr int kSchemaVersion = 1;

feasibility::Scenario scenario_from_json(std::string_view json_text,
                                         const std::filesystem::path& base_dir);
feasibility::Scenario load_scenario(const std::string& path);

/// Stable-keyed JSON; all quantities as SI numbers under unit-suffixed keys.
std::string report_json(const feasibility::Scenario& s, const feasibility::LinkReport& r);
/// Aligned two-column text for people.
std::string report_text(const feasibility::Scenario& s, const feasibility::LinkReport& r);

/// Header lambda_m,eps_ext,eps_atm,eps_beam,eps_depol,verdict,min_diameter_m;
/// numbers printed with 12 significant digits.
std::string scan_csv(std::span<const feasibility::ScanRow> rows);

std::string sim_report_json(const montecarlo::SimReport& r);

std::string min_design_json(double distance, double wavelength, const feasibility::MinDesign& d);

std::string relay_plan_json(double diameter, double wavelength, double distance,
                            channels::RelayMode mode);

}  // namespace iqc::io

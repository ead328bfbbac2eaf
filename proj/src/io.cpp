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

#include "iqc/io.hpp"

#include <cstdio>
#include <memory>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "iqc/error.hpp"
#include "iqc/tabulated.hpp"
#include "iqc/units.hpp"

namespace iqc::io {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;
using feasibility::ErasurePolicy;
using feasibility::ReceiverSite;
using feasibility::RelayAggregation;

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::parse, "scenario: " + msg); }

const json& required(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) bad(std::string("missing key '") + key + "'");
  return *it;
}

std::string string_field(const json& v, const char* key) {
  if (!v.is_string()) bad(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

double length_field(const json& obj, const char* key) {
  const std::string text = string_field(required(obj, key), key);
  const Quantity q = parse_quantity(text);
  if (q.dimension != Dimension::length) bad(std::string("'") + key + "' must be a length");
  return q.value;
}

std::string resolve(const std::string& ref, const fs::path& base_dir) {
  if (ref.starts_with("builtin:")) return ref;
  const fs::path p(ref);
  if (p.is_absolute() || base_dir.empty()) return ref;
  return (base_dir / p).lexically_normal().string();
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json estimate_json(const montecarlo::Estimate& e) {
  return {{"events", e.events},
          {"empirical", e.empirical},
          {"standard_error", e.standard_error},
          {"analytic", e.analytic},
          {"z_score", e.z_score ? json(*e.z_score) : json(nullptr)}};
}

json min_design_object(double distance, double wavelength, const feasibility::MinDesign& d) {
  json options = json::array();
  for (const auto& o : d.relay_options)
    options.push_back({{"n", o.n}, {"element_diameter_m", o.element_diameter}});
  return {{"distance_m", distance},
          {"wavelength_m", wavelength},
          {"d_min_m", d.d_min},
          {"relay_options", options}};
}

/// Human-scale length: km above 1 km, m above 1 m, else nm/um/mm/cm.
std::string human_length(double metres) {
  const char* unit = metres >= 1e3 ? "km"
                     : metres >= 1.0 ? "m"
                     : metres >= 1e-2 ? "cm"
                     : metres >= 1e-3 ? "mm"
                     : metres >= 1e-6 ? "um"
                                      : "nm";
  return format_quantity(Quantity{metres, Dimension::length}, unit, 4);
}

}  // namespace

feasibility::Scenario scenario_from_json(std::string_view json_text, const fs::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");

  static const std::set<std::string> known{
      "schema",          "description",      "distance",         "wavelength",
      "d1",              "d2",               "receiver_site",    "n_H",
      "relay_n",         "policy",           "relay_aggregation", "extinction_curve",
      "atmosphere_bands", "background_components"};
  for (const auto& [key, _] : doc.items())
    if (!known.contains(key)) bad("unknown key '" + key + "'");

  if (const auto it = doc.find("schema"); it != doc.end())
    if (!it->is_number_integer() || it->get<int>() != kSchemaVersion)
      bad("unsupported schema version");

  feasibility::Scenario s;
  s.distance = length_field(doc, "distance");
  s.wavelength = length_field(doc, "wavelength");
  s.d1 = length_field(doc, "d1");
  s.d2 = length_field(doc, "d2");

  const std::string site = string_field(required(doc, "receiver_site"), "receiver_site");
  if (site == "ground")
    s.receiver_site = ReceiverSite::ground;
  else if (site == "space")
    s.receiver_site = ReceiverSite::space;
  else
    bad("receiver_site must be 'ground' or 'space'");

  if (const auto it = doc.find("n_H"); it != doc.end()) {
    if (!it->is_number()) bad("'n_H' must be a number in m^-3");
    s.n_H = it->get<double>();
  }
  if (const auto it = doc.find("relay_n"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 1) bad("'relay_n' must be an integer >= 1");
    s.relay_n = it->get<std::uint64_t>();
  }
  if (const auto it = doc.find("policy"); it != doc.end()) {
    const auto p = string_field(*it, "policy");
    if (p == "combined")
      s.policy = ErasurePolicy::combined;
    else if (p == "per_mechanism")
      s.policy = ErasurePolicy::per_mechanism;
    else
      bad("policy must be 'combined' or 'per_mechanism'");
  }
  if (const auto it = doc.find("relay_aggregation"); it != doc.end()) {
    const auto a = string_field(*it, "relay_aggregation");
    if (a == "compose")
      s.relay_aggregation = RelayAggregation::compose;
    else if (a == "ideal")
      s.relay_aggregation = RelayAggregation::ideal;
    else
      bad("relay_aggregation must be 'compose' or 'ideal'");
  }

  s.refs.extinction_curve =
      resolve(string_field(required(doc, "extinction_curve"), "extinction_curve"), base_dir);
  s.extinction = std::make_shared<const extinction::ExtinctionCurve>(
      extinction::load_extinction_curve(s.refs.extinction_curve));

  if (const auto it = doc.find("atmosphere_bands"); it != doc.end() && !it->is_null()) {
    s.refs.atmosphere_bands = resolve(string_field(*it, "atmosphere_bands"), base_dir);
    s.atmosphere = std::make_shared<const extinction::AtmosphereBands>(
        extinction::load_atmosphere_bands(*s.refs.atmosphere_bands));
  }

  auto bg = background::BackgroundModel::cmb_only();
  if (const auto it = doc.find("background_components"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) bad("'background_components' must be an array of paths");
    for (const auto& entry : *it) {
      const auto path = resolve(string_field(entry, "background_components"), base_dir);
      s.refs.background_components.push_back(path);
      bg.add_component(background::load_background_component(path));
    }
  }
  s.background = std::make_shared<const background::BackgroundModel>(std::move(bg));

  s.validate();
  return s;
}

feasibility::Scenario load_scenario(const std::string& path) {
  const std::string text = read_text_file(path);
  return scenario_from_json(text, fs::path(path).parent_path());
}

std::string report_json(const feasibility::Scenario& s, const feasibility::LinkReport& r) {
  json components = json::array();
  for (const auto& c : s.refs.background_components) components.push_back(c);

  const json doc = {
      {"schema", kSchemaVersion},
      {"scenario",
       {{"distance_m", s.distance},
        {"wavelength_m", s.wavelength},
        {"d1_m", s.d1},
        {"d2_m", s.d2},
        {"receiver_site", to_string(s.receiver_site)},
        {"n_H_m3", s.n_H},
        {"relay_n", s.relay_n},
        {"policy", to_string(s.policy)},
        {"relay_aggregation", to_string(s.relay_aggregation)},
        {"extinction_curve", s.refs.extinction_curve},
        {"atmosphere_bands",
         s.refs.atmosphere_bands ? json(*s.refs.atmosphere_bands) : json(nullptr)},
        {"background_components", components}}},
      {"erasure",
       {{"extinction", r.budget.extinction_eps},
        {"atmosphere", r.budget.atmosphere_eps},
        {"beam", r.budget.beam_eps},
        {"combined", r.budget.combined},
        {"extinction_per_hop", r.extinction_eps_per_hop},
        {"beam_per_hop", r.beam_eps_per_hop},
        {"beam_dx1_m", r.beam_dx1},
        {"beam_dx2_m", r.beam_dx2}}},
      {"depolarization",
       {{"background_intensity_si", r.background_intensity},
        {"background_photons", r.background_photons},
        {"eps", r.depol_eps},
        {"eps_cmb_rayleigh_jeans", r.depol_eps_cmb_rj},
        {"paths_agree", r.depolarization_paths_agree}}},
      {"verdict",
       {{"tier", to_string(r.verdict.tier())},
        {"q_positive", r.verdict.q_positive},
        {"q2_positive", r.verdict.q2_positive},
        {"q_rate_bound", r.verdict.q_rate_bound},
        {"binding_constraint", to_string(r.verdict.binding_constraint)}}},
      {"bounds",
       {{"min_diameter_m", r.min_diameter_required},
        {"max_wavelength_q_m", r.max_wavelength_q},
        {"max_wavelength_q2_m", r.max_wavelength_q2},
        {"max_wavelength_q_planck_m", r.max_wavelength_q_planck},
        {"max_wavelength_q2_planck_m", r.max_wavelength_q2_planck},
        {"q2_delay_s", r.q2_delay},
        {"sender_intensity_floor_si", r.sender_intensity_floor}}},
  };
  return doc.dump(2) + "\n";
}

std::string report_text(const feasibility::Scenario& s, const feasibility::LinkReport& r) {
  std::ostringstream out;
  auto row = [&](std::string_view label, const std::string& value) {
    out << label;
    for (std::size_t i = label.size(); i < 30; ++i) out << ' ';
    out << value << '\n';
  };
  auto prob = [](double p) { return fmt12(p); };

  row("distance", format_quantity(Quantity{s.distance, Dimension::length}, "pc", 4));
  row("wavelength", human_length(s.wavelength));
  row("apertures (d1, d2)", human_length(s.d1) + ", " + human_length(s.d2));
  row("receiver", std::string(to_string(s.receiver_site)));
  row("relay hops", std::to_string(s.relay_n) + " (" + std::string(to_string(s.relay_aggregation)) + ")");
  row("erasure policy", std::string(to_string(s.policy)));
  out << '\n';
  row("erasure: extinction", prob(r.budget.extinction_eps));
  row("erasure: atmosphere", prob(r.budget.atmosphere_eps));
  row("erasure: beam", prob(r.budget.beam_eps));
  row("erasure: combined", prob(r.budget.combined));
  row("depolarization eps", prob(r.depol_eps));
  row("depolarization eps (CMB RJ)", prob(r.depol_eps_cmb_rj));
  out << '\n';
  row("verdict", std::string(to_string(r.verdict.tier())));
  row("binding constraint", std::string(to_string(r.verdict.binding_constraint)));
  row("Q rate bound", prob(r.verdict.q_rate_bound));
  out << '\n';
  row("min diameter (direct link)", human_length(r.min_diameter_required));
  row("max wavelength for Q", human_length(r.max_wavelength_q));
  row("max wavelength for Q2", human_length(r.max_wavelength_q2));
  row("Q2 round-trip delay",
      format_quantity(Quantity{r.q2_delay, Dimension::time}, "yr", 4));
  row("sender intensity floor", fmt12(r.sender_intensity_floor) + " W m^-2 Hz^-1 sr^-1");
  return out.str();
}

std::string scan_csv(std::span<const feasibility::ScanRow> rows) {
  std::ostringstream out;
  out << "lambda_m,eps_ext,eps_atm,eps_beam,eps_depol,verdict,min_diameter_m\n";
  for (const auto& r : rows)
    out << fmt12(r.wavelength) << ',' << fmt12(r.eps_ext) << ',' << fmt12(r.eps_atm) << ','
        << fmt12(r.eps_beam) << ',' << fmt12(r.eps_depol) << ',' << to_string(r.tier) << ','
        << fmt12(r.min_diameter) << '\n';
  return out.str();
}

std::string sim_report_json(const montecarlo::SimReport& r) {
  const json doc = {{"schema", kSchemaVersion},
                    {"n_photons", r.n_photons},
                    {"seed", r.seed},
                    {"simulated_hops", r.simulated_hops},
                    {"generator", "philox4x32-10"},
                    {"extinction", estimate_json(r.extinction)},
                    {"beam", estimate_json(r.beam)},
                    {"depolarization", estimate_json(r.depolarization)},
                    {"combined_loss", estimate_json(r.combined_loss)}};
  return doc.dump(2) + "\n";
}

std::string min_design_json(double distance, double wavelength, const feasibility::MinDesign& d) {
  json doc = min_design_object(distance, wavelength, d);
  doc["schema"] = kSchemaVersion;
  return doc.dump(2) + "\n";
}

std::string relay_plan_json(double diameter, double wavelength, double distance,
                            channels::RelayMode mode) {
  const double spacing = channels::relay_spacing(diameter, wavelength, mode);
  const auto n = channels::relay_count(diameter, wavelength, distance, mode);
  const json doc = {
      {"schema", kSchemaVersion},
      {"diameter_m", diameter},
      {"wavelength_m", wavelength},
      {"distance_m", distance},
      {"mode", to_string(mode)},
      {"spacing_m", spacing},
      {"spacing_au", spacing / constants::au},
      {"relay_count", n},
      {"direct_link", n == 1},
      {"min_design", min_design_object(distance, wavelength,
                                       feasibility::solve_min_design(distance, wavelength))}};
  return doc.dump(2) + "\n";
}

}  // namespace iqc::io

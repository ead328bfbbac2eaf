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

#include "iqc/iqc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "iqc/beam.hpp"
#include "iqc/error.hpp"
#include "iqc/io.hpp"
#include "iqc/montecarlo.hpp"

struct iqc_scenario {
  iqc::feasibility::Scenario value;
};

struct iqc_report {
  iqc::feasibility::Scenario scenario;
  iqc::feasibility::LinkReport value;
};

static_assert(IQC_DIM_LENGTH == static_cast<int>(iqc::Dimension::length));
static_assert(IQC_DIM_SOLID_ANGLE == static_cast<int>(iqc::Dimension::solid_angle));
static_assert(IQC_TIER_INFEASIBLE == static_cast<int>(iqc::channels::Tier::infeasible));
static_assert(IQC_CONSTRAINT_BEAM == static_cast<int>(iqc::channels::Constraint::beam));
static_assert(IQC_CONSTRAINT_NONE == static_cast<int>(iqc::channels::Constraint::none));

namespace {

thread_local std::string g_last_error;

iqc_status status_of(iqc::ErrorKind kind) {
  switch (kind) {
    case iqc::ErrorKind::invalid_argument: return IQC_ERR_INVALID_ARGUMENT;
    case iqc::ErrorKind::parse: return IQC_ERR_PARSE;
    case iqc::ErrorKind::range: return IQC_ERR_RANGE;
    case iqc::ErrorKind::data: return IQC_ERR_DATA;
    case iqc::ErrorKind::numeric: return IQC_ERR_NUMERIC;
  }
  return IQC_ERR_INTERNAL;
}

/// Runs fn, translating exceptions into status codes and the thread-local
/// error message.
template <typename Fn>
iqc_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    fn();
    return IQC_OK;
  } catch (const iqc::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return IQC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IQC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return IQC_ERR_INTERNAL;
  }
}

void require_out(const void* p) { iqc::require(p != nullptr, "output pointer is null"); }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

iqc::channels::RelayMode relay_mode(iqc_relay_mode m) {
  switch (m) {
    case IQC_RELAY_EXACT: return iqc::channels::RelayMode::exact;
    case IQC_RELAY_ORDER_OF_MAGNITUDE: return iqc::channels::RelayMode::order_of_magnitude;
  }
  iqc::fail(iqc::ErrorKind::invalid_argument, "unknown relay mode");
}

const iqc::feasibility::Scenario& scenario_ref(const iqc_scenario* s) {
  iqc::require(s != nullptr, "scenario handle is null");
  return s->value;
}

}  // namespace

extern "C" {

const char* iqc_version(void) { return IQC_VERSION_STRING; }

const char* iqc_last_error(void) { return g_last_error.c_str(); }

void iqc_string_free(char* s) { std::free(s); }

iqc_status iqc_parse_quantity(const char* text, double* si_value, iqc_dimension* dimension) {
  return guarded([&] {
    iqc::require(text != nullptr, "text is null");
    require_out(si_value);
    const auto q = iqc::parse_quantity(text);
    *si_value = q.value;
    if (dimension) *dimension = static_cast<iqc_dimension>(q.dimension);
  });
}

iqc_status iqc_format_quantity(double si_value, iqc_dimension dimension, const char* unit,
                               int significant_digits, char** out) {
  return guarded([&] {
    iqc::require(unit != nullptr, "unit is null");
    require_out(out);
    iqc::require(dimension >= IQC_DIM_LENGTH && dimension <= IQC_DIM_SOLID_ANGLE,
                 "unknown dimension");
    const auto q = iqc::Quantity::make(si_value, static_cast<iqc::Dimension>(dimension));
    std::optional<int> digits;
    if (significant_digits > 0) digits = significant_digits;
    *out = dup_string(iqc::format_quantity(q, unit, digits));
  });
}

iqc_status iqc_min_diameter(double wavelength, double distance, double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::beam::min_diameter(wavelength, distance);
  });
}

iqc_status iqc_required_partner_diameter(double d1, double wavelength, double distance,
                                         double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::beam::required_partner_diameter(d1, wavelength, distance);
  });
}

iqc_status iqc_joint_catch_probability(double d1, double d2, double wavelength, double distance,
                                       double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::beam::joint_catch_probability(iqc::beam::AperturePair(d1, d2), wavelength, distance);
  });
}

iqc_status iqc_beam_radius(double wavelength, double waist, double z, double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::beam::beam_radius(iqc::beam::BeamGeometry(wavelength, waist), z);
  });
}

iqc_status iqc_catch_probability(double diameter, double sigma, double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::beam::catch_probability(diameter, sigma);
  });
}

iqc_status iqc_planck_intensity(double temperature, double wavelength, double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::background::planck_intensity(temperature, wavelength);
  });
}

iqc_status iqc_rayleigh_jeans_intensity(double temperature, double wavelength, double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::background::rayleigh_jeans_intensity(temperature, wavelength);
  });
}

iqc_status iqc_background_photon_count(double intensity, double wavelength, double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::background::background_photon_count(intensity, wavelength);
  });
}

iqc_status iqc_depolarizing_epsilon(double photon_count, double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::background::depolarizing_epsilon(photon_count);
  });
}

iqc_status iqc_max_wavelength(double eps_c, double temperature, double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::background::max_wavelength(eps_c, temperature);
  });
}

iqc_status iqc_max_wavelength_planck(double eps_c, double temperature, double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::background::max_wavelength_planck(eps_c, temperature);
  });
}

iqc_status iqc_relay_spacing(double diameter, double wavelength, iqc_relay_mode mode, double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::channels::relay_spacing(diameter, wavelength, relay_mode(mode));
  });
}

iqc_status iqc_relay_count(double diameter, double wavelength, double distance,
                           iqc_relay_mode mode, uint64_t* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::channels::relay_count(diameter, wavelength, distance, relay_mode(mode));
  });
}

iqc_status iqc_q2_roundtrip_delay(double distance, double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::channels::q2_roundtrip_delay(distance);
  });
}

iqc_status iqc_min_design_json(double distance, double wavelength, char** out) {
  return guarded([&] {
    require_out(out);
    const auto design = iqc::feasibility::solve_min_design(distance, wavelength);
    *out = dup_string(iqc::io::min_design_json(distance, wavelength, design));
  });
}

iqc_status iqc_relay_plan_json(double diameter, double wavelength, double distance,
                               iqc_relay_mode mode, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup_string(iqc::io::relay_plan_json(diameter, wavelength, distance, relay_mode(mode)));
  });
}

iqc_status iqc_scenario_load(const char* path, iqc_scenario** out) {
  return guarded([&] {
    iqc::require(path != nullptr, "path is null");
    require_out(out);
    *out = new iqc_scenario{iqc::io::load_scenario(path)};
  });
}

iqc_status iqc_scenario_from_json(const char* json, const char* base_dir, iqc_scenario** out) {
  return guarded([&] {
    iqc::require(json != nullptr, "json is null");
    require_out(out);
    *out = new iqc_scenario{iqc::io::scenario_from_json(json, base_dir ? base_dir : "")};
  });
}

void iqc_scenario_free(iqc_scenario* s) { delete s; }

iqc_status iqc_scenario_set_policy(iqc_scenario* s, iqc_policy policy) {
  return guarded([&] {
    iqc::require(s != nullptr, "scenario handle is null");
    iqc::require(policy == IQC_POLICY_COMBINED || policy == IQC_POLICY_PER_MECHANISM,
                 "unknown policy");
    s->value.policy = policy == IQC_POLICY_COMBINED ? iqc::feasibility::ErasurePolicy::combined
                                                    : iqc::feasibility::ErasurePolicy::per_mechanism;
  });
}

iqc_status iqc_evaluate(const iqc_scenario* s, iqc_report** out) {
  return guarded([&] {
    require_out(out);
    const auto& sc = scenario_ref(s);
    *out = new iqc_report{sc, iqc::feasibility::evaluate_scenario(sc)};
  });
}

void iqc_report_free(iqc_report* r) { delete r; }

iqc_status iqc_report_verdict(const iqc_report* r, iqc_tier* tier, iqc_constraint* binding) {
  return guarded([&] {
    iqc::require(r != nullptr, "report handle is null");
    if (tier) *tier = static_cast<iqc_tier>(r->value.verdict.tier());
    if (binding) *binding = static_cast<iqc_constraint>(r->value.verdict.binding_constraint);
  });
}

iqc_status iqc_report_render(const iqc_report* r, iqc_format format, char** out) {
  return guarded([&] {
    iqc::require(r != nullptr, "report handle is null");
    require_out(out);
    switch (format) {
      case IQC_FORMAT_JSON: *out = dup_string(iqc::io::report_json(r->scenario, r->value)); return;
      case IQC_FORMAT_TEXT: *out = dup_string(iqc::io::report_text(r->scenario, r->value)); return;
    }
    iqc::fail(iqc::ErrorKind::invalid_argument, "unknown output format");
  });
}

iqc_status iqc_scan_csv(const iqc_scenario* s, double lo, double hi, size_t points, int log_spaced,
                        unsigned threads, char** out) {
  return guarded([&] {
    require_out(out);
    const auto grid = iqc::feasibility::wavelength_grid(lo, hi, points, log_spaced != 0);
    const auto rows = iqc::feasibility::scan_wavelengths(scenario_ref(s), grid, threads);
    *out = dup_string(iqc::io::scan_csv(rows));
  });
}

iqc_status iqc_simulate_json(const iqc_scenario* s, uint64_t n_photons, uint64_t seed,
                             unsigned threads, char** out) {
  return guarded([&] {
    require_out(out);
    iqc::montecarlo::SimConfig cfg{scenario_ref(s), n_photons, seed, threads};
    *out = dup_string(iqc::io::sim_report_json(iqc::montecarlo::simulate_link(cfg)));
  });
}

iqc_status iqc_simulate_catch(double diameter, double sigma, uint64_t n, uint64_t seed,
                              unsigned threads, double* out) {
  return guarded([&] {
    require_out(out);
    *out = iqc::montecarlo::simulate_catch(diameter, sigma, n, seed, threads);
  });
}

}  // extern "C"

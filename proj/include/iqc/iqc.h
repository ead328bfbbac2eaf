/*
 * Copyright 2026 The iqc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the interstellar quantum channel library.
 *
 * Conventions:
 *  - every fallible call returns an iqc_status; on failure the message is
 *    available from iqc_last_error() on the same thread until the next call;
 *  - all physical inputs and outputs are SI (metres, seconds, kelvin,
 *    W m^-2 Hz^-1 sr^-1);
 *  - strings returned through char** are heap-allocated and must be
 *    released with iqc_string_free();
 *  - handles are opaque and released with their matching *_free function.
 *    A scenario may be shared read-only between threads.
 */

#ifndef IQC_IQC_H
#define IQC_IQC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(IQC_BUILDING_LIBRARY)
#    define IQC_API __declspec(dllexport)
#  else
#    define IQC_API __declspec(dllimport)
#  endif
#else
#  define IQC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iqc_status {
  IQC_OK = 0,
  IQC_ERR_INVALID_ARGUMENT = 1,
  IQC_ERR_PARSE = 2,
  IQC_ERR_RANGE = 3,
  IQC_ERR_DATA = 4,
  IQC_ERR_NUMERIC = 5,
  IQC_ERR_INTERNAL = 6
} iqc_status;

typedef enum iqc_dimension {
  IQC_DIM_LENGTH = 0,
  IQC_DIM_TIME,
  IQC_DIM_TEMPERATURE,
  IQC_DIM_PROBABILITY,
  IQC_DIM_DIMENSIONLESS,
  IQC_DIM_SPECIFIC_INTENSITY,
  IQC_DIM_CROSS_SECTION,
  IQC_DIM_NUMBER_DENSITY,
  IQC_DIM_ANGLE,
  IQC_DIM_SOLID_ANGLE
} iqc_dimension;

typedef enum iqc_tier {
  IQC_TIER_Q_POSITIVE = 0,
  IQC_TIER_Q2_ONLY = 1,
  IQC_TIER_INFEASIBLE = 2
} iqc_tier;

typedef enum iqc_constraint {
  IQC_CONSTRAINT_WAVELENGTH_BOUND = 0,
  IQC_CONSTRAINT_DEPOLARIZATION,
  IQC_CONSTRAINT_BEAM,
  IQC_CONSTRAINT_EXTINCTION,
  IQC_CONSTRAINT_ATMOSPHERE,
  IQC_CONSTRAINT_NONE
} iqc_constraint;

typedef enum iqc_relay_mode {
  IQC_RELAY_EXACT = 0,             /* each hop meets the diameter bound with equality */
  IQC_RELAY_ORDER_OF_MAGNITUDE = 1 /* (D/100 m)^2 (300 nm/lambda) 3e10 m */
} iqc_relay_mode;

typedef enum iqc_policy {
  IQC_POLICY_COMBINED = 0,
  IQC_POLICY_PER_MECHANISM = 1
} iqc_policy;

typedef enum iqc_format {
  IQC_FORMAT_JSON = 0,
  IQC_FORMAT_TEXT = 1
} iqc_format;

typedef struct iqc_scenario iqc_scenario;
typedef struct iqc_report iqc_report;

IQC_API const char* iqc_version(void);
IQC_API const char* iqc_last_error(void);
IQC_API void iqc_string_free(char* s);

/* Units. significant_digits <= 0 selects the shortest round-trip form. */
IQC_API iqc_status iqc_parse_quantity(const char* text, double* si_value, iqc_dimension* dimension);
IQC_API iqc_status iqc_format_quantity(double si_value, iqc_dimension dimension, const char* unit,
                                       int significant_digits, char** out);

/* Beam geometry. */
IQC_API iqc_status iqc_min_diameter(double wavelength, double distance, double* out);
IQC_API iqc_status iqc_required_partner_diameter(double d1, double wavelength, double distance,
                                                 double* out);
IQC_API iqc_status iqc_joint_catch_probability(double d1, double d2, double wavelength,
                                               double distance, double* out);
IQC_API iqc_status iqc_beam_radius(double wavelength, double waist, double z, double* out);
IQC_API iqc_status iqc_catch_probability(double diameter, double sigma, double* out);

/* Background. */
IQC_API iqc_status iqc_planck_intensity(double temperature, double wavelength, double* out);
IQC_API iqc_status iqc_rayleigh_jeans_intensity(double temperature, double wavelength, double* out);
IQC_API iqc_status iqc_background_photon_count(double intensity, double wavelength, double* out);
IQC_API iqc_status iqc_depolarizing_epsilon(double photon_count, double* out);
IQC_API iqc_status iqc_max_wavelength(double eps_c, double temperature, double* out);
IQC_API iqc_status iqc_max_wavelength_planck(double eps_c, double temperature, double* out);

/* Channels. */
IQC_API iqc_status iqc_relay_spacing(double diameter, double wavelength, iqc_relay_mode mode,
                                     double* out);
IQC_API iqc_status iqc_relay_count(double diameter, double wavelength, double distance,
                                   iqc_relay_mode mode, uint64_t* out);
IQC_API iqc_status iqc_q2_roundtrip_delay(double distance, double* out);
IQC_API iqc_status iqc_min_design_json(double distance, double wavelength, char** out);
IQC_API iqc_status iqc_relay_plan_json(double diameter, double wavelength, double distance,
                                       iqc_relay_mode mode, char** out);

/* Scenarios. base_dir resolves relative dataset paths and may be NULL. */
IQC_API iqc_status iqc_scenario_load(const char* path, iqc_scenario** out);
IQC_API iqc_status iqc_scenario_from_json(const char* json, const char* base_dir,
                                          iqc_scenario** out);
IQC_API void iqc_scenario_free(iqc_scenario* s);
IQC_API iqc_status iqc_scenario_set_policy(iqc_scenario* s, iqc_policy policy);

IQC_API iqc_status iqc_evaluate(const iqc_scenario* s, iqc_report** out);
IQC_API void iqc_report_free(iqc_report* r);
IQC_API iqc_status iqc_report_verdict(const iqc_report* r, iqc_tier* tier, iqc_constraint* binding);
IQC_API iqc_status iqc_report_render(const iqc_report* r, iqc_format format, char** out);

/* Wavelength scan from lo to hi (inclusive) as CSV. threads == 0 uses all cores. */
IQC_API iqc_status iqc_scan_csv(const iqc_scenario* s, double lo, double hi, size_t points,
                                int log_spaced, unsigned threads, char** out);

/* Monte Carlo cross-check; the JSON is identical for any thread count. */
IQC_API iqc_status iqc_simulate_json(const iqc_scenario* s, uint64_t n_photons, uint64_t seed,
                                     unsigned threads, char** out);
IQC_API iqc_status iqc_simulate_catch(double diameter, double sigma, uint64_t n, uint64_t seed,
                                      unsigned threads, double* out);

#ifdef __cplusplus
}
#endif

#endif /* IQC_IQC_H */

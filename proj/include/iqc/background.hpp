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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iqc/tabulated.hpp"
#include "iqc/units.hpp"

// Depolarisation of received qubits by diffuse background photons.
// Specific intensities are SI: W m^-2 Hz^-1 sr^-1.

namespace iqc::background {

/// Channel-capacity thresholds on the per-qubit error probability.
struct DepolarizationThresholds {
  double eps_q = 1.0 / 3.0;         // depolarizing: Q > 0 below this
  double eps_q2 = 2.0 / 3.0;        // depolarizing: Q2 > 0 below this
  double eps_erasure = 0.5;         // erasure: Q > 0 below this
  double eps_erasure_q2 = 2.0 / 3.0;  // erasure gate for the two-way tier

  /// Throws unless 0 < eps_q < eps_q2 < 1 and the erasure levels are in (0,1].
  void validate() const;
};

/// One additive term of the background intensity.
struct Component {
  enum class Kind { blackbody, tabulated };
  std::string name;
  Kind kind = Kind::blackbody;
  double temperature = constants::T_cmb;  // blackbody only
  std::vector<Sample> samples;            // tabulated only, log-log interpolated
};

class BackgroundModel {
 public:
  /// The cosmic microwave background alone.
  static BackgroundModel cmb_only(double temperature = constants::T_cmb);

  void add_component(Component component);
  std::span<const Component> components() const { return components_; }

  /// Sum over components. Tabulated components throw ErrorKind::range
  /// outside their sampled wavelengths.
  double total(double wavelength) const;
  double cmb_temperature() const;

 private:
  std::vector<Component> components_;
};

/// CSV with header `wavelength_m,intensity_si`.
Component parse_background_component(std::string_view csv, std::string name);
Component load_background_component(const std::string& path);

/// Planck law (4 pi hbar c / lambda^3) / (exp(2 pi hbar nu / kT) - 1).
/// Returns 0 where the exponential overflows.
double planck_intensity(double temperature, double wavelength);

/// Long-wavelength limit 2 k T / lambda^2.
double rayleigh_jeans_intensity(double temperature, double wavelength);

/// Minimum mean number of background photons sharing the signal photon's
/// uncertainty-limited mode: I lambda^3 / (128 pi^2 hbar c).
double background_photon_count(double intensity, double wavelength);

/// eps = N / (1 + N).
double depolarizing_epsilon(double photon_count);

/// Largest background intensity keeping eps below eps_c:
/// (eps_c / (1 - eps_c)) 128 pi^2 hbar c / lambda^3.
double max_intensity(double wavelength, double eps_c);

/// Longest usable wavelength against a Rayleigh-Jeans blackbody:
/// 64 pi^2 (eps_c / (1 - eps_c)) hbar c / (k T).
double max_wavelength(double eps_c, double temperature);

/// Same threshold against the full Planck spectrum. Closed form, since the
/// mode occupation is 1 / (32 pi (exp(x) - 1)) with x = 2 pi hbar c / (lambda k T).
double max_wavelength_planck(double eps_c, double temperature);

/// Sender intensity floor ((1 - eps_c) / eps_c) I.
double min_sender_intensity(double background_intensity, double eps_c);

}  // namespace iqc::background

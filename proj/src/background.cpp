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

#include "iqc/background.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "iqc/error.hpp"

namespace iqc::background {

namespace {

using constants::c;
using constants::hbar;
using constants::k_boltzmann;
constexpr double kPi = std::numbers::pi;
constexpr double kExpOverflow = 700.0;

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

void require_threshold(double eps_c) {
  require(std::isfinite(eps_c) && eps_c > 0.0 && eps_c < 1.0, "threshold must be in (0,1)");
}

double odds(double eps_c) { return eps_c / (1.0 - eps_c); }

}  // namespace

void DepolarizationThresholds::validate() const {
  require(0.0 < eps_q && eps_q < eps_q2 && eps_q2 < 1.0,
          "depolarizing thresholds must satisfy 0 < eps_q < eps_q2 < 1");
  require(0.0 < eps_erasure && eps_erasure <= 1.0 && 0.0 < eps_erasure_q2 &&
              eps_erasure_q2 <= 1.0 && eps_erasure <= eps_erasure_q2,
          "erasure thresholds must satisfy 0 < eps_erasure <= eps_erasure_q2 <= 1");
}

BackgroundModel BackgroundModel::cmb_only(double temperature) {
  require(positive_finite(temperature), "CMB temperature must be positive");
  BackgroundModel m;
  m.components_.push_back({"cmb", Component::Kind::blackbody, temperature, {}});
  return m;
}

void BackgroundModel::add_component(Component component) {
  if (component.kind == Component::Kind::tabulated && component.samples.size() < 2)
    fail(ErrorKind::data, "background component '" + component.name + "' needs two samples");
  components_.push_back(std::move(component));
}

double BackgroundModel::total(double wavelength) const {
  require(positive_finite(wavelength), "wavelength must be positive");
  double sum = 0.0;
  for (const auto& comp : components_) {
    if (comp.kind == Component::Kind::blackbody)
      sum += planck_intensity(comp.temperature, wavelength);
    else
      sum += loglog_interpolate(comp.samples, wavelength);
  }
  return sum;
}

double BackgroundModel::cmb_temperature() const {
  for (const auto& comp : components_)
    if (comp.kind == Component::Kind::blackbody) return comp.temperature;
  return constants::T_cmb;
}

Component parse_background_component(std::string_view csv, std::string name) {
  const auto rows = read_two_column_csv(csv, "wavelength_m,intensity_si", name);
  Component comp{name, Component::Kind::tabulated, 0.0, {}};
  for (const auto& r : rows) {
    const auto at = name + ":" + std::to_string(r.line) + ": ";
    if (!(r.a > 0.0)) fail(ErrorKind::parse, at + "wavelength must be positive");
    if (r.b < 0.0) fail(ErrorKind::parse, at + "negative intensity");
    if (!comp.samples.empty() && !(r.a > comp.samples.back().x))
      fail(ErrorKind::parse, at + "wavelengths must be strictly increasing");
    comp.samples.push_back({r.a, r.b});
  }
  if (comp.samples.size() < 2) fail(ErrorKind::parse, name + ": need at least two samples");
  return comp;
}

Component load_background_component(const std::string& path) {
  return parse_background_component(read_text_file(path), path);
}

double planck_intensity(double temperature, double wavelength) {
  require(std::isfinite(temperature) && temperature >= 0.0, "temperature must be >= 0");
  require(positive_finite(wavelength), "wavelength must be positive");
  if (temperature == 0.0) return 0.0;
  const double x = 2.0 * kPi * hbar * c / (wavelength * k_boltzmann * temperature);
  if (x > kExpOverflow) return 0.0;
  return 4.0 * kPi * hbar * c / (wavelength * wavelength * wavelength) / std::expm1(x);
}

double rayleigh_jeans_intensity(double temperature, double wavelength) {
  require(std::isfinite(temperature) && temperature >= 0.0, "temperature must be >= 0");
  require(positive_finite(wavelength), "wavelength must be positive");
  return 2.0 * k_boltzmann * temperature / (wavelength * wavelength);
}

double background_photon_count(double intensity, double wavelength) {
  require(std::isfinite(intensity) && intensity >= 0.0, "intensity must be >= 0");
  require(positive_finite(wavelength), "wavelength must be positive");
  return intensity * wavelength * wavelength * wavelength / (128.0 * kPi * kPi * hbar * c);
}

double depolarizing_epsilon(double photon_count) {
  require(photon_count >= 0.0, "photon count must be >= 0");
  if (std::isinf(photon_count)) return 1.0;
  return photon_count / (1.0 + photon_count);
}

double max_intensity(double wavelength, double eps_c) {
  require(positive_finite(wavelength), "wavelength must be positive");
  require_threshold(eps_c);
  return odds(eps_c) * 128.0 * kPi * kPi * hbar * c / (wavelength * wavelength * wavelength);
}

double max_wavelength(double eps_c, double temperature) {
  require_threshold(eps_c);
  require(positive_finite(temperature), "temperature must be positive");
  return 64.0 * kPi * kPi * odds(eps_c) * hbar * c / (k_boltzmann * temperature);
}

double max_wavelength_planck(double eps_c, double temperature) {
  require_threshold(eps_c);
  require(positive_finite(temperature), "temperature must be positive");
  const double occupation = odds(eps_c);
  const double x = std::log1p(1.0 / (32.0 * kPi * occupation));
  return 2.0 * kPi * hbar * c / (k_boltzmann * temperature * x);
}

double min_sender_intensity(double background_intensity, double eps_c) {
  require(std::isfinite(background_intensity) && background_intensity >= 0.0,
          "intensity must be >= 0");
  require_threshold(eps_c);
  return background_intensity / odds(eps_c);
}

}  // namespace iqc::background

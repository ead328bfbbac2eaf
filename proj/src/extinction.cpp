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

#include "iqc/extinction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "iqc/error.hpp"

namespace iqc::extinction {

namespace {

constexpr std::string_view kBuiltinPrefix = "builtin:";

bool is_builtin(const std::string& ref) { return ref.starts_with(kBuiltinPrefix); }

}  // namespace

ExtinctionCurve::ExtinctionCurve(std::vector<Sample> samples, std::string name, std::string source)
    : samples_(std::move(samples)), name_(std::move(name)), source_(std::move(source)) {
  if (samples_.size() < 2) fail(ErrorKind::data, "extinction curve needs at least two samples");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!(std::isfinite(s.x) && s.x > 0.0))
      fail(ErrorKind::data, "extinction sample " + std::to_string(i) + ": wavelength must be positive");
    if (!(std::isfinite(s.y) && s.y >= 0.0))
      fail(ErrorKind::data, "extinction sample " + std::to_string(i) + ": negative cross section");
    if (i > 0 && !(s.x > samples_[i - 1].x))
      fail(ErrorKind::data, "extinction sample " + std::to_string(i) + ": wavelengths not increasing");
  }
}

AtmosphereBands::AtmosphereBands(std::vector<Band> blocked, std::string source)
    : blocked_(std::move(blocked)), source_(std::move(source)) {
  for (std::size_t i = 0; i < blocked_.size(); ++i) {
    const auto& b = blocked_[i];
    if (!(std::isfinite(b.lo) && std::isfinite(b.hi) && b.lo >= 0.0 && b.lo < b.hi))
      fail(ErrorKind::data, "atmosphere band " + std::to_string(i) + ": need 0 <= lo < hi");
    if (i > 0 && b.lo < blocked_[i - 1].hi)
      fail(ErrorKind::data, "atmosphere band " + std::to_string(i) + ": overlaps or is unsorted");
  }
}

ExtinctionCurve parse_extinction_curve(std::string_view csv, std::string name, std::string source) {
  const auto rows = read_two_column_csv(csv, "wavelength_m,sigma_m2", source);
  std::vector<Sample> samples;
  samples.reserve(rows.size());
  for (const auto& r : rows) {
    const auto at = source + ":" + std::to_string(r.line) + ": ";
    if (!(r.a > 0.0)) fail(ErrorKind::parse, at + "wavelength must be positive");
    if (r.b < 0.0) fail(ErrorKind::parse, at + "negative cross section");
    if (!samples.empty() && !(r.a > samples.back().x))
      fail(ErrorKind::parse, at + "wavelengths must be strictly increasing");
    samples.push_back({r.a, r.b});
  }
  if (samples.size() < 2) fail(ErrorKind::parse, source + ": need at least two samples");
  return ExtinctionCurve(std::move(samples), std::move(name), std::move(source));
}

ExtinctionCurve load_extinction_curve(const std::string& ref) {
  if (is_builtin(ref)) {
    const auto name = std::string_view(ref).substr(kBuiltinPrefix.size());
    const auto text = builtin_dataset("extinction", name);
    if (!text) fail(ErrorKind::data, "unknown builtin extinction curve '" + ref + "'");
    return parse_extinction_curve(*text, std::string(name), ref);
  }
  return parse_extinction_curve(read_text_file(ref), ref, ref);
}

AtmosphereBands parse_atmosphere_bands(std::string_view csv, std::string source) {
  const auto rows = read_two_column_csv(csv, "lo_m,hi_m", source);
  std::vector<Band> bands;
  bands.reserve(rows.size());
  for (const auto& r : rows) {
    const auto at = source + ":" + std::to_string(r.line) + ": ";
    if (!(r.a >= 0.0 && r.a < r.b)) fail(ErrorKind::parse, at + "need 0 <= lo < hi");
    if (!bands.empty() && r.a < bands.back().hi)
      fail(ErrorKind::parse, at + "band overlaps or is out of order");
    bands.push_back({r.a, r.b});
  }
  return AtmosphereBands(std::move(bands), std::move(source));
}

AtmosphereBands load_atmosphere_bands(const std::string& ref) {
  if (is_builtin(ref)) {
    const auto name = std::string_view(ref).substr(kBuiltinPrefix.size());
    const auto text = builtin_dataset("atmosphere", name);
    if (!text) fail(ErrorKind::data, "unknown builtin atmosphere bands '" + ref + "'");
    return parse_atmosphere_bands(*text, ref);
  }
  return parse_atmosphere_bands(read_text_file(ref), ref);
}

double sigma_at(const ExtinctionCurve& curve, double wavelength) {
  return loglog_interpolate(curve.samples(), wavelength);
}

double extinction_probability(const ExtinctionCurve& curve, double wavelength, double distance,
                              double n_H) {
  require(std::isfinite(distance) && distance >= 0.0, "distance must be >= 0");
  require(std::isfinite(n_H) && n_H >= 0.0, "hydrogen density must be >= 0");
  const double sigma = sigma_at(curve, wavelength);
  return -std::expm1(-n_H * sigma * distance);
}

double max_extinction_distance(const ExtinctionCurve& curve, double wavelength, double n_H) {
  require(std::isfinite(n_H) && n_H >= 0.0, "hydrogen density must be >= 0");
  const double opacity = n_H * sigma_at(curve, wavelength);
  if (opacity == 0.0) return std::numeric_limits<double>::infinity();
  return std::numbers::ln2 / opacity;
}

bool atmosphere_blocked(const AtmosphereBands& bands, double wavelength) {
  const auto blocked = bands.blocked();
  const auto it = std::upper_bound(blocked.begin(), blocked.end(), wavelength,
                                   [](double v, const Band& b) { return v < b.lo; });
  if (it == blocked.begin()) return false;
  const Band& b = *(it - 1);
  return wavelength >= b.lo && wavelength < b.hi;
}

}  // namespace iqc::extinction

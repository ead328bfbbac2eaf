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

namespace iqc::extinction {

/// Interstellar extinction cross section per hydrogen atom, tabulated
/// against wavelength. Immutable once constructed.
class ExtinctionCurve {
 public:
  /// Validates: >= 2 samples, strictly increasing positive wavelengths,
  /// non-negative finite cross sections.
  ExtinctionCurve(std::vector<Sample> samples, std::string name, std::string source);

  std::span<const Sample> samples() const { return samples_; }
  const std::string& name() const { return name_; }
  const std::string& source() const { return source_; }
  double min_wavelength() const { return samples_.front().x; }
  double max_wavelength() const { return samples_.back().x; }

 private:
  std::vector<Sample> samples_;
  std::string name_;
  std::string source_;
};

struct Band {
  double lo;
  double hi;
};

/// Wavelength intervals [lo, hi) that do not reach the ground.
class AtmosphereBands {
 public:
  AtmosphereBands() = default;
  explicit AtmosphereBands(std::vector<Band> blocked, std::string source = {});

  std::span<const Band> blocked() const { return blocked_; }
  const std::string& source() const { return source_; }

 private:
  std::vector<Band> blocked_;
  std::string source_;
};

/// CSV with header `wavelength_m,sigma_m2`.
ExtinctionCurve parse_extinction_curve(std::string_view csv, std::string name, std::string source);
/// `ref` is a file path or "builtin:<name>" (illustrative, transparent).
ExtinctionCurve load_extinction_curve(const std::string& ref);

/// CSV with header `lo_m,hi_m`.
AtmosphereBands parse_atmosphere_bands(std::string_view csv, std::string source);
/// `ref` is a file path or "builtin:ground".
AtmosphereBands load_atmosphere_bands(const std::string& ref);

double sigma_at(const ExtinctionCurve& curve, double wavelength);

/// Beer-Lambert loss 1 - exp(-n_H sigma L).
double extinction_probability(const ExtinctionCurve& curve, double wavelength, double distance,
                              double n_H);

/// ln 2 / (n_H sigma): the path length with extinction probability 1/2.
/// Returns +infinity when the cross section is zero.
double max_extinction_distance(const ExtinctionCurve& curve, double wavelength, double n_H);

bool atmosphere_blocked(const AtmosphereBands& bands, double wavelength);

}  // namespace iqc::extinction

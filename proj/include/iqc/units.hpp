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

#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace iqc {

/// Physical constants. CODATA 2018 exact/recommended values, IAU 2012/2015
/// astronomical lengths. Every module reads these; nothing else defines them.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double c = 299792458.0;              // m/s
inline constexpr double k_boltzmann = 1.380649e-23;   // J/K
inline constexpr double T_cmb = 2.726;                // K
inline constexpr double n_H_default = 1.146e6;        // m^-3 (1.146 cm^-3)
inline constexpr double au = 1.495978707e11;          // m
inline constexpr double parsec = au * 648000.0 / std::numbers::pi;
inline constexpr double julian_year = 3.15576e7;      // s
inline constexpr double light_year = c * julian_year;  // m
}  // namespace constants

enum class Dimension {
  length,
  time,
  temperature,
  probability,
  dimensionless,
  specific_intensity,  // W m^-2 Hz^-1 sr^-1
  cross_section,       // m^2
  number_density,      // m^-3
  angle,               // rad
  solid_angle,         // sr
};

std::string_view to_string(Dimension d);

/// A value in SI base units tagged with its dimension.
struct Quantity {
  double value = 0.0;
  Dimension dimension = Dimension::dimensionless;

  /// Checked constructor: finite value, probabilities in [0,1].
  static Quantity make(double value, Dimension dimension);

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

/// Parses "<number><optional space><unit>". Units: nm um mm cm m km au ly pc
/// (length), s yr (time), K (temperature). Lengths and temperatures must be
/// non-negative.
Quantity parse_quantity(std::string_view text);

/// Convenience: parse and require a given dimension.
double parse_si(std::string_view text, Dimension expected);

/// Formats `q` in `unit`. With no `significant_digits` the shortest decimal
/// string that parses back to the same SI value is produced; otherwise the
/// value is rounded to that many significant digits and trailing zeros are
/// dropped. Never uses exponent notation.
std::string format_quantity(const Quantity& q, std::string_view unit,
                            std::optional<int> significant_digits = {});

/// SI scale factor and dimension of a unit symbol, if known. Decimal
/// submultiples also carry the exact reciprocal so conversions round once.
struct UnitInfo {
  double scale;
  Dimension dimension;
  double per_si = 0.0;  // 1 / scale when exactly representable, else 0

  double to_si(double v) const { return per_si > 0.0 ? v / per_si : v * scale; }
  double from_si(double v) const { return per_si > 0.0 ? v * per_si : v / scale; }
};
std::optional<UnitInfo> lookup_unit(std::string_view unit);

}  // namespace iqc

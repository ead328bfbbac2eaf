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

#include "iqc/units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "iqc/error.hpp"

namespace iqc {

namespace {

struct UnitEntry {
  std::string_view symbol;
  double scale;
  Dimension dimension;
  double per_si = 0.0;
};

constexpr std::array<UnitEntry, 12> kUnits{{
    {"nm", 1e-9, Dimension::length, 1e9},
    {"um", 1e-6, Dimension::length, 1e6},
    {"mm", 1e-3, Dimension::length, 1e3},
    {"cm", 1e-2, Dimension::length, 1e2},
    {"m", 1.0, Dimension::length},
    {"km", 1e3, Dimension::length},
    {"au", constants::au, Dimension::length},
    {"ly", constants::light_year, Dimension::length},
    {"pc", constants::parsec, Dimension::length},
    {"s", 1.0, Dimension::time},
    {"yr", constants::julian_year, Dimension::time},
    {"K", 1.0, Dimension::temperature},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string strip_trailing_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::length: return "length";
    case Dimension::time: return "time";
    case Dimension::temperature: return "temperature";
    case Dimension::probability: return "probability";
    case Dimension::dimensionless: return "dimensionless";
    case Dimension::specific_intensity: return "specific_intensity";
    case Dimension::cross_section: return "cross_section";
    case Dimension::number_density: return "number_density";
    case Dimension::angle: return "angle";
    case Dimension::solid_angle: return "solid_angle";
  }
  return "unknown";
}

Quantity Quantity::make(double value, Dimension dimension) {
  if (!std::isfinite(value)) fail(ErrorKind::invalid_argument, "quantity value is not finite");
  if (dimension == Dimension::probability && (value < 0.0 || value > 1.0))
    fail(ErrorKind::invalid_argument, "probability outside [0,1]: " + std::to_string(value));
  return Quantity{value, dimension};
}

std::optional<UnitInfo> lookup_unit(std::string_view unit) {
  for (const auto& u : kUnits)
    if (u.symbol == unit) return UnitInfo{u.scale, u.dimension, u.per_si};
  return std::nullopt;
}

Quantity parse_quantity(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) fail(ErrorKind::parse, "empty quantity");

  double number = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), number);
  if (ec == std::errc::result_out_of_range)
    fail(ErrorKind::parse, "number out of range in '" + std::string(s) + "'");
  if (ec != std::errc{}) fail(ErrorKind::parse, "expected a number in '" + std::string(s) + "'");
  if (!std::isfinite(number)) fail(ErrorKind::parse, "non-finite number in '" + std::string(s) + "'");

  const std::string_view unit = trim(s.substr(static_cast<std::size_t>(end - s.data())));
  if (unit.empty()) fail(ErrorKind::parse, "missing unit in '" + std::string(s) + "'");
  const auto info = lookup_unit(unit);
  if (!info) fail(ErrorKind::parse, "unknown unit '" + std::string(unit) + "'");

  if ((info->dimension == Dimension::length || info->dimension == Dimension::temperature) &&
      number < 0.0)
    fail(ErrorKind::parse, "negative " + std::string(to_string(info->dimension)) + " '" +
                               std::string(s) + "'");

  return Quantity::make(info->to_si(number), info->dimension);
}

double parse_si(std::string_view text, Dimension expected) {
  const Quantity q = parse_quantity(text);
  if (q.dimension != expected)
    fail(ErrorKind::parse, "expected a " + std::string(to_string(expected)) + ", got '" +
                               std::string(text) + "'");
  return q.value;
}

std::string format_quantity(const Quantity& q, std::string_view unit,
                            std::optional<int> significant_digits) {
  const auto info = lookup_unit(unit);
  if (!info) fail(ErrorKind::invalid_argument, "unknown unit '" + std::string(unit) + "'");
  if (info->dimension != q.dimension)
    fail(ErrorKind::invalid_argument, "cannot format a " + std::string(to_string(q.dimension)) +
                                          " in '" + std::string(unit) + "'");

  const double v = info->from_si(q.value);
  std::string digits;
  if (!significant_digits) {
    std::array<char, 512> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed);
    if (res.ec != std::errc{}) fail(ErrorKind::invalid_argument, "value too large to format");
    digits.assign(buf.data(), res.ptr);
  } else {
    require(*significant_digits >= 1 && *significant_digits <= 17,
            "significant digits must be in [1,17]");
    int decimals = 0;
    if (v != 0.0) {
      const int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(v))));
      decimals = std::max(0, *significant_digits - 1 - magnitude);
    }
    std::array<char, 512> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*f", decimals, v);
    digits = strip_trailing_zeros(buf.data());
  }
  if (digits == "-0") digits = "0";
  return digits + " " + std::string(unit);
}

}  // namespace iqc

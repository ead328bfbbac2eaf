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

#include "iqc/channels.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "iqc/beam.hpp"
#include "iqc/error.hpp"
#include "iqc/units.hpp"

namespace iqc::channels {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

void require_probability(double p) {
  require(p >= 0.0 && p <= 1.0, "probability must be in [0,1]");
}

}  // namespace

ErasureBudget ErasureBudget::make(double extinction, double atmosphere, double beam) {
  const std::array<double, 3> parts{extinction, atmosphere, beam};
  return {extinction, atmosphere, beam, combine_erasures(parts)};
}

std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::q_positive: return "q_positive";
    case Tier::q2_only: return "q2_only";
    case Tier::infeasible: return "infeasible";
  }
  return "unknown";
}

std::string_view to_string(Constraint c) {
  switch (c) {
    case Constraint::wavelength_bound: return "wavelength_bound";
    case Constraint::depolarization: return "depolarization";
    case Constraint::beam: return "beam";
    case Constraint::extinction: return "extinction";
    case Constraint::atmosphere: return "atmosphere";
    case Constraint::none: return "none";
  }
  return "unknown";
}

std::string_view to_string(RelayMode m) {
  return m == RelayMode::exact ? "exact" : "order_of_magnitude";
}

double erasure_capacity(double eps) {
  require_probability(eps);
  return eps < 0.5 ? 1.0 - 2.0 * eps : 0.0;
}

double combine_erasures(std::span<const double> eps) {
  double survive = 1.0;
  for (double e : eps) {
    require_probability(e);
    survive *= 1.0 - e;
  }
  return 1.0 - survive;
}

Tier depolarizing_feasibility(double eps) {
  require_probability(eps);
  if (eps < 1.0 / 3.0) return Tier::q_positive;
  if (eps < 2.0 / 3.0) return Tier::q2_only;
  return Tier::infeasible;
}

double q2_roundtrip_delay(double distance) {
  require(positive_finite(distance), "distance must be positive");
  return 2.0 * distance / constants::c;
}

double relay_spacing(double d, double wavelength, RelayMode mode) {
  require(positive_finite(d) && positive_finite(wavelength),
          "diameter and wavelength must be positive");
  if (mode == RelayMode::order_of_magnitude) {
    const double size = d / 100.0;
    return size * size * (300e-9 / wavelength) * 3e10;
  }
  return d * d / (beam::diameter_coefficient() * wavelength);
}

std::uint64_t relay_count(double d, double wavelength, double distance, RelayMode mode) {
  require(positive_finite(distance), "distance must be positive");
  const double spacing = relay_spacing(d, wavelength, mode);
  const double ratio = distance / spacing;
  if (!(ratio < 1e18)) fail(ErrorKind::numeric, "relay count overflows");
  auto n = static_cast<std::uint64_t>(std::max(1.0, std::ceil(ratio)));
  // ceil() of a rounded quotient can be off by one; settle against the
  // defining inequality directly.
  while (distance / static_cast<double>(n) > spacing) ++n;
  while (n > 1 && distance / static_cast<double>(n - 1) <= spacing) --n;
  return n;
}

double albi_resolution(double wavelength, double baseline) {
  require(positive_finite(wavelength) && positive_finite(baseline),
          "wavelength and baseline must be positive");
  return wavelength / baseline;
}

}  // namespace iqc::channels

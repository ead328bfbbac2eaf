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

#include <cstdint>
#include <span>
#include <string_view>

namespace iqc::channels {

/// Per-mechanism erasure probabilities and their independent combination.
struct ErasureBudget {
  double extinction_eps = 0.0;
  double atmosphere_eps = 0.0;
  double beam_eps = 0.0;
  double combined = 0.0;

  /// Builds a budget with `combined` filled in; each input must be in [0,1].
  static ErasureBudget make(double extinction, double atmosphere, double beam);
};

enum class Tier { q_positive, q2_only, infeasible };

/// Gates in the order they are checked when naming the binding constraint.
enum class Constraint { wavelength_bound, depolarization, beam, extinction, atmosphere, none };

std::string_view to_string(Tier t);
std::string_view to_string(Constraint c);

struct ChannelVerdict {
  bool q_positive = false;
  bool q2_positive = false;
  double q_rate_bound = 0.0;
  Constraint binding_constraint = Constraint::none;

  Tier tier() const {
    return q_positive ? Tier::q_positive : (q2_positive ? Tier::q2_only : Tier::infeasible);
  }
};

/// Q = 1 - 2 eps below 1/2, zero otherwise.
double erasure_capacity(double eps);

/// 1 - prod(1 - eps_i); 0 for an empty list.
double combine_erasures(std::span<const double> eps);

/// eps < 1/3 -> q_positive, eps < 2/3 -> q2_only, otherwise infeasible.
Tier depolarizing_feasibility(double eps);

/// 2 L / c.
double q2_roundtrip_delay(double distance);

enum class RelayMode { order_of_magnitude, exact };

std::string_view to_string(RelayMode m);

/// Hop length at which an element of diameter `d` suffices. The
/// order-of-magnitude mode is (D / 100 m)^2 (300 nm / lambda) 3e10 m; the
/// exact mode is D^2 / (c1 lambda), c1 = beam::diameter_coefficient().
double relay_spacing(double d, double wavelength, RelayMode mode = RelayMode::exact);

/// Smallest n >= 1 with distance / n <= relay_spacing(d, wavelength, mode).
std::uint64_t relay_count(double d, double wavelength, double distance,
                          RelayMode mode = RelayMode::exact);

/// Angular resolution lambda / baseline of an interferometer, in radians.
double albi_resolution(double wavelength, double baseline);

}  // namespace iqc::channels

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
#include <optional>

#include "iqc/feasibility.hpp"

// Photon-by-photon simulation of a link, used to cross-check the analytic
// erasure and depolarisation probabilities.
//
// Each photon i draws from its own Philox4x32-10 stream keyed by the 64-bit
// seed with counter (i, block). Photons are processed in fixed blocks of
// kBlockSize and event counts are summed in block order, so results are
// bit-identical for any thread count.

namespace iqc::montecarlo {

inline constexpr std::uint64_t kBlockSize = 1u << 16;
inline constexpr std::uint64_t kMaxSimulatedHops = 1000;

struct SimConfig {
  feasibility::Scenario scenario;
  std::uint64_t n_photons = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency; never affects results
};

struct Estimate {
  std::uint64_t events = 0;
  double empirical = 0.0;
  double standard_error = 0.0;  // sqrt(p(1-p)/n) at the empirical p
  double analytic = 0.0;
  std::optional<double> z_score;  // absent when the standard error is zero

  /// |z| < limit, or an exact match when z is undefined.
  bool agrees(double z_limit) const;

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

Estimate make_estimate(std::uint64_t events, std::uint64_t n, double analytic);

struct SimReport {
  std::uint64_t n_photons = 0;
  std::uint64_t seed = 0;
  std::uint64_t simulated_hops = 1;
  Estimate extinction;
  Estimate beam;
  Estimate depolarization;
  Estimate combined_loss;  // lost to extinction or beam

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// Per photon: extinction is Bernoulli(1 - exp(-n_H sigma L)); for every
/// simulated hop the transverse offset at each aperture is r = dx sqrt(-2 ln u)
/// with the optimiser's dx, and the photon is lost if r > D/2 at either end;
/// depolarisation is Bernoulli(N / (1 + N)). In compose mode every relay hop
/// is simulated (at most kMaxSimulatedHops); in ideal mode a single hop.
SimReport simulate_link(const SimConfig& cfg);

/// Fraction of n radial Gaussian samples (per-axis spread sigma) within d/2.
double simulate_catch(double d, double sigma, std::uint64_t n, std::uint64_t seed,
                      unsigned threads = 0);

}  // namespace iqc::montecarlo

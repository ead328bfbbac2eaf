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

#include "iqc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "iqc/error.hpp"
#include "iqc/parallel.hpp"
#include "iqc/philox.hpp"

namespace iqc::montecarlo {

namespace {

struct Counts {
  std::uint64_t extinct = 0;
  std::uint64_t beam_lost = 0;
  std::uint64_t depolarized = 0;
  std::uint64_t lost = 0;
};

std::uint64_t block_count(std::uint64_t n) { return (n + kBlockSize - 1) / kBlockSize; }

/// Radial offset of a sample from a 2-D Gaussian with per-axis spread dx.
double radial_offset(double dx, double u) { return dx * std::sqrt(-2.0 * std::log(u)); }

}  // namespace

bool Estimate::agrees(double z_limit) const {
  if (z_score) return std::fabs(*z_score) < z_limit;
  return empirical == analytic;
}

Estimate make_estimate(std::uint64_t events, std::uint64_t n, double analytic) {
  require(n > 0, "estimate needs at least one trial");
  Estimate e;
  e.events = events;
  e.empirical = static_cast<double>(events) / static_cast<double>(n);
  e.standard_error = std::sqrt(e.empirical * (1.0 - e.empirical) / static_cast<double>(n));
  e.analytic = analytic;
  if (e.standard_error > 0.0) e.z_score = (e.empirical - analytic) / e.standard_error;
  return e;
}

SimReport simulate_link(const SimConfig& cfg) {
  require(cfg.n_photons >= 1, "simulation needs at least one photon");
  const auto& s = cfg.scenario;
  const auto analytic = feasibility::evaluate_scenario(s);

  const bool compose = s.relay_aggregation == feasibility::RelayAggregation::compose;
  const std::uint64_t hops = compose ? s.relay_n : 1;
  if (hops > kMaxSimulatedHops)
    fail(ErrorKind::invalid_argument,
         "simulation supports at most " + std::to_string(kMaxSimulatedHops) + " composed hops");

  const double p_ext = analytic.budget.extinction_eps;
  const double p_depol = analytic.depol_eps;
  const double r1 = 0.5 * s.d1;
  const double r2 = 0.5 * s.d2;
  const double dx1 = analytic.beam_dx1;
  const double dx2 = analytic.beam_dx2;

  std::vector<Counts> per_block(block_count(cfg.n_photons));
  parallel_for(per_block.size(), cfg.threads, [&](std::size_t b) {
    Counts c;
    const std::uint64_t first = b * kBlockSize;
    const std::uint64_t last = std::min(cfg.n_photons, first + kBlockSize);
    for (std::uint64_t i = first; i < last; ++i) {
      rng::PhotonStream rs(cfg.seed, i);
      const bool extinct = rs.next() < p_ext;
      bool beam_lost = false;
      for (std::uint64_t h = 0; h < hops; ++h) {
        const bool miss1 = radial_offset(dx1, rs.next()) > r1;
        const bool miss2 = radial_offset(dx2, rs.next()) > r2;
        beam_lost = beam_lost || miss1 || miss2;
      }
      const bool depolarized = rs.next() < p_depol;
      c.extinct += extinct;
      c.beam_lost += beam_lost;
      c.depolarized += depolarized;
      c.lost += extinct || beam_lost;
    }
    per_block[b] = c;
  });

  Counts total;
  for (const auto& c : per_block) {
    total.extinct += c.extinct;
    total.beam_lost += c.beam_lost;
    total.depolarized += c.depolarized;
    total.lost += c.lost;
  }

  const double beam_analytic = compose ? analytic.budget.beam_eps : analytic.beam_eps_per_hop;
  SimReport rep;
  rep.n_photons = cfg.n_photons;
  rep.seed = cfg.seed;
  rep.simulated_hops = hops;
  rep.extinction = make_estimate(total.extinct, cfg.n_photons, p_ext);
  rep.beam = make_estimate(total.beam_lost, cfg.n_photons, beam_analytic);
  rep.depolarization = make_estimate(total.depolarized, cfg.n_photons, p_depol);
  rep.combined_loss =
      make_estimate(total.lost, cfg.n_photons, 1.0 - (1.0 - p_ext) * (1.0 - beam_analytic));
  return rep;
}

double simulate_catch(double d, double sigma, std::uint64_t n, std::uint64_t seed,
                      unsigned threads) {
  require(std::isfinite(d) && d > 0.0 && std::isfinite(sigma) && sigma > 0.0,
          "aperture and spread must be positive");
  require(n >= 1, "need at least one sample");
  const double radius = 0.5 * d;
  std::vector<std::uint64_t> caught(block_count(n));
  parallel_for(caught.size(), threads, [&](std::size_t b) {
    std::uint64_t k = 0;
    const std::uint64_t first = b * kBlockSize;
    const std::uint64_t last = std::min(n, first + kBlockSize);
    for (std::uint64_t i = first; i < last; ++i) {
      rng::PhotonStream rs(seed, i);
      k += radial_offset(sigma, rs.next()) <= radius;
    }
    caught[b] = k;
  });
  std::uint64_t total = 0;
  for (auto k : caught) total += k;
  return static_cast<double>(total) / static_cast<double>(n);
}

}  // namespace iqc::montecarlo

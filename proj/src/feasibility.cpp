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

#include "iqc/feasibility.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "iqc/beam.hpp"
#include "iqc/error.hpp"
#include "iqc/parallel.hpp"

namespace iqc::feasibility {

namespace {

using channels::Constraint;
using channels::Tier;

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

/// 1 - (1 - p)^n without cancellation for small p.
double compose_hops(double p, std::uint64_t n) {
  if (n == 1 || p == 0.0) return p;
  if (p >= 1.0) return 1.0;
  return -std::expm1(static_cast<double>(n) * std::log1p(-p));
}

struct ErasureGate {
  bool passed;
  Constraint culprit;  // meaningful only when !passed
};

ErasureGate erasure_gate(const channels::ErasureBudget& b, ErasurePolicy policy, double level) {
  const std::array<std::pair<Constraint, double>, 3> parts{{
      {Constraint::beam, b.beam_eps},
      {Constraint::extinction, b.extinction_eps},
      {Constraint::atmosphere, b.atmosphere_eps},
  }};
  for (const auto& [which, eps] : parts)
    if (eps >= level) return {false, which};
  if (policy == ErasurePolicy::per_mechanism || b.combined < level) return {true, Constraint::none};

  // Combined budget exceeded with every mechanism individually below the
  // level: attribute it to the largest contributor (earlier gate on ties).
  auto largest = parts.front();
  for (const auto& p : parts)
    if (p.second > largest.second) largest = p;
  return {false, largest.first};
}

double gated_erasure(const channels::ErasureBudget& b, ErasurePolicy policy) {
  if (policy == ErasurePolicy::combined) return b.combined;
  return std::max({b.beam_eps, b.extinction_eps, b.atmosphere_eps});
}

}  // namespace

std::string_view to_string(ReceiverSite s) { return s == ReceiverSite::ground ? "ground" : "space"; }

std::string_view to_string(ErasurePolicy p) {
  return p == ErasurePolicy::combined ? "combined" : "per_mechanism";
}

std::string_view to_string(RelayAggregation a) {
  return a == RelayAggregation::compose ? "compose" : "ideal";
}

void Scenario::validate() const {
  require(positive_finite(distance), "scenario distance must be positive");
  require(positive_finite(wavelength), "scenario wavelength must be positive");
  require(positive_finite(d1) && positive_finite(d2), "scenario apertures must be positive");
  require(std::isfinite(n_H) && n_H >= 0.0, "scenario n_H must be >= 0");
  require(relay_n >= 1, "scenario relay_n must be >= 1");
  thresholds.validate();
  require(thresholds.eps_erasure <= 0.5, "erasure threshold for Q must not exceed 1/2");
  if (!extinction) fail(ErrorKind::data, "scenario has no extinction curve");
  if (!background) fail(ErrorKind::data, "scenario has no background model");
  if (receiver_site == ReceiverSite::ground && !atmosphere)
    fail(ErrorKind::data, "ground receiver requires atmosphere bands");
}

LinkReport evaluate_scenario(const Scenario& s) {
  s.validate();
  LinkReport r;
  const double hop = s.distance / static_cast<double>(s.relay_n);

  // Erasure mechanisms.
  r.extinction_eps_per_hop = extinction::extinction_probability(*s.extinction, s.wavelength, hop, s.n_H);
  const double ext_total = compose_hops(r.extinction_eps_per_hop, s.relay_n);

  const bool blocked = s.receiver_site == ReceiverSite::ground &&
                       extinction::atmosphere_blocked(*s.atmosphere, s.wavelength);
  const double atm = blocked ? 1.0 : 0.0;

  const auto jc = beam::optimize_joint_catch(beam::AperturePair(s.d1, s.d2), s.wavelength, hop);
  r.beam_dx1 = jc.dx1;
  r.beam_dx2 = jc.dx2;
  r.beam_eps_per_hop = std::clamp(1.0 - jc.probability, 0.0, 1.0);
  const double beam_eps = s.relay_aggregation == RelayAggregation::compose
                              ? compose_hops(r.beam_eps_per_hop, s.relay_n)
                              : r.beam_eps_per_hop;
  r.budget = channels::ErasureBudget::make(ext_total, atm, beam_eps);

  // Depolarisation, both routes.
  const double T = s.background->cmb_temperature();
  r.background_intensity = s.background->total(s.wavelength);
  r.background_photons = background::background_photon_count(r.background_intensity, s.wavelength);
  r.depol_eps = background::depolarizing_epsilon(r.background_photons);
  r.depol_eps_cmb_rj = background::depolarizing_epsilon(background::background_photon_count(
      background::rayleigh_jeans_intensity(T, s.wavelength), s.wavelength));

  const auto& th = s.thresholds;
  r.max_wavelength_q = background::max_wavelength(th.eps_q, T);
  r.max_wavelength_q2 = background::max_wavelength(th.eps_q2, T);
  r.max_wavelength_q_planck = background::max_wavelength_planck(th.eps_q, T);
  r.max_wavelength_q2_planck = background::max_wavelength_planck(th.eps_q2, T);

  auto depol_tier = [&](double eps) {
    return eps < th.eps_q ? Tier::q_positive : (eps < th.eps_q2 ? Tier::q2_only : Tier::infeasible);
  };
  const Tier wavelength_tier = s.wavelength < r.max_wavelength_q    ? Tier::q_positive
                               : s.wavelength < r.max_wavelength_q2 ? Tier::q2_only
                                                                    : Tier::infeasible;
  r.depolarization_paths_agree = depol_tier(r.depol_eps) == wavelength_tier;

  // Verdict.
  const auto erasure_q = erasure_gate(r.budget, s.policy, th.eps_erasure);
  const auto erasure_q2 = erasure_gate(r.budget, s.policy, th.eps_erasure_q2);
  const bool wl_q = wavelength_tier == Tier::q_positive;
  const bool wl_q2 = wavelength_tier != Tier::infeasible;
  const bool depol_q = r.depol_eps < th.eps_q;
  const bool depol_q2 = r.depol_eps < th.eps_q2;

  auto& v = r.verdict;
  v.q_positive = wl_q && depol_q && erasure_q.passed;
  v.q2_positive = v.q_positive || (wl_q2 && depol_q2 && erasure_q2.passed);
  v.q_rate_bound = v.q_positive ? channels::erasure_capacity(gated_erasure(r.budget, s.policy)) : 0.0;
  if (!wl_q)
    v.binding_constraint = Constraint::wavelength_bound;
  else if (!depol_q)
    v.binding_constraint = Constraint::depolarization;
  else if (!erasure_q.passed)
    v.binding_constraint = erasure_q.culprit;
  else
    v.binding_constraint = Constraint::none;

  r.min_diameter_required = beam::min_diameter(s.wavelength, s.distance);
  r.q2_delay = channels::q2_roundtrip_delay(s.distance);
  r.sender_intensity_floor = background::min_sender_intensity(r.background_intensity, th.eps_q);
  return r;
}

std::vector<ScanRow> scan_wavelengths(const Scenario& tmpl, std::span<const double> grid,
                                      unsigned threads) {
  std::vector<ScanRow> rows(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    Scenario s = tmpl;
    s.wavelength = grid[i];
    const LinkReport r = evaluate_scenario(s);
    rows[i] = {grid[i],
               r.budget.extinction_eps,
               r.budget.atmosphere_eps,
               r.budget.beam_eps,
               r.depol_eps,
               r.verdict.tier(),
               r.verdict.binding_constraint,
               r.min_diameter_required};
  });
  return rows;
}

std::vector<double> wavelength_grid(double lo, double hi, std::size_t points, bool log_spaced) {
  require(positive_finite(lo) && positive_finite(hi) && lo <= hi, "grid needs 0 < lo <= hi");
  require(points >= 1, "grid needs at least one point");
  if (points == 1) return {lo};
  std::vector<double> grid(points);
  const double denom = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / denom;
    grid[i] = log_spaced ? std::exp(std::log(lo) + t * std::log(hi / lo)) : lo + t * (hi - lo);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

MinDesign solve_min_design(double distance, double wavelength) {
  MinDesign design{beam::min_diameter(wavelength, distance), {}};
  std::uint64_t n = 1;
  for (int k = 0; k <= 8; ++k, n *= 10) {
    const double element =
        std::sqrt(beam::diameter_coefficient() * wavelength * distance / static_cast<double>(n));
    design.relay_options.push_back({n, element});
  }
  return design;
}

}  // namespace iqc::feasibility

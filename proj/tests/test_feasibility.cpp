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

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "doctest.h"
#include "iqc/beam.hpp"
#include "iqc/error.hpp"
#include "iqc/feasibility.hpp"
#include "iqc/units.hpp"

using namespace iqc;
using namespace iqc::feasibility;
using channels::Constraint;
using channels::Tier;
using doctest::Approx;

namespace {

const double kPc = constants::parsec;

std::shared_ptr<const extinction::ExtinctionCurve> flat_curve(double sigma) {
  return std::make_shared<const extinction::ExtinctionCurve>(
      std::vector<Sample>{{1e-13, sigma}, {1e3, sigma}}, "flat", "test");
}

Scenario space_link(double d, double lambda = 300e-9, double L = kPc) {
  Scenario s;
  s.distance = L;
  s.wavelength = lambda;
  s.d1 = s.d2 = d;
  s.receiver_site = ReceiverSite::space;
  s.extinction = flat_curve(0.0);
  s.background = std::make_shared<const background::BackgroundModel>(background::BackgroundModel::cmb_only());
  return s;
}

// Needed for an extinction probability p over distance L at the default density.
double sigma_for(double p, double L) { return -std::log1p(-p) / (constants::n_H_default * L); }

int rank(Tier t) { return static_cast<int>(t); }

}  // namespace

TEST_SUITE("feasibility") {

TEST_CASE("large apertures in space are q_positive") {
  const auto r = evaluate_scenario(space_link(200e3));
  CHECK(r.verdict.q_positive);
  CHECK(r.verdict.q2_positive);
  CHECK(r.verdict.tier() == Tier::q_positive);
  CHECK(r.verdict.binding_constraint == Constraint::none);
  CHECK(r.budget.beam_eps < 0.5);
  CHECK(r.verdict.q_rate_bound == Approx(1 - 2 * r.budget.combined).epsilon(1e-15));
  CHECK(r.min_diameter_required == Approx(85067.9180492456).epsilon(1e-12));
  CHECK(r.depolarization_paths_agree);
  CHECK(r.beam_dx1 * r.beam_dx2 == Approx(beam::min_radius_product(300e-9, kPc)).epsilon(1e-12));
}

TEST_CASE("small apertures are limited by the beam") {
  const auto r = evaluate_scenario(space_link(50e3));
  CHECK_FALSE(r.verdict.q_positive);
  CHECK(r.verdict.binding_constraint == Constraint::beam);
  CHECK(r.verdict.q_rate_bound == 0.0);
  CHECK(r.budget.beam_eps > 0.5);
}

TEST_CASE("wavelength above the Q bound is two-way only") {
  auto s = space_link(1e9, 0.30);
  const auto r = evaluate_scenario(s);
  CHECK_FALSE(r.verdict.q_positive);
  CHECK(r.verdict.q2_positive);
  CHECK(r.verdict.tier() == Tier::q2_only);
  CHECK(r.verdict.binding_constraint == Constraint::wavelength_bound);
  CHECK(r.max_wavelength_q == Approx(0.265300124182051).epsilon(1e-12));
  CHECK(r.max_wavelength_q2 == Approx(1.06120049672821).epsilon(1e-12));
  CHECK(r.max_wavelength_q_planck > r.max_wavelength_q);

  s.wavelength = 1.2;
  const auto far = evaluate_scenario(s);
  CHECK(far.verdict.tier() == Tier::infeasible);
  CHECK(far.verdict.binding_constraint == Constraint::wavelength_bound);
}

TEST_CASE("Rayleigh-Jeans and Planck routes can disagree near the bound") {
  const auto r = evaluate_scenario(space_link(1e9, 0.266));
  CHECK_FALSE(r.depolarization_paths_agree);
  CHECK(r.depol_eps < 1.0 / 3.0);
  CHECK(r.depol_eps_cmb_rj > 1.0 / 3.0);
  CHECK(r.verdict.binding_constraint == Constraint::wavelength_bound);
}

TEST_CASE("bright extra background binds on depolarization") {
  auto s = space_link(1e6, 500e-9);
  auto model = background::BackgroundModel::cmb_only();
  model.add_component(background::parse_background_component(
      "wavelength_m,intensity_si\n1e-7,1e-3\n1e-5,1e-3\n", "bright"));
  s.background = std::make_shared<const background::BackgroundModel>(model);
  const auto r = evaluate_scenario(s);
  CHECK(r.depol_eps > 2.0 / 3.0);
  CHECK(r.verdict.tier() == Tier::infeasible);
  CHECK(r.verdict.binding_constraint == Constraint::depolarization);
  CHECK(r.sender_intensity_floor == Approx(2 * r.background_intensity).epsilon(1e-12));
}

TEST_CASE("ground receiver inside a blocked band") {
  auto s = space_link(200e3);
  s.receiver_site = ReceiverSite::ground;
  CHECK_THROWS_AS(evaluate_scenario(s), Error);
  s.atmosphere = std::make_shared<const extinction::AtmosphereBands>(
      extinction::load_atmosphere_bands("builtin:ground"));
  const auto r = evaluate_scenario(s);
  CHECK(r.budget.atmosphere_eps == 1.0);
  CHECK(r.verdict.binding_constraint == Constraint::atmosphere);
  CHECK(r.verdict.tier() == Tier::infeasible);

  s.wavelength = 500e-9;
  const auto open = evaluate_scenario(s);
  CHECK(open.budget.atmosphere_eps == 0.0);
}

TEST_CASE("erasure policies") {
  auto s = space_link(1.2 * beam::min_diameter(300e-9, kPc));
  s.extinction = flat_curve(sigma_for(0.4, kPc));
  const auto combined = evaluate_scenario(s);
  REQUIRE(combined.budget.extinction_eps == Approx(0.4).epsilon(1e-12));
  REQUIRE(combined.budget.beam_eps > 0.2);
  REQUIRE(combined.budget.beam_eps < 0.4);
  CHECK_FALSE(combined.verdict.q_positive);
  CHECK(combined.verdict.binding_constraint == Constraint::extinction);

  s.policy = ErasurePolicy::per_mechanism;
  const auto per = evaluate_scenario(s);
  CHECK(per.verdict.q_positive);
  CHECK(per.verdict.q_rate_bound == Approx(0.2).epsilon(1e-12));
}

TEST_CASE("property: combined policy is never more capable than per-mechanism") {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double lambda = 1e-7 * std::pow(10.0, 7 * u(gen));
    const double L = kPc * std::pow(10.0, 2 * u(gen) - 1);
    const double dmin = beam::min_diameter(lambda, L);
    auto s = space_link(dmin * std::pow(10.0, u(gen) - 0.3), lambda, L);
    s.d2 = s.d1 * std::pow(10.0, u(gen) - 0.5);
    s.extinction = flat_curve(sigma_for(0.7 * u(gen), L));
    if (u(gen) < 0.5) {
      s.receiver_site = ReceiverSite::ground;
      s.atmosphere = std::make_shared<const extinction::AtmosphereBands>(
          extinction::load_atmosphere_bands("builtin:ground"));
    }
    s.relay_n = 1 + static_cast<std::uint64_t>(u(gen) * 5);
    const auto c = evaluate_scenario(s);
    s.policy = ErasurePolicy::per_mechanism;
    const auto p = evaluate_scenario(s);
    REQUIRE(rank(c.verdict.tier()) >= rank(p.verdict.tier()));
    REQUIRE(c.verdict.q_rate_bound <= p.verdict.q_rate_bound + 1e-15);
    REQUIRE((c.verdict.q_rate_bound > 0) == c.verdict.q_positive);
    REQUIRE((!c.verdict.q_positive || c.verdict.q2_positive));
  }
}

TEST_CASE("verdict flips at the minimum diameter") {
  const double dmin = beam::min_diameter(300e-9, kPc);
  CHECK_FALSE(evaluate_scenario(space_link(dmin * (1 - 1e-6))).verdict.q_positive);
  CHECK(evaluate_scenario(space_link(dmin * (1 + 1e-6))).verdict.q_positive);

  // coarse scan: the first q_positive grid point is the first one above dmin
  const double lo = 0.5 * dmin, step = dmin / 997.0;
  double first = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double d = lo + i * step;
    if (evaluate_scenario(space_link(d)).verdict.q_positive) {
      first = d;
      break;
    }
  }
  CHECK(first > dmin);
  CHECK(first - dmin <= step);
}

TEST_CASE("relay aggregation") {
  const double L = kPc;
  const double per_hop = beam::min_diameter(300e-9, L / 4);
  auto s = space_link(per_hop * (1 + 1e-6));
  s.relay_n = 4;
  const auto comp = evaluate_scenario(s);
  CHECK(comp.beam_eps_per_hop < 0.5);
  CHECK(comp.beam_eps_per_hop == Approx(0.5).epsilon(1e-5));
  CHECK(comp.budget.beam_eps == Approx(1 - std::pow(1 - comp.beam_eps_per_hop, 4)).epsilon(1e-12));
  CHECK_FALSE(comp.verdict.q_positive);

  s.relay_aggregation = RelayAggregation::ideal;
  const auto ideal = evaluate_scenario(s);
  CHECK(ideal.budget.beam_eps == comp.beam_eps_per_hop);
  CHECK(ideal.verdict.q_positive);

  // extinction composes exactly over hops
  s.extinction = flat_curve(sigma_for(0.3, L));
  const auto ext = evaluate_scenario(s);
  CHECK(ext.budget.extinction_eps == Approx(0.3).epsilon(1e-12));
}

TEST_CASE("relay consistency with the minimum design") {
  const double L = 1.3 * kPc, lambda = 320e-9;
  const auto design = solve_min_design(L, lambda);
  for (const auto& opt : design.relay_options) {
    auto s = space_link(opt.element_diameter, lambda, L);
    s.relay_n = opt.n;
    const auto r = evaluate_scenario(s);
    REQUIRE(r.beam_eps_per_hop <= 0.5 + 1e-9);
    REQUIRE(r.beam_eps_per_hop == Approx(0.5).epsilon(1e-8));
  }
}

TEST_CASE("solve_min_design") {
  const auto d = solve_min_design(1.30 * kPc, 320e-9);
  CHECK(d.d_min == Approx(100173.267947642).epsilon(1e-12));
  REQUIRE(d.relay_options.size() == 9);
  CHECK(d.relay_options[0].n == 1);
  CHECK(d.relay_options[0].element_diameter == Approx(d.d_min).epsilon(1e-14));
  CHECK(d.relay_options[4].n == 10000);
  CHECK(d.relay_options[4].element_diameter == Approx(d.d_min / 100).epsilon(1e-14));
  CHECK(d.relay_options[8].n == 100000000);
  CHECK(solve_min_design(kPc, 300e-9).d_min == Approx(85067.9180492456).epsilon(1e-12));
}

TEST_CASE("scenario validation") {
  auto s = space_link(1e5);
  s.relay_n = 0;
  CHECK_THROWS_AS(evaluate_scenario(s), Error);
  s = space_link(-1.0);
  CHECK_THROWS_AS(evaluate_scenario(s), Error);
  s = space_link(1e5);
  s.extinction.reset();
  CHECK_THROWS_AS(evaluate_scenario(s), Error);
  s = space_link(1e5);
  s.thresholds.eps_erasure = 0.6;
  CHECK_THROWS_AS(evaluate_scenario(s), Error);
  s = space_link(1e5, 1e4);
  CHECK_THROWS_AS(evaluate_scenario(s), Error);
}

TEST_CASE("wavelength grid") {
  const auto g = wavelength_grid(100e-9, 1.0, 100, true);
  REQUIRE(g.size() == 100);
  CHECK(g.front() == 100e-9);
  CHECK(g.back() == 1.0);
  for (std::size_t i = 1; i < g.size(); ++i)
    REQUIRE(g[i] / g[i - 1] == Approx(std::pow(1e7, 1.0 / 99)).epsilon(1e-12));
  const auto lin = wavelength_grid(1.0, 2.0, 3, false);
  CHECK(lin[1] == 1.5);
  CHECK(wavelength_grid(1.0, 2.0, 1, true).size() == 1);
  CHECK_THROWS_AS(wavelength_grid(2.0, 1.0, 3, true), Error);
  CHECK_THROWS_AS(wavelength_grid(1.0, 2.0, 0, true), Error);
}

TEST_CASE("scan_wavelengths") {
  auto s = space_link(200e3);
  s.extinction = std::make_shared<const extinction::ExtinctionCurve>(
      extinction::load_extinction_curve("builtin:illustrative"));

  const std::vector<double> one{300e-9};
  const auto single = scan_wavelengths(s, one, 1);
  const auto r = evaluate_scenario(s);
  REQUIRE(single.size() == 1);
  CHECK(single[0].eps_beam == r.budget.beam_eps);
  CHECK(single[0].eps_ext == r.budget.extinction_eps);
  CHECK(single[0].tier == r.verdict.tier());
  CHECK(single[0].binding == r.verdict.binding_constraint);

  const auto grid = wavelength_grid(100e-9, 1.0, 100, true);
  const auto rows = scan_wavelengths(s, grid, 1);
  const auto rows4 = scan_wavelengths(s, grid, 4);
  REQUIRE(rows.size() == 100);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].wavelength == grid[i]);
    REQUIRE(rows[i].eps_beam == rows4[i].eps_beam);
    REQUIRE(rows[i].tier == rows4[i].tier);
    REQUIRE(rows[i].min_diameter / std::sqrt(rows[i].wavelength) ==
            Approx(rows[0].min_diameter / std::sqrt(rows[0].wavelength)).epsilon(1e-12));
  }

  s.extinction = flat_curve(0.0);
  const auto long_grid = wavelength_grid(1.07, 100.0, 50, true);
  for (const auto& row : scan_wavelengths(s, long_grid)) {
    REQUIRE(row.tier == Tier::infeasible);
    REQUIRE(row.binding == Constraint::wavelength_bound);
  }
}

}  // TEST_SUITE

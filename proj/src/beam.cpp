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

#include "iqc/beam.hpp"

#include <cmath>
#include <numbers>

#include "iqc/error.hpp"

namespace iqc::beam {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498949;  // (sqrt 5 - 1) / 2
constexpr double kSearchTolerance = 1e-12;
constexpr int kMaxIterations = 400;

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

double diameter_coefficient() {
  static const double coeff = std::log(2.0 / (3.0 - 2.0 * std::numbers::sqrt2)) / kPi;
  return coeff;
}

BeamGeometry::BeamGeometry(double wavelength, double waist_radius)
    : wavelength_(wavelength), waist_radius_(waist_radius) {
  require(positive_finite(wavelength), "beam wavelength must be positive");
  require(positive_finite(waist_radius), "beam waist radius must be positive");
  wavenumber_ = 2.0 * kPi / wavelength_;
  rayleigh_range_ = 2.0 * wavenumber_ * waist_radius_ * waist_radius_;
}

AperturePair::AperturePair(double d1, double d2) : d1_(d1), d2_(d2) {
  require(positive_finite(d1) && positive_finite(d2), "aperture diameters must be positive");
  geometric_mean_ = std::sqrt(d1_) * std::sqrt(d2_);
}

double beam_radius(const BeamGeometry& g, double z) {
  require(std::isfinite(z), "beam position must be finite");
  return g.waist_radius() * std::hypot(1.0, z / g.rayleigh_range());
}

double min_radius_product(double wavelength, double distance) {
  require(positive_finite(wavelength) && positive_finite(distance),
          "wavelength and distance must be positive");
  return wavelength * distance / (4.0 * kPi);
}

double optimal_waist(double wavelength, double distance) {
  require(positive_finite(wavelength) && positive_finite(distance),
          "wavelength and distance must be positive");
  return std::sqrt(wavelength * distance / (8.0 * kPi));
}

double catch_probability(double aperture_d, double sigma) {
  require(std::isfinite(aperture_d) && aperture_d >= 0.0, "aperture diameter must be >= 0");
  require(positive_finite(sigma), "beam spread must be positive");
  const double r = aperture_d / sigma;
  return -std::expm1(-r * r / 8.0);
}

JointCatch optimize_joint_catch(const AperturePair& ap, double wavelength, double distance) {
  const double product = min_radius_product(wavelength, distance);
  const double log_product = std::log(product);

  // Objective in s = log(dx1), dx2 = product / dx1. Maximised via log of the
  // joint probability so that far-tail values stay distinguishable.
  auto objective = [&](double s) {
    const double dx1 = std::exp(s);
    const double dx2 = std::exp(log_product - s);
    return std::log(catch_probability(ap.d1(), dx1)) + std::log(catch_probability(ap.d2(), dx2));
  };

  // Bracket 25 e-folds either side of the natural scale sqrt(product * d1/d2).
  const double centre = 0.5 * (log_product + std::log(ap.d1()) - std::log(ap.d2()));
  double lo = centre - 25.0;
  double hi = centre + 25.0;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);

  int iter = 0;
  while (hi - lo > kSearchTolerance * (1.0 + std::fabs(centre))) {
    if (++iter > kMaxIterations)
      fail(ErrorKind::numeric, "joint catch optimisation did not converge");
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = objective(x1);
    }
  }

  const double s = 0.5 * (lo + hi);
  const double dx1 = std::exp(s);
  const double dx2 = product / dx1;
  const double p = catch_probability(ap.d1(), dx1) * catch_probability(ap.d2(), dx2);
  if (!std::isfinite(p)) fail(ErrorKind::numeric, "joint catch probability is not finite");
  return {p, dx1, dx2};
}

double min_diameter(double wavelength, double distance) {
  require(positive_finite(wavelength) && positive_finite(distance),
          "wavelength and distance must be positive");
  return std::sqrt(diameter_coefficient() * wavelength * distance);
}

double required_partner_diameter(double d1, double wavelength, double distance) {
  require(positive_finite(d1), "diameter must be positive");
  const double d = min_diameter(wavelength, distance);
  return d * d / d1;
}

}  // namespace iqc::beam

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

// Diffraction geometry of an ideal Gaussian beam between two circular
// apertures. All lengths in metres.

namespace iqc::beam {

/// Coefficient of lambda*L in the squared minimum diameter:
/// ln(2 / (3 - 2 sqrt 2)) / pi ~= 0.7817.
double diameter_coefficient();

class BeamGeometry {
 public:
  BeamGeometry(double wavelength, double waist_radius);

  double wavelength() const { return wavelength_; }
  double waist_radius() const { return waist_radius_; }
  double wavenumber() const { return wavenumber_; }
  /// z0 = 2 k sigma0^2.
  double rayleigh_range() const { return rayleigh_range_; }

 private:
  double wavelength_;
  double waist_radius_;
  double wavenumber_;
  double rayleigh_range_;
};

class AperturePair {
 public:
  AperturePair(double d1, double d2);

  double d1() const { return d1_; }
  double d2() const { return d2_; }
  double geometric_mean() const { return geometric_mean_; }

 private:
  double d1_;
  double d2_;
  double geometric_mean_;
};

/// sigma_z = sigma0 sqrt(1 + z^2/z0^2), waist at z = 0.
double beam_radius(const BeamGeometry& g, double z);

/// Lower bound lambda L / 4 pi on the product of beam radii a distance L apart.
double min_radius_product(double wavelength, double distance);

/// Waist radius sqrt(lambda L / 8 pi); with the waist at mid-path the radii
/// at +-L/2 saturate min_radius_product.
double optimal_waist(double wavelength, double distance);

/// Fraction of a radial Gaussian of per-axis spread `sigma` falling inside a
/// disk of diameter `aperture_d`: 1 - exp(-D^2 / 8 sigma^2).
double catch_probability(double aperture_d, double sigma);

/// Transverse spreads at the two apertures that maximise the joint catch
/// probability under dx1 * dx2 = lambda L / 4 pi.
struct JointCatch {
  double probability;
  double dx1;
  double dx2;
};

/// Maximises the product of the two catch probabilities over the split of
/// the uncertainty product by golden-section search on log(dx1). Throws
/// ErrorKind::numeric if the search does not reach a 1e-12 relative bracket.
JointCatch optimize_joint_catch(const AperturePair& ap, double wavelength, double distance);

inline double joint_catch_probability(const AperturePair& ap, double wavelength,
                                      double distance) {
  return optimize_joint_catch(ap, wavelength, distance).probability;
}

/// Geometric-mean diameter at which joint_catch_probability is exactly 1/2.
double min_diameter(double wavelength, double distance);

/// D2 such that sqrt(d1 * D2) == min_diameter(wavelength, distance).
double required_partner_diameter(double d1, double wavelength, double distance);

}  // namespace iqc::beam

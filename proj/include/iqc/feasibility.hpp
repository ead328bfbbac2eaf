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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iqc/background.hpp"
#include "iqc/channels.hpp"
#include "iqc/extinction.hpp"
#include "iqc/units.hpp"

namespace iqc::feasibility {

enum class ReceiverSite { ground, space };
enum class ErasurePolicy { combined, per_mechanism };

/// How beam losses of successive relay hops are reported. `compose`
/// multiplies survival across hops; `ideal` treats every relay as a perfect
/// refocusing element and gates on the single-hop loss.
enum class RelayAggregation { compose, ideal };

std::string_view to_string(ReceiverSite s);
std::string_view to_string(ErasurePolicy p);
std::string_view to_string(RelayAggregation a);

/// Where the datasets of a scenario came from, echoed into reports.
struct DataRefs {
  std::string extinction_curve;
  std::optional<std::string> atmosphere_bands;
  std::vector<std::string> background_components;
};

struct Scenario {
  double distance = 0.0;    // m
  double wavelength = 0.0;  // m
  double d1 = 0.0;          // m, sender aperture
  double d2 = 0.0;          // m, receiver aperture
  ReceiverSite receiver_site = ReceiverSite::space;
  double n_H = constants::n_H_default;
  std::uint64_t relay_n = 1;
  background::DepolarizationThresholds thresholds;
  ErasurePolicy policy = ErasurePolicy::combined;
  RelayAggregation relay_aggregation = RelayAggregation::compose;

  std::shared_ptr<const extinction::ExtinctionCurve> extinction;
  std::shared_ptr<const extinction::AtmosphereBands> atmosphere;
  std::shared_ptr<const background::BackgroundModel> background;
  DataRefs refs;

  /// Throws ErrorKind::invalid_argument / data on a malformed scenario.
  void validate() const;
};

struct LinkReport {
  channels::ErasureBudget budget;
  double extinction_eps_per_hop = 0.0;
  double beam_eps_per_hop = 0.0;
  double beam_dx1 = 0.0;  // optimal transverse spreads for one hop
  double beam_dx2 = 0.0;

  double background_intensity = 0.0;  // all components at the wavelength
  double background_photons = 0.0;
  double depol_eps = 0.0;             // from the full background model
  double depol_eps_cmb_rj = 0.0;      // Rayleigh-Jeans CMB closed form
  bool depolarization_paths_agree = true;

  channels::ChannelVerdict verdict;
  double min_diameter_required = 0.0;
  double max_wavelength_q = 0.0;
  double max_wavelength_q2 = 0.0;
  double max_wavelength_q_planck = 0.0;
  double max_wavelength_q2_planck = 0.0;
  double q2_delay = 0.0;
  double sender_intensity_floor = 0.0;
};

/// Composes beam, extinction and background into a verdict. Pure given the
/// scenario and its (immutable, shared) datasets.
LinkReport evaluate_scenario(const Scenario& s);

struct ScanRow {
  double wavelength;
  double eps_ext;
  double eps_atm;
  double eps_beam;
  double eps_depol;
  channels::Tier tier;
  channels::Constraint binding;
  double min_diameter;
};

/// Evaluates `tmpl` at each wavelength; rows are in grid order whatever the
/// thread count (0 = hardware concurrency).
std::vector<ScanRow> scan_wavelengths(const Scenario& tmpl, std::span<const double> grid,
                                      unsigned threads = 0);

/// `points` wavelengths from lo to hi inclusive, log-spaced or linear.
std::vector<double> wavelength_grid(double lo, double hi, std::size_t points, bool log_spaced);

struct RelayOption {
  std::uint64_t n;
  double element_diameter;
};

struct MinDesign {
  double d_min;
  std::vector<RelayOption> relay_options;  // n = 1, 10, ..., 1e8
};

MinDesign solve_min_design(double distance, double wavelength);

}  // namespace iqc::feasibility

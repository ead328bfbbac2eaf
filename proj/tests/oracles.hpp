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

// Reference computations used by the tests. They deliberately avoid the
// library's closed forms: brute-force scans, plain minimisation and
// std::mt19937_64 sampling.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace iqc::test {

/// Waist minimising sigma(-L/2) * sigma(L/2), found numerically.
inline double golden_section_waist(double lambda, double L) {
  const double pi = std::numbers::pi;
  auto product = [&](double log_w) {
    const double w = std::exp(log_w);
    const double z0 = 4.0 * pi * w * w / lambda;
    const double h = 0.5 * L / z0;
    return w * w * (1.0 + h * h);
  };
  double a = std::log(std::sqrt(lambda * L)) - 30.0;
  double b = a + 60.0;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = product(c), fd = product(d);
  for (int i = 0; i < 300 && b - a > 1e-13; ++i) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - g * (b - a); fc = product(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + g * (b - a); fd = product(d);
    }
  }
  return std::exp(0.5 * (a + b));
}

/// Joint catch maximised by a dense grid on the spread split, then two
/// rounds of local refinement.
inline double scan_joint_catch(double d1, double d2, double lambda, double L) {
  const double P = lambda * L / (4.0 * std::numbers::pi);
  auto joint = [&](double dx1) {
    const double dx2 = P / dx1;
    const double a = 1.0 - std::exp(-d1 * d1 / (8.0 * dx1 * dx1));
    const double b = 1.0 - std::exp(-d2 * d2 / (8.0 * dx2 * dx2));
    return a * b;
  };
  double centre = std::log(std::sqrt(P));
  double half = 20.0;
  double best = 0.0;
  for (int round = 0; round < 4; ++round) {
    const int n = 20001;
    double arg = centre;
    for (int i = 0; i < n; ++i) {
      const double x = centre - half + 2.0 * half * i / (n - 1);
      const double v = joint(std::exp(x));
      if (v > best) {
        best = v;
        arg = x;
      }
    }
    centre = arg;
    half *= 2.0 / 1000.0;
  }
  return best;
}

struct McResult {
  double p;
  double se;
};

/// Fraction of 2-D isotropic Gaussian points (std sigma per axis) inside a
/// disk of diameter d.
inline McResult disk_integration(double d, double sigma, std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, sigma);
  const double r2 = 0.25 * d * d;
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double x = normal(gen), y = normal(gen);
    hits += (x * x + y * y <= r2);
  }
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

}  // namespace iqc::test

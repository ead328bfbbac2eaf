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
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

#include "doctest.h"
#include "iqc/error.hpp"
#include "iqc/extinction.hpp"
#include "iqc/units.hpp"

using namespace iqc;
using namespace iqc::extinction;
using doctest::Approx;

namespace {

ExtinctionCurve flat(double sigma) {
  return ExtinctionCurve({{1e-9, sigma}, {1e-3, sigma}}, "flat", "test");
}

std::string error_text(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("extinction") {

TEST_CASE("curve parsing") {
  const auto c = parse_extinction_curve("wavelength_m,sigma_m2\n1e-7,2e-26\n1e-6,3e-27\n", "two", "mem");
  CHECK(c.samples().size() == 2);
  CHECK(c.min_wavelength() == 1e-7);
  CHECK(c.max_wavelength() == 1e-6);
  CHECK(c.name() == "two");

  const std::string unsorted = "# comment\nwavelength_m,sigma_m2\n1e-7,1e-26\n3e-7,1e-26\n2e-7,1e-26\n";
  const auto msg = error_text([&] { parse_extinction_curve(unsorted, "u", "mem"); });
  CHECK(msg.find("mem:5") != std::string::npos);

  const auto neg = error_text([] {
    parse_extinction_curve("wavelength_m,sigma_m2\n1e-7,1e-26\n2e-7,-1e-26\n", "n", "neg.csv");
  });
  CHECK(neg.find("neg.csv:3") != std::string::npos);

  CHECK_THROWS_AS(parse_extinction_curve("lambda,sigma\n1,2\n2,3\n", "h", "mem"), Error);
  CHECK_THROWS_AS(parse_extinction_curve("wavelength_m,sigma_m2\n1e-7,1e-26\n", "one", "mem"), Error);
  CHECK_THROWS_AS(parse_extinction_curve("wavelength_m,sigma_m2\n1e-7,abc\n2e-7,1\n", "x", "mem"),
                  Error);
  CHECK_THROWS_AS(ExtinctionCurve({{1.0, 1.0}, {1.0, 2.0}}, "dup", "t"), Error);
}

TEST_CASE("curve loading from files and builtins") {
  const auto ill = load_extinction_curve("builtin:illustrative");
  CHECK(ill.samples().size() > 50);
  CHECK(ill.min_wavelength() <= 1e-12);
  CHECK(ill.max_wavelength() >= 1.0);

  const auto tr = load_extinction_curve("builtin:transparent");
  CHECK(sigma_at(tr, 300e-9) == 0.0);

  CHECK_THROWS_AS(load_extinction_curve("builtin:nope"), Error);
  CHECK_THROWS_AS(load_extinction_curve("/nonexistent/curve.csv"), Error);

  const auto path = std::filesystem::temp_directory_path() / "iqc_test_curve.csv";
  {
    std::ofstream f(path);
    f << "\xEF\xBB\xBFwavelength_m,sigma_m2\n1e-7,1e-26\n\n1e-6,1e-27\n";
  }
  const auto c = load_extinction_curve(path.string());
  CHECK(c.samples().size() == 2);
  std::filesystem::remove(path);
}

TEST_CASE("sigma_at interpolation") {
  const ExtinctionCurve c({{1e-7, 4e-26}, {1e-6, 1e-26}, {1e-5, 0.0}, {1e-4, 2e-27}}, "c", "t");
  CHECK(sigma_at(c, 1e-6) == 1e-26);
  CHECK(sigma_at(c, 1e-7) == 4e-26);
  CHECK(sigma_at(c, std::sqrt(1e-7 * 1e-6)) == Approx(2e-26).epsilon(1e-12));
  // zero endpoint: linear on that segment
  CHECK(sigma_at(c, 5.5e-6) == Approx(0.5e-26).epsilon(1e-12));
  CHECK(sigma_at(c, 5.5e-5) == Approx(1e-27).epsilon(1e-12));

  CHECK_THROWS_AS(sigma_at(c, 9e-8), Error);
  CHECK_THROWS_AS(sigma_at(c, 2e-4), Error);
  try {
    sigma_at(c, 2e-4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::range);
  }
}

TEST_CASE("property: interpolated values lie between bracketing samples") {
  const auto ill = load_extinction_curve("builtin:illustrative");
  const auto s = ill.samples();
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    for (int k = 0; k < 5; ++k) {
      const double x = s[i].x * std::pow(s[i + 1].x / s[i].x, u(gen));
      const double y = sigma_at(ill, x);
      REQUIRE(y >= std::min(s[i].y, s[i + 1].y) * (1 - 1e-12));
      REQUIRE(y <= std::max(s[i].y, s[i + 1].y) * (1 + 1e-12));
    }
    // continuity at the sample point from both sides
    const double left = sigma_at(ill, s[i + 1].x * (1 - 1e-12));
    REQUIRE(left == Approx(s[i + 1].y).epsilon(1e-9));
  }
}

TEST_CASE("extinction_probability") {
  const double pc = constants::parsec;
  const double n = constants::n_H_default;
  CHECK(extinction_probability(flat(0.0), 1e-6, pc, n) == 0.0);

  const auto c = flat(1e-26);
  const double Lhalf = std::numbers::ln2 / (n * 1e-26);
  CHECK(extinction_probability(c, 1e-6, Lhalf, n) == Approx(0.5).epsilon(1e-15));

  // 1 - exp(-n sigma pc) for sigma = 1e-26 m^2, evaluated independently
  CHECK(extinction_probability(c, 1e-6, pc, n) == Approx(3.53556135132924e-4).epsilon(1e-12));
  // optical depth 0.3536
  CHECK(extinction_probability(flat(1e-23), 1e-6, pc, n) == Approx(0.297857322172278).epsilon(1e-12));

  CHECK_THROWS_AS(extinction_probability(c, 1e-6, -1.0, n), Error);
  CHECK_THROWS_AS(extinction_probability(c, 1e-6, 1.0, -1.0), Error);
  CHECK_THROWS_AS(extinction_probability(c, 1.0, 1.0, n), Error);
}

TEST_CASE("property: path composition and monotonicity") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> lu(-2.0, 2.0);
  const auto c = flat(1e-23);
  const double n = constants::n_H_default;
  for (int i = 0; i < 1000; ++i) {
    const double l1 = constants::parsec * std::pow(10.0, lu(gen));
    const double l2 = constants::parsec * std::pow(10.0, lu(gen));
    const double p1 = extinction_probability(c, 1e-6, l1, n);
    const double p2 = extinction_probability(c, 1e-6, l2, n);
    const double p12 = extinction_probability(c, 1e-6, l1 + l2, n);
    const double composed = 1.0 - (1.0 - p1) * (1.0 - p2);
    REQUIRE(p12 == Approx(composed).epsilon(1e-12));
    REQUIRE(p12 >= std::max(p1, p2));
    REQUIRE(p12 >= 0.0);
    REQUIRE(p12 <= 1.0);
    REQUIRE(extinction_probability(c, 1e-6, l1, 2 * n) >= p1);
    REQUIRE(extinction_probability(flat(2e-23), 1e-6, l1, n) >= p1);
  }
}

TEST_CASE("max_extinction_distance") {
  const double n = constants::n_H_default;
  CHECK(max_extinction_distance(flat(std::numbers::ln2 / n), 1e-6, n) == Approx(1.0).epsilon(1e-15));
  const auto c = flat(1e-26);
  CHECK(max_extinction_distance(c, 1e-6, 2 * n) ==
        Approx(0.5 * max_extinction_distance(c, 1e-6, n)).epsilon(1e-15));
  const double d = max_extinction_distance(c, 1e-6, n);
  CHECK(d == Approx(6.04840e19).epsilon(1e-5));
  CHECK(d / constants::parsec == Approx(1960.15).epsilon(1e-5));
  CHECK(extinction_probability(c, 1e-6, d, n) == Approx(0.5).epsilon(1e-14));
  CHECK(std::isinf(max_extinction_distance(flat(0.0), 1e-6, n)));
}

TEST_CASE("atmosphere bands") {
  const AtmosphereBands bands({{1e-7, 3e-7}, {1e-6, 2e-6}});
  CHECK(atmosphere_blocked(bands, 2e-7));
  CHECK(atmosphere_blocked(bands, 1e-7));
  CHECK_FALSE(atmosphere_blocked(bands, 3e-7));
  CHECK_FALSE(atmosphere_blocked(bands, 5e-7));
  CHECK_FALSE(atmosphere_blocked(bands, 2e-6));
  CHECK_FALSE(atmosphere_blocked(bands, 1e-8));
  CHECK_FALSE(atmosphere_blocked(AtmosphereBands{}, 1e-7));

  CHECK_THROWS_AS(AtmosphereBands({{2e-7, 1e-7}}), Error);
  CHECK_THROWS_AS(AtmosphereBands({{1e-7, 3e-7}, {2e-7, 4e-7}}), Error);
  CHECK_THROWS_AS(AtmosphereBands({{1e-6, 2e-6}, {1e-7, 2e-7}}), Error);

  const auto ground = load_atmosphere_bands("builtin:ground");
  CHECK(ground.blocked().size() >= 5);
  CHECK(atmosphere_blocked(ground, 100e-9));
  CHECK_FALSE(atmosphere_blocked(ground, 500e-9));
  CHECK_FALSE(atmosphere_blocked(ground, 0.21));

  const auto parsed = parse_atmosphere_bands("lo_m,hi_m\n1e-7,2e-7\n", "mem");
  CHECK(parsed.blocked().size() == 1);
  CHECK_THROWS_AS(parse_atmosphere_bands("lo_m,hi_m\n2e-7,1e-7\n", "mem"), Error);
}

}  // TEST_SUITE

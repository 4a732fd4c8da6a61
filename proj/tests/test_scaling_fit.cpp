// Copyright 2026 The qthermo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "catch_amalgamated.hpp"
#include "qthermo/error.hpp"
#include "qthermo/scaling_fit.hpp"

using namespace qthermo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("exact power laws are recovered", "[fit]") {
  for (double s : {-1.0, -0.5, 0.0}) {
    std::vector<std::pair<std::int64_t, double>> pts;
    for (std::int64_t n = 16; n <= 4096; n *= 2) pts.emplace_back(n, 3.7 * std::pow(double(n), s));
    const auto fit = fit_power_law(pts);
    INFO("s=" << s);
    CHECK_THAT(fit.slope, WithinAbs(s, 1e-12));
    CHECK_THAT(fit.intercept, WithinAbs(std::log(3.7), 1e-11));
    CHECK_THAT(fit.r_squared, WithinAbs(1.0, 1e-12));
    CHECK(fit.stderr_slope < 1e-12);
    CHECK(fit.points.size() == pts.size());
  }
}

TEST_CASE("fit refuses too few points and drops invalid ones", "[fit]") {
  std::vector<std::pair<std::int64_t, double>> three{{1, 1.0}, {2, 0.5}, {4, 0.25}};
  CHECK_THROWS_AS(fit_power_law(three), ConfigError);
  three.emplace_back(8, std::nan(""));
  three.emplace_back(16, 0.0);
  CHECK_THROWS_AS(fit_power_law(three), ConfigError);
  three.emplace_back(32, 1.0 / 32.0);
  const auto fit = fit_power_law(three);
  CHECK(fit.points.size() == 4u);
  CHECK_THAT(fit.slope, WithinAbs(-1.0, 1e-12));

  const std::vector<std::pair<std::int64_t, double>> same_n{{4, 1.0}, {4, 2.0}, {4, 3.0}, {4, 4.0}};
  CHECK_THROWS_AS(fit_power_law(same_n), ConfigError);
}

TEST_CASE("noisy fit agrees with textbook OLS sums", "[fit]") {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> noise(0.0, 0.05);
  std::vector<std::pair<std::int64_t, double>> pts;
  for (std::int64_t n = 2; n <= 1024; n *= 2) pts.emplace_back(n, 2.0 * std::pow(double(n), -0.7) * std::exp(noise(gen)));

  // Closed-form simple regression, independent of the QR route.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(pts.size());
  for (auto [n, s] : pts) {
    const double x = std::log(double(n)), y = std::log(s);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / k;
  double rss = 0, tss = 0;
  for (auto [n, s] : pts) {
    const double x = std::log(double(n)), y = std::log(s);
    rss += (y - intercept - slope * x) * (y - intercept - slope * x);
    tss += (y - sy / k) * (y - sy / k);
  }
  const double stderr_slope = std::sqrt(rss / (k - 2) / (sxx - sx * sx / k));

  const auto fit = fit_power_law(pts);
  CHECK_THAT(fit.slope, WithinRel(slope, 1e-10));
  CHECK_THAT(fit.intercept, WithinRel(intercept, 1e-10));
  CHECK_THAT(fit.stderr_slope, WithinRel(stderr_slope, 1e-8));
  CHECK_THAT(fit.r_squared, WithinRel(1.0 - rss / tss, 1e-10));
  CHECK(fit.r_squared < 1.0);
}

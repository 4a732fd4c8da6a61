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

#include <array>
#include <bit>
#include <cmath>
#include <vector>

#include "catch_amalgamated.hpp"
#include "qthermo/estimators.hpp"

using namespace qthermo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("rng streams are keyed by their path", "[rng]") {
  RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  const auto first = a();
  CHECK(first == b());
  CHECK(first != c());
  CHECK(first != d());
  CHECK(a.master_seed() == 42u);
  CHECK(a.stream_index() == 7u);

  const RngStream root(42, 7);
  auto child0 = root.child(0);
  auto child0_again = root.child(0);
  auto child1 = root.child(1);
  const auto x = child0();
  CHECK(x == child0_again());
  CHECK(x != child1());
  CHECK(x != RngStream(42, 7)());
  CHECK(child0.key_path() == std::vector<std::uint64_t>{42, 7, 0});

  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("sample_moments uses the unbiased variance", "[estimators]") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto m = sample_moments(v);
  CHECK(m.mean == 2.5);
  CHECK_THAT(m.std_dev, WithinRel(std::sqrt(5.0 / 3.0), 1e-15));
  CHECK(std::isnan(sample_moments(std::vector<double>{1.0}).std_dev));
}

TEST_CASE("sample_excited_count boundaries", "[estimators]") {
  RngStream rng(1, 0);
  for (int i = 0; i < 100; ++i) CHECK(sample_excited_count(1000000, 1e-15, rng) == 0);
  CHECK(sample_excited_count(17, 0.0, rng) == 0);
  CHECK(sample_excited_count(17, 1.0, rng) == 17);
  CHECK_THROWS_AS(sample_excited_count(5, 1.5, rng), ConfigError);
}

TEST_CASE("sample_excited_count large-N moments", "[estimators][statistical]") {
  RngStream rng(2, 0);
  std::vector<double> draws;
  for (int i = 0; i < 10000; ++i) draws.push_back(static_cast<double>(sample_excited_count(100000, 0.5, rng)));
  const auto m = sample_moments(draws);
  // mean 5e4, variance 2.5e4; standard error of the mean = sqrt(2.5e4/1e4)
  CHECK(std::abs(m.mean - 5e4) <= 5.0 * std::sqrt(2.5e4 / 1e4));
  CHECK_THAT(m.std_dev * m.std_dev, WithinRel(2.5e4, 0.10));
}

TEST_CASE("sample_excited_count small-N pmf matches enumeration", "[estimators][statistical]") {
  // Exhaustive enumeration of the 2^3 equally likely atom configurations.
  std::array<double, 4> exact{};
  for (unsigned s = 0; s < 8; ++s) exact[static_cast<std::size_t>(std::popcount(s))] += 1.0 / 8.0;

  RngStream rng(3, 0);
  std::array<double, 4> freq{};
  const int draws = 1000000;
  for (int i = 0; i < draws; ++i) freq[static_cast<std::size_t>(sample_excited_count(3, 0.5, rng))] += 1.0;
  for (std::size_t k = 0; k < 4; ++k) CHECK_THAT(freq[k] / draws, WithinAbs(exact[k], 1e-3));
}

TEST_CASE("occupation and beta estimates from a count", "[estimators]") {
  CHECK(estimate_beta_from_count(50, 100, 1.0, EstimatorMode::jeffreys).value() == 0.0);
  CHECK(estimate_beta_from_count(5, 10, 1.0, EstimatorMode::jeffreys).value() == 0.0);
  CHECK_FALSE(estimate_beta_from_count(0, 10, 1.0, EstimatorMode::raw).has_value());
  CHECK_FALSE(estimate_beta_from_count(10, 10, 1.0, EstimatorMode::raw).has_value());
  CHECK_THAT(estimate_beta_from_count(25, 100, 1.0, EstimatorMode::raw).value(), WithinRel(std::log(3.0), 1e-15));
  CHECK(std::isfinite(estimate_beta_from_count(0, 10, 1.0, EstimatorMode::jeffreys).value()));
  CHECK(occupation_estimate(0, 10, EstimatorMode::jeffreys).value() == 0.5 / 11.0);
  CHECK_THROWS_AS(occupation_estimate(11, 10, EstimatorMode::raw), ConfigError);
  CHECK(parse_estimator_mode("raw") == EstimatorMode::raw);
  CHECK_THROWS_AS(parse_estimator_mode("mle"), ConfigError);
}

TEST_CASE("thermalizing trials saturate the shot-noise limit", "[estimators][statistical]") {
  const TwoLevelSpec<double> spec(100, 1.0);
  const InverseTemperature<double> beta(1.0);
  const auto batch = run_thermalizing_trials(spec, beta, 100000, EstimatorMode::jeffreys, RngStream(10, 0));
  CHECK(batch.invalid_count == 0);
  CHECK(batch.requested() == 100000);
  CHECK_THAT(batch.sample_std, WithinRel(shot_noise_sigma_beta(spec, beta), 0.05));
}

TEST_CASE("raw estimator on a single atom is always invalid", "[estimators]") {
  const TwoLevelSpec<double> spec(1, 1.0);
  try {
    run_thermalizing_trials(spec, InverseTemperature(0.0), 50, EstimatorMode::raw, RngStream(11, 0));
    FAIL("expected EmptyBatchError");
  } catch (const EmptyBatchError& e) {
    CHECK(e.invalid_count() == 50);
    CHECK(e.trials() == 50);
  }
  CHECK_THROWS_AS(run_thermalizing_trials(spec, InverseTemperature(0.0), 1, EstimatorMode::jeffreys, RngStream(1, 1)),
                  ConfigError);
}

TEST_CASE("quadrupling N halves the spread", "[estimators][statistical]") {
  const InverseTemperature<double> beta(1.0);
  const auto small = run_thermalizing_trials(TwoLevelSpec<double>(100, 1.0), beta, 20000, EstimatorMode::jeffreys,
                                             RngStream(12, 100));
  const auto large = run_thermalizing_trials(TwoLevelSpec<double>(400, 1.0), beta, 20000, EstimatorMode::jeffreys,
                                             RngStream(12, 400));
  CHECK_THAT(large.sample_std / small.sample_std, WithinRel(0.5, 0.10));
}

TEST_CASE("Cramer-Rao compliance and near-saturation", "[estimators][statistical]") {
  for (std::int64_t n : {100, 400, 1600}) {
    for (double x : {0.2, 1.0, 3.0}) {
      const TwoLevelSpec<double> spec(n, 1.0);
      const InverseTemperature<double> beta(x);
      const auto batch = run_thermalizing_trials(spec, beta, 10000, EstimatorMode::jeffreys,
                                                 RngStream(13, static_cast<std::uint64_t>(n)));
      const auto s = thermal_summary(spec, beta);
      INFO("N=" << n << " beta*eps=" << x);
      CHECK(batch.sample_std * batch.sample_std >= 0.95 / s.fisher_info);
      const double ratio = batch.sample_std / shot_noise_sigma_beta(spec, beta);
      CHECK(ratio >= 0.95);
      CHECK(ratio <= 1.10);
    }
  }
}

TEST_CASE("bias decays like 1/N", "[estimators][statistical]") {
  // Frozen regression guard: |bias| * N measured at <= 0.3 over this grid
  // with 2e4 trials per point; C keeps a margin above that.
  constexpr double kBiasC = 1.0;
  for (std::int64_t n : {100, 400, 1600}) {
    for (double x : {0.2, 1.0, 3.0}) {
      const std::int64_t trials = 10000;
      const auto batch = run_thermalizing_trials(TwoLevelSpec<double>(n, 1.0), InverseTemperature(x), trials,
                                                 EstimatorMode::jeffreys, RngStream(14, static_cast<std::uint64_t>(n)));
      INFO("N=" << n << " beta*eps=" << x);
      CHECK(std::abs(batch.sample_mean - x) <=
            3.0 * batch.sample_std / std::sqrt(double(trials)) + kBiasC / static_cast<double>(n));
    }
  }
}

TEST_CASE("thermalizing batches do not depend on thread count", "[estimators]") {
  const TwoLevelSpec<double> spec(64, 1.0);
  const RngStream root(15, 3);
  const auto serial = run_thermalizing_trials(spec, InverseTemperature(0.8), 5000, EstimatorMode::jeffreys, root, {1});
  const auto threaded = run_thermalizing_trials(spec, InverseTemperature(0.8), 5000, EstimatorMode::jeffreys, root, {4});
  CHECK(serial.estimates == threaded.estimates);
  CHECK(serial.sample_std == threaded.sample_std);
  CHECK(serial.sample_mean == threaded.sample_mean);
}

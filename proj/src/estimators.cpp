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

#include "qthermo/estimators.hpp"

#include <boost/random/binomial_distribution.hpp>
#include <cmath>
#include <limits>
#include <string>

namespace qthermo {

EstimatorMode parse_estimator_mode(std::string_view name) {
  if (name == "raw") return EstimatorMode::raw;
  if (name == "jeffreys") return EstimatorMode::jeffreys;
  throw ConfigError("unknown estimator mode '" + std::string(name) + "' (expected raw|jeffreys)");
}

std::string_view to_string(EstimatorMode mode) {
  return mode == EstimatorMode::raw ? "raw" : "jeffreys";
}

SampleMoments sample_moments(std::span<const double> values) {
  const auto n = values.size();
  if (n == 0) return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(n);
  if (n < 2) return {mean, std::numeric_limits<double>::quiet_NaN()};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(n - 1))};
}

TrialBatch collect_batch(std::span<const std::optional<double>> outcomes) {
  TrialBatch batch;
  batch.estimates.reserve(outcomes.size());
  for (const auto& o : outcomes) {
    if (o) {
      batch.estimates.push_back(*o);
    } else {
      ++batch.invalid_count;
    }
  }
  if (batch.estimates.empty()) {
    const auto n = static_cast<std::int64_t>(outcomes.size());
    throw EmptyBatchError("all " + std::to_string(n) + " trials produced invalid estimates",
                          batch.invalid_count, n);
  }
  const auto m = sample_moments(batch.estimates);
  batch.sample_mean = m.mean;
  batch.sample_std = m.std_dev;
  return batch;
}

std::int64_t sample_excited_count(std::int64_t n_atoms, double p, RngStream& rng) {
  if (n_atoms < 0) throw ConfigError("binomial size must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("binomial probability must lie in [0, 1]");
  if (n_atoms == 0 || p == 0.0) return 0;
  if (p == 1.0) return n_atoms;
  boost::random::binomial_distribution<std::int64_t, double> dist(n_atoms, p);
  return dist(rng);
}

std::optional<double> occupation_estimate(std::int64_t k, std::int64_t n, EstimatorMode mode) {
  if (n < 1 || k < 0 || k > n) {
    throw ConfigError("count k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  }
  if (mode == EstimatorMode::jeffreys) {
    return (static_cast<double>(k) + 0.5) / (static_cast<double>(n) + 1.0);
  }
  if (k == 0 || k == n) return std::nullopt;
  return static_cast<double>(k) / static_cast<double>(n);
}

std::optional<double> estimate_beta_from_count(std::int64_t k, std::int64_t n_atoms, double epsilon,
                                               EstimatorMode mode) {
  const auto p_hat = occupation_estimate(k, n_atoms, mode);
  if (!p_hat) return std::nullopt;
  return invert_mean_fraction(*p_hat, epsilon);
}

TrialBatch run_thermalizing_trials(const TwoLevelSpec<double>& spec, InverseTemperature<double> beta_true,
                                   std::int64_t trials, EstimatorMode mode, const RngStream& root,
                                   ExecutionOptions exec) {
  if (trials < 2) throw ConfigError("need at least 2 trials, got " + std::to_string(trials));
  const double p = excitation_probability(spec.epsilon(), beta_true);

  std::vector<std::optional<double>> outcomes(static_cast<std::size_t>(trials));
  parallel_for(trials, exec, [&](std::int64_t i) {
    RngStream rng = root.child(static_cast<std::uint64_t>(i));
    const auto k = sample_excited_count(spec.n_atoms(), p, rng);
    outcomes[static_cast<std::size_t>(i)] = estimate_beta_from_count(k, spec.n_atoms(), spec.epsilon(), mode);
  });
  return collect_batch(outcomes);
}

}  // namespace qthermo

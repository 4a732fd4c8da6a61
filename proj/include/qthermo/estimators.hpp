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

#pragma once

// Monte Carlo model of the thermalizing thermometer: N atoms equilibrate
// with the bath, are isolated, and their total energy k*epsilon is read
// out. k is Binomial(N, p(beta)) and beta is recovered by inverting the
// mean occupation.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qthermo/parallel.hpp"
#include "qthermo/rng.hpp"
#include "qthermo/thermal.hpp"

namespace qthermo {

/// How a count on the boundary (k = 0 or k = N) is handled.
///  raw:      p_hat = k/N, boundary counts are invalid.
///  jeffreys: p_hat = (k + 1/2)/(N + 1), always inside (0, 1).
enum class EstimatorMode { raw, jeffreys };

EstimatorMode parse_estimator_mode(std::string_view name);
std::string_view to_string(EstimatorMode mode);

/// Estimates of one campaign. Statistics cover valid estimates only;
/// sample_std uses the n-1 divisor and is NaN with fewer than two.
struct TrialBatch {
  std::vector<double> estimates;
  std::int64_t invalid_count = 0;
  double sample_mean = 0.0;
  double sample_std = 0.0;

  std::int64_t requested() const noexcept {
    return invalid_count + static_cast<std::int64_t>(estimates.size());
  }
};

struct SampleMoments {
  double mean;
  double std_dev;  // unbiased
};

SampleMoments sample_moments(std::span<const double> values);

/// Collects per-trial outcomes (std::nullopt = invalid) in trial order.
/// Throws EmptyBatchError when no outcome is valid.
TrialBatch collect_batch(std::span<const std::optional<double>> outcomes);

/// Exact Binomial(n_atoms, p) draw. p may sit on 0 or 1, in which case the
/// result is deterministic.
std::int64_t sample_excited_count(std::int64_t n_atoms, double p, RngStream& rng);

/// Occupation-fraction point estimate for k successes in n trials.
/// std::nullopt when the raw estimate lands on the boundary.
std::optional<double> occupation_estimate(std::int64_t k, std::int64_t n, EstimatorMode mode);

std::optional<double> estimate_beta_from_count(std::int64_t k, std::int64_t n_atoms, double epsilon,
                                               EstimatorMode mode);

/// Trial i draws from root.child(i), so the batch does not depend on the
/// thread count.
TrialBatch run_thermalizing_trials(const TwoLevelSpec<double>& spec, InverseTemperature<double> beta_true,
                                   std::int64_t trials, EstimatorMode mode, const RngStream& root,
                                   ExecutionOptions exec = {});

}  // namespace qthermo

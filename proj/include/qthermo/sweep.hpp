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

// N-sweeps across the three thermometer protocols, the bath-size analysis
// and the thermal curves used for plotting.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qthermo/estimators.hpp"
#include "qthermo/interferometry.hpp"
#include "qthermo/parallel.hpp"
#include "qthermo/scaling_fit.hpp"

namespace qthermo {

enum class Protocol { thermalizing, sn, noon };

Protocol parse_protocol(std::string_view name);
std::string_view to_string(Protocol protocol);

/// Where the interferometric protocols sit on the fringe.
///  bare:     no bias phase, P(A) = cos^2(N phi / 2).
///  centered: bias chosen so the prior phase window is centred on
///            mid-fringe (centered_bias_phase).
enum class OperatingPoint { bare, centered };

OperatingPoint parse_operating_point(std::string_view name);
std::string_view to_string(OperatingPoint point);

struct SweepPlan {
  Protocol protocol = Protocol::thermalizing;
  std::vector<std::int64_t> n_values;  // atoms (thermalizing, noon) or shots (sn)
  std::int64_t trials_per_n = 1000;

  // Thermalizing thermometer.
  double epsilon = 1.0;
  double beta_true = 1.0;
  EstimatorMode estimator = EstimatorMode::jeffreys;

  // Interferometric protocols.
  std::optional<BathSpec> bath;
  BathMode bath_mode = BathMode::fixed_m;
  std::int64_t repetitions = 200;  // NOON shots per trial
  OperatingPoint operating_point = OperatingPoint::centered;

  std::uint64_t master_seed = 0;
  ExecutionOptions exec;
};

/// Throws ConfigError for any invalid plan, including phase-window
/// violations at any n, before work starts.
void validate(const SweepPlan& plan);

struct SweepPoint {
  std::int64_t n = 0;
  double sigma_beta_empirical = 0.0;
  double sigma_beta_theory = 0.0;
  double invalid_fraction = 0.0;
  std::int64_t trials = 0;

  bool operator==(const SweepPoint&) const = default;
};

/// Per-point diagnostics that do not go into the output records.
struct SweepDiagnostics {
  double mean_beta = 0.0;
  double sigma_phi_empirical = 0.0;  // NaN for the thermalizing protocol
  double bias_phase = 0.0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::vector<SweepDiagnostics> diagnostics;
  ScalingFit fit;
};

/// Point n draws from RngStream(master_seed, n), so its result does not
/// depend on the other n values in the plan or on the thread count.
/// An n whose trials are all invalid raises EmptyBatchError naming it.
SweepResult run_sweep(const SweepPlan& plan);

/// Fits the points already computed (any source, e.g. synthetic values).
ScalingFit fit_sweep_points(std::span<const SweepPoint> points);

/// Thermal fluctuation floor of an isolated bath of M atoms, 1/sqrt(M eps').
double bath_intrinsic_sigma(std::int64_t m_atoms, double epsilon, double beta);

enum class PrecisionRegime { shot_noise, heisenberg };

/// Thermometer size whose precision matches the bath's own floor:
/// M for shot-noise scaling, ceil(sqrt M) for Heisenberg scaling.
std::int64_t matched_thermometer_size(std::int64_t m_atoms, PrecisionRegime regime);

struct Fig1Row {
  double beta_epsilon;
  double eps_bar_over_epsilon;
  double sqrt_n_sigma_beta_epsilon;
};

std::vector<Fig1Row> fig1_curves(double epsilon, std::span<const double> beta_grid);

/// `points` evenly spaced values on [0, beta_max].
std::vector<double> linear_beta_grid(double beta_max, std::int64_t points);

}  // namespace qthermo

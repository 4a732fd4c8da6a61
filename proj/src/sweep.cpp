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

#include "qthermo/sweep.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qthermo {

Protocol parse_protocol(std::string_view name) {
  if (name == "thermalizing") return Protocol::thermalizing;
  if (name == "sn") return Protocol::sn;
  if (name == "noon") return Protocol::noon;
  throw ConfigError("unknown protocol '" + std::string(name) + "' (expected thermalizing|sn|noon)");
}

std::string_view to_string(Protocol protocol) {
  switch (protocol) {
    case Protocol::thermalizing:
      return "thermalizing";
    case Protocol::sn:
      return "sn";
    case Protocol::noon:
      return "noon";
  }
  return "?";
}

OperatingPoint parse_operating_point(std::string_view name) {
  if (name == "bare") return OperatingPoint::bare;
  if (name == "centered") return OperatingPoint::centered;
  throw ConfigError("unknown operating point '" + std::string(name) + "' (expected bare|centered)");
}

std::string_view to_string(OperatingPoint point) { return point == OperatingPoint::bare ? "bare" : "centered"; }

namespace {

std::int64_t atoms_per_shot(const SweepPlan& plan, std::int64_t n) { return plan.protocol == Protocol::noon ? n : 1; }

double bias_for(const SweepPlan& plan, std::int64_t n) {
  if (plan.operating_point == OperatingPoint::bare) return 0.0;
  return centered_bias_phase(*plan.bath, atoms_per_shot(plan, n));
}

}  // namespace

void validate(const SweepPlan& plan) {
  if (plan.n_values.size() < kMinFitPoints) {
    throw ConfigError("a sweep needs at least " + std::to_string(kMinFitPoints) + " n values to fit");
  }
  for (std::size_t i = 0; i < plan.n_values.size(); ++i) {
    if (plan.n_values[i] < 1) throw ConfigError("n values must be positive");
    if (i > 0 && plan.n_values[i] <= plan.n_values[i - 1]) {
      throw ConfigError("n values must be strictly increasing");
    }
  }
  if (plan.trials_per_n < 2) throw ConfigError("trials per n must be >= 2");

  if (plan.protocol == Protocol::thermalizing) {
    TwoLevelSpec<double> check(1, plan.epsilon);
    InverseTemperature<double> beta(plan.beta_true);
    return;
  }
  if (!plan.bath) throw ConfigError("protocol '" + std::string(to_string(plan.protocol)) + "' needs a bath");
  if (plan.protocol == Protocol::noon && plan.repetitions < 2) {
    throw ConfigError("NOON sweeps need repetitions >= 2");
  }
  for (auto n : plan.n_values) validate_phase_window(*plan.bath, atoms_per_shot(plan, n));
}

SweepResult run_sweep(const SweepPlan& plan) {
  validate(plan);
  SweepResult result;
  result.points.reserve(plan.n_values.size());
  result.diagnostics.reserve(plan.n_values.size());

  for (auto n : plan.n_values) {
    const RngStream root(plan.master_seed, static_cast<std::uint64_t>(n));
    SweepPoint point;
    SweepDiagnostics diag;
    point.n = n;
    point.trials = plan.trials_per_n;
    diag.sigma_phi_empirical = std::numeric_limits<double>::quiet_NaN();

    try {
      TrialBatch batch;
      switch (plan.protocol) {
        case Protocol::thermalizing: {
          const TwoLevelSpec<double> spec(n, plan.epsilon);
          const InverseTemperature<double> beta(plan.beta_true);
          batch = run_thermalizing_trials(spec, beta, plan.trials_per_n, plan.estimator, root, plan.exec);
          point.sigma_beta_theory = shot_noise_sigma_beta(spec, beta);
          break;
        }
        case Protocol::sn: {
          diag.bias_phase = bias_for(plan, n);
          auto run = run_sn_trials(*plan.bath, n, plan.bath_mode, plan.trials_per_n, root, diag.bias_phase, plan.exec);
          batch = std::move(run.beta);
          diag.sigma_phi_empirical = run.phi.std_dev;
          point.sigma_beta_theory = sigma_beta_sn_theory(*plan.bath, n);
          break;
        }
        case Protocol::noon: {
          diag.bias_phase = bias_for(plan, n);
          auto run = run_noon_trials(*plan.bath, n, plan.repetitions, plan.bath_mode, plan.trials_per_n, root,
                                     diag.bias_phase, plan.exec);
          batch = std::move(run.beta);
          diag.sigma_phi_empirical = run.phi.std_dev;
          point.sigma_beta_theory =
              sigma_beta_h_theory(*plan.bath, n) / std::sqrt(static_cast<double>(plan.repetitions));
          break;
        }
      }
      point.sigma_beta_empirical = batch.sample_std;
      point.invalid_fraction = static_cast<double>(batch.invalid_count) / static_cast<double>(plan.trials_per_n);
      diag.mean_beta = batch.sample_mean;
    } catch (const EmptyBatchError& e) {
      throw EmptyBatchError("sweep aborted at n=" + std::to_string(n) + ": " + e.what(), e.invalid_count(),
                            e.trials());
    }
    result.points.push_back(point);
    result.diagnostics.push_back(diag);
  }
  result.fit = fit_sweep_points(result.points);
  return result;
}

ScalingFit fit_sweep_points(std::span<const SweepPoint> points) {
  std::vector<std::pair<std::int64_t, double>> xy;
  xy.reserve(points.size());
  for (const auto& p : points) xy.emplace_back(p.n, p.sigma_beta_empirical);
  return fit_power_law(xy);
}

double bath_intrinsic_sigma(std::int64_t m_atoms, double epsilon, double beta) {
  return shot_noise_sigma_beta(TwoLevelSpec<double>(m_atoms, epsilon), InverseTemperature<double>(beta));
}

std::int64_t matched_thermometer_size(std::int64_t m_atoms, PrecisionRegime regime) {
  if (m_atoms < 1) throw ConfigError("bath must hold at least one atom");
  if (regime == PrecisionRegime::shot_noise) return m_atoms;
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m_atoms)));
  while (root * root > m_atoms) --root;
  while (root * root < m_atoms) ++root;
  return root;
}

std::vector<Fig1Row> fig1_curves(double epsilon, std::span<const double> beta_grid) {
  if (beta_grid.empty()) throw ConfigError("fig1 grid must be nonempty");
  const TwoLevelSpec<double> single(1, epsilon);
  std::vector<Fig1Row> rows;
  rows.reserve(beta_grid.size());
  for (double b : beta_grid) {
    const InverseTemperature<double> beta(b);
    const auto s = thermal_summary(single, beta);
    rows.push_back({b * epsilon, s.eps_bar / epsilon, shot_noise_sigma_beta(single, beta) * epsilon});
  }
  return rows;
}

std::vector<double> linear_beta_grid(double beta_max, std::int64_t points) {
  if (points < 1) throw ConfigError("grid needs at least one point");
  if (!(beta_max >= 0.0) || !std::isfinite(beta_max)) throw ConfigError("beta_max must be finite and >= 0");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (std::int64_t i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = points == 1 ? 0.0 : beta_max * static_cast<double>(i) / double(points - 1);
  }
  return grid;
}

}  // namespace qthermo

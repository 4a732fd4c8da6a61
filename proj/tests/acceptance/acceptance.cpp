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

// Acceptance criteria A1-A10. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qthermo/error.hpp"
#include "qthermo/estimators.hpp"
#include "qthermo/interferometry.hpp"
#include "qthermo/report.hpp"
#include "qthermo/sweep.hpp"
#include "qthermo/thermal.hpp"
#include "qthermo/verify.hpp"

using namespace qthermo;

namespace {

constexpr double kWindow = std::numbers::pi - kPhaseWindowMargin;

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // <= 0 means no runtime limit
  std::function<Outcome()> body;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

bool within_rel(double value, double reference, double rel) {
  return std::abs(value - reference) <= rel * std::abs(reference);
}

Outcome a1_identities() {
  double worst_fd = 0.0, worst_f = 0.0, worst_sn = 0.0;
  for (double eps : {0.5, 1.0, 2.0}) {
    for (int i = 0; i < 40; ++i) {
      const double beta = 0.01 / eps + (10.0 / eps - 0.01 / eps) * i / 39.0;
      for (std::int64_t n : {1, 100}) {
        const TwoLevelSpec<double> spec(n, eps);
        const auto s = thermal_summary(spec, InverseTemperature(beta));
        const double h = 1e-5;
        const double dE = (thermal_summary(spec, InverseTemperature(beta + h)).mean_energy -
                           thermal_summary(spec, InverseTemperature(beta - h)).mean_energy) /
                          (2 * h);
        worst_fd = std::max(worst_fd, std::abs(s.energy_variance + dE) / s.energy_variance);
        worst_f = std::max(worst_f, std::abs(s.fisher_info - s.energy_variance) / s.energy_variance);
        const double sn = shot_noise_sigma_beta(spec, InverseTemperature(beta));
        worst_sn = std::max(worst_sn, std::abs(sn * std::sqrt(double(n) * s.eps_prime) - 1.0));
      }
    }
  }
  const bool ok = worst_fd <= 1e-6 && worst_f <= 1e-14 && worst_sn <= 1e-12;
  return {ok, fmt("fd_rel=%.2e (<=1e-6) F_vs_var=%.2e (<=1e-14) sn_norm=%.2e (<=1e-12)", worst_fd, worst_f, worst_sn)};
}

Outcome a2_oracle() {
  const auto checks = run_oracle_verification();
  std::string detail;
  for (const auto& c : checks) {
    detail += fmt("[%s %.2e/%.0e] ", c.passed ? "ok" : "bad", c.max_error, c.tolerance);
  }
  return {all_passed(checks), detail};
}

Outcome a3_saturation() {
  const TwoLevelSpec<double> spec(100, 1.0);
  const InverseTemperature beta(1.0);
  const auto batch = run_thermalizing_trials(spec, beta, 100000, EstimatorMode::jeffreys, RngStream(3003, 0));
  const double sn = shot_noise_sigma_beta(spec, beta);
  const double fisher = thermal_summary(spec, beta).fisher_info;
  const double var = batch.sample_std * batch.sample_std;
  const bool ok = within_rel(batch.sample_std, sn, 0.05) && var >= 0.95 / fisher;
  return {ok, fmt("std=%.5f shot_noise=%.5f ratio=%.4f var*F=%.4f (>=0.95)", batch.sample_std, sn,
                  batch.sample_std / sn, var * fisher)};
}

SweepPlan a4_plan() {
  SweepPlan plan;
  plan.protocol = Protocol::thermalizing;
  for (std::int64_t n = 16; n <= 4096; n *= 2) plan.n_values.push_back(n);
  plan.trials_per_n = 10000;
  plan.beta_true = 1.0;
  plan.epsilon = 1.0;
  plan.master_seed = 4004;
  return plan;
}

std::string sweep_csv(const SweepResult& r) {
  std::ostringstream os;
  write_sweep_csv(os, r.points, r.fit);
  return os.str();
}

std::string a4_csv;

Outcome a4_thermalizing_scaling() {
  const auto r = run_sweep(a4_plan());
  a4_csv = sweep_csv(r);
  const bool ok = r.fit.slope >= -0.55 && r.fit.slope <= -0.45 && r.fit.r_squared > 0.99;
  return {ok, fmt("slope=%.4f+-%.4f in [-0.55,-0.45] r2=%.5f (>0.99)", r.fit.slope, r.fit.stderr_slope,
                  r.fit.r_squared)};
}

Outcome a5_heisenberg_scaling() {
  SweepPlan plan;
  plan.protocol = Protocol::noon;
  plan.n_values = {2, 4, 8, 16, 32};
  plan.trials_per_n = 1000;
  plan.repetitions = 200;
  plan.beta_true = 1.0;
  plan.epsilon = 1.0;
  constexpr std::int64_t kM = 10000;
  plan.bath.emplace(kM, 1.0, 1.0, kWindow / (32.0 * kM), 1.0);
  plan.bath_mode = BathMode::fixed_m;
  plan.operating_point = OperatingPoint::centered;
  plan.master_seed = 5005;
  const auto r = run_sweep(plan);

  bool phi_ok = true;
  std::string phi_detail;
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const double n = double(r.points[i].n);
    const double ratio = r.diagnostics[i].sigma_phi_empirical * n * std::sqrt(double(plan.repetitions));
    phi_ok = phi_ok && ratio >= 0.95 && ratio <= 1.25;
    phi_detail += fmt("%g:%.3f(inv %.2f) ", n, ratio, r.points[i].invalid_fraction);
  }
  const bool slope_ok = r.fit.slope >= -1.08 && r.fit.slope <= -0.92;
  return {slope_ok && phi_ok, fmt("slope=%.4f+-%.4f in [-1.08,-0.92]; sigma_phi*N*sqrt(nu)(invalid fraction) {%s} in [0.95,1.25]",
                                  r.fit.slope, r.fit.stderr_slope, phi_detail.c_str())};
}

Outcome a6_sn_interferometer() {
  SweepPlan plan;
  plan.protocol = Protocol::sn;
  plan.n_values = {100, 1000, 10000, 100000};
  plan.trials_per_n = 1000;
  plan.beta_true = 1.0;
  constexpr std::int64_t kM = 10000;
  plan.bath.emplace(kM, 1.0, 1.0, kWindow / double(kM), 1.0);
  plan.master_seed = 6006;
  const auto r = run_sweep(plan);
  bool points_ok = true;
  std::string detail;
  for (const auto& p : r.points) {
    const double ratio = p.sigma_beta_empirical / p.sigma_beta_theory;
    points_ok = points_ok && std::abs(ratio - 1.0) <= 0.15;
    detail += fmt("%lld:%.3f ", static_cast<long long>(p.n), ratio);
  }
  const bool ok = points_ok && r.fit.slope >= -0.55 && r.fit.slope <= -0.45;
  return {ok, fmt("slope=%.4f in [-0.55,-0.45]; sigma/theory {%s} within 15%%", r.fit.slope, detail.c_str())};
}

Outcome a7_formula_numbers() {
  const double d = doppler_precision(1e15, 1.0);
  const double target = std::pow(10.0, -7.5);
  const auto n = matched_thermometer_size(100, PrecisionRegime::heisenberg);
  const bool ok = within_rel(d, target, 1e-3) && n == 10;
  return {ok, fmt("doppler=%.6e vs 10^-7.5=%.6e; matched size=%lld", d, target, static_cast<long long>(n))};
}

Outcome a8_dephasing() {
  // p = 1/4 at beta * epsilon = ln 3.
  const BathSpec bath(50, 1.0, std::log(3.0), 0.15, 1.0);
  const double closed = dephasing_visibility(bath, 1);
  const auto fringe = measure_dephased_fringe(bath, 1, 100000, RngStream(8008, 0));
  const bool ok = within_rel(fringe.visibility, closed, 0.02) && fringe.visibility < 1.0;
  return {ok, fmt("empirical=%.5f closed_form=%.5f rel=%.4f (<=0.02)", fringe.visibility, closed,
                  std::abs(fringe.visibility - closed) / closed)};
}

Outcome a9_bath_floor() {
  SweepPlan plan;
  plan.protocol = Protocol::sn;
  plan.n_values = {100, 1000, 10000, 100000};
  plan.trials_per_n = 2000;
  plan.beta_true = 1.0;
  constexpr std::int64_t kM = 100;
  plan.bath.emplace(kM, 1.0, 1.0, kWindow / double(kM), 1.0);
  plan.bath_mode = BathMode::sampled_m;
  plan.master_seed = 9009;
  const auto r = run_sweep(plan);
  const double floor = bath_intrinsic_sigma(kM, 1.0, 1.0);
  const double last = r.points[3].sigma_beta_empirical;
  const double prev = r.points[2].sigma_beta_empirical;
  const bool ok = last <= 2.0 * floor && last >= 0.5 * floor && last < 1.2 * prev;
  return {ok, fmt("sigma(1e4)=%.4f sigma(1e5)=%.4f bath_floor=%.4f last/floor=%.3f last/prev=%.3f (<1.2)", prev,
                  last, floor, last / floor, last / prev)};
}

Outcome a10_determinism() {
  if (a4_csv.empty()) a4_csv = sweep_csv(run_sweep(a4_plan()));
  const auto again = sweep_csv(run_sweep(a4_plan()));
  return {again == a4_csv, fmt("%zu bytes, %s", again.size(), again == a4_csv ? "identical" : "differ")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"A1", "analytic identities", 1.0, a1_identities},
      {"A2", "oracle equivalence", 5.0, a2_oracle},
      {"A3", "shot-noise saturation", 10.0, a3_saturation},
      {"A4", "thermalizing scaling", 120.0, a4_thermalizing_scaling},
      {"A5", "Heisenberg scaling", 120.0, a5_heisenberg_scaling},
      {"A6", "single-atom interferometer", 120.0, a6_sn_interferometer},
      {"A7", "formula-level numbers", 0.0, a7_formula_numbers},
      {"A8", "dephasing visibility", 30.0, a8_dephasing},
      {"A9", "bath floor", 60.0, a9_bath_floor},
      {"A10", "determinism", 0.0, a10_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0.0 || secs < c.limit_seconds;
    const bool passed = out.passed && in_time;
    failures += passed ? 0 : 1;
    std::string timing = c.limit_seconds > 0.0 ? fmt("%.2fs < %gs", secs, c.limit_seconds) : fmt("%.2fs", secs);
    if (!in_time) timing += " EXCEEDED";
    std::printf("%s %-4s %-28s %s [%s]\n", passed ? "PASS" : "FAIL", c.id, c.title, out.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

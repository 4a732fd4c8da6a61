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

#include "qthermo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qthermo/interferometry.hpp"
#include "qthermo/oracle.hpp"
#include "qthermo/thermal.hpp"

namespace qthermo {

namespace {

double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

class Tracker {
 public:
  Tracker(std::string name, double tolerance) {
    check_.name = std::move(name);
    check_.tolerance = tolerance;
  }
  void add(double err) {
    ++check_.cases;
    if (std::isnan(err)) err = std::numeric_limits<double>::infinity();
    check_.max_error = std::max(check_.max_error, err);
  }
  VerificationCheck done() {
    check_.passed = check_.max_error <= check_.tolerance;
    return check_;
  }

 private:
  VerificationCheck check_;
};

VerificationCheck check_thermal_enumeration() {
  Tracker t("thermal enumeration vs closed form (N=1..12)", 1e-12);
  for (double epsilon : {0.5, 1.0, 2.0}) {
    for (double x : {0.1, 0.7, 1.0, 5.0}) {
      for (int n = 1; n <= 12; ++n) {
        const double beta = x / epsilon;
        const auto exact = oracle::enumerate_thermal(n, epsilon, beta);
        const auto closed = thermal_summary(TwoLevelSpec<double>(n, epsilon), InverseTemperature<double>(beta));
        t.add(rel_err(std::log(exact.partition_function), closed.log_z));
        t.add(rel_err(closed.mean_energy, exact.mean_energy));
        t.add(rel_err(closed.energy_variance, exact.energy_variance));
        t.add(rel_err(closed.fisher_info, exact.energy_variance));
      }
    }
  }
  return t.done();
}

VerificationCheck check_noon_probabilities() {
  Tracker t("NOON port probabilities vs explicit interferometer (N<=8, 20 phases)", 1e-10);
  for (int n = 1; n <= oracle::kMaxNoonAtoms; ++n) {
    for (int k = 0; k < 20; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / 20.0 + 0.013;
      const auto [p3, p4] = oracle::noon_probs_exact(n, phi);
      const double half = 0.5 * n * phi;
      t.add(std::abs(p3 - std::sin(half) * std::sin(half)));
      t.add(std::abs(p4 - std::cos(half) * std::cos(half)));
      t.add(std::abs(p4 - noon_outcome_probability(n, phi)));
      t.add(std::abs(p3 + p4 - 1.0));
    }
  }
  // Bath-arm phases generated from the interaction basis.
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 6; ++m) {
      for (double theta : {0.1, 0.7, 2.9}) {
        const double phi_b = oracle::branch_phase(1, m, theta);
        t.add(std::abs(noon_outcome_probability(n, phi_b) - oracle::noon_probs_exact(n, phi_b).second));
      }
    }
  }
  return t.done();
}

VerificationCheck check_branch_phase() {
  Tracker t("interaction phase n*m*theta from the diagonal basis (n,m<=8)", 0.0);
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= 8; ++m) {
      for (double theta : {0.1, 0.3, 0.7, 2.9}) {
        t.add(std::abs(oracle::branch_phase(n, m, theta) - static_cast<double>(n * m) * theta));
      }
    }
  }
  return t.done();
}

VerificationCheck check_dephasing() {
  Tracker t("dephasing visibility closed form vs direct pmf sum (M<=16)", 1e-14);
  for (int m_atoms = 1; m_atoms <= oracle::kMaxEnumeratedAtoms; ++m_atoms) {
    for (double beta : {0.0, 0.5, std::log(3.0), 2.0}) {
      for (int k = 1; k <= 12; ++k) {
        const double n_phase = 2.0 * std::numbers::pi * k / 12.0 - 0.05;
        const BathSpec bath(m_atoms, 1.0, beta, n_phase, 1.0);
        const double closed = dephasing_visibility(bath, 1);
        const double direct = oracle::mixed_bath_visibility_exact(m_atoms, bath.excited_fraction(), n_phase);
        t.add(std::abs(closed - direct));
      }
    }
  }
  return t.done();
}

}  // namespace

std::vector<VerificationCheck> run_oracle_verification() {
  return {check_thermal_enumeration(), check_noon_probabilities(), check_branch_phase(), check_dephasing()};
}

bool all_passed(const std::vector<VerificationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

}  // namespace qthermo

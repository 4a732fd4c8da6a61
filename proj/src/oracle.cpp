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

#include "qthermo/oracle.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qthermo/error.hpp"

namespace qthermo::oracle {

namespace {

void guard(bool ok, const std::string& what) {
  if (!ok) throw SizeGuardError(what);
}

// The splitter a1^dag -> (a3^dag + i a4^dag)/sqrt 2 restricted to the
// two-dimensional {all-in-first, all-in-second} subspace.
Eigen::Matrix2cd splitter() {
  using namespace std::complex_literals;
  Eigen::Matrix2cd u;
  u << 1.0, 1.0i, 1.0i, 1.0;
  return u / std::sqrt(2.0);
}

}  // namespace

ThermalEnumeration enumerate_thermal(int n_atoms, double epsilon, double beta) {
  guard(n_atoms >= 1 && n_atoms <= kMaxEnumeratedAtoms,
        "enumerate_thermal supports 1.." + std::to_string(kMaxEnumeratedAtoms) + " atoms, got " +
            std::to_string(n_atoms));
  const std::uint32_t states = 1u << n_atoms;
  std::vector<double> energy(states);
  std::vector<double> weight(states);
  double z = 0.0;
  for (std::uint32_t s = 0; s < states; ++s) {
    energy[s] = epsilon * std::popcount(s);
    weight[s] = std::exp(-beta * energy[s]);
    z += weight[s];
  }
  double mean = 0.0;
  for (std::uint32_t s = 0; s < states; ++s) mean += weight[s] * energy[s];
  mean /= z;
  double var = 0.0;
  for (std::uint32_t s = 0; s < states; ++s) var += weight[s] * (energy[s] - mean) * (energy[s] - mean);
  var /= z;
  return {z, mean, var};
}

ConfigurationBasis::ConfigurationBasis(int n_thermometer, int m_bath) : n_(n_thermometer), m_(m_bath) {
  guard(n_thermometer >= 0 && n_thermometer <= kMaxEnumeratedAtoms, "thermometer size outside 0..16");
  guard(m_bath >= 0 && m_bath <= kMaxEnumeratedAtoms, "bath size outside 0..16");
  guard(n_thermometer + m_bath <= kMaxCombinedAtoms,
        "combined basis of " + std::to_string(n_thermometer + m_bath) + " atoms exceeds 24");
}

std::uint64_t ConfigurationBasis::index(std::uint64_t thermometer_bits, std::uint64_t bath_bits) const {
  guard(thermometer_bits < (std::uint64_t{1} << n_) && bath_bits < (std::uint64_t{1} << m_),
        "configuration bits outside the basis");
  return thermometer_bits | (bath_bits << n_);
}

std::int64_t ConfigurationBasis::interaction_count(std::uint64_t config) const {
  std::int64_t count = 0;
  for (int j = 0; j < n_; ++j) {
    const bool thermometer_excited = (config >> j) & 1u;
    for (int k = 0; k < m_; ++k) {
      const bool bath_excited = (config >> (n_ + k)) & 1u;
      count += (thermometer_excited && bath_excited) ? 1 : 0;
    }
  }
  return count;
}

Eigen::VectorXd ConfigurationBasis::interaction_diagonal() const {
  Eigen::VectorXd diag(static_cast<Eigen::Index>(size()));
  for (std::uint64_t c = 0; c < size(); ++c) diag(static_cast<Eigen::Index>(c)) = double(interaction_count(c));
  return diag;
}

Eigen::VectorXcd ConfigurationBasis::evolve(const Eigen::VectorXcd& state, double theta) const {
  guard(static_cast<std::uint64_t>(state.size()) == size(), "state vector does not match the basis");
  Eigen::VectorXcd out(state.size());
  for (Eigen::Index c = 0; c < state.size(); ++c) {
    out(c) = state(c) * std::polar(1.0, -theta * double(interaction_count(static_cast<std::uint64_t>(c))));
  }
  return out;
}

double branch_phase(int n_thermometer, int m_excited_bath, double theta) {
  ConfigurationBasis basis(n_thermometer, m_excited_bath);
  const std::uint64_t all_thermometer = (std::uint64_t{1} << n_thermometer) - 1;
  const std::uint64_t all_bath = (std::uint64_t{1} << m_excited_bath) - 1;
  const auto count = basis.interaction_count(basis.index(all_thermometer, all_bath));
  return static_cast<double>(count) * theta;
}

std::pair<double, double> noon_probs_exact(int n_atoms, double phi_b, double bias_phase) {
  guard(n_atoms >= 1 && n_atoms <= kMaxNoonAtoms, "noon_probs_exact supports 1..8 atoms");
  // The N atoms in mode 4 each pick up phi_b (as branch_phase(N, m, theta)
  // would report for phi_b = m theta); the bias acts once on the branch.
  Eigen::Matrix2cd phase = Eigen::Matrix2cd::Identity();
  phase(1, 1) = std::polar(1.0, n_atoms * phi_b + bias_phase);
  const Eigen::Vector2cd input(1.0, 0.0);
  const Eigen::Vector2cd output = splitter() * phase * splitter() * input;
  return {std::norm(output(0)), std::norm(output(1))};
}

double mixed_bath_visibility_exact(int m_atoms, double p, double n_phase) {
  guard(m_atoms >= 1 && m_atoms <= kMaxEnumeratedAtoms, "mixed_bath_visibility_exact supports M in 1..16");
  std::complex<double> sum = 0.0;
  double binom = 1.0;  // C(M, m), exact in double for M <= 16
  for (int m = 0; m <= m_atoms; ++m) {
    const double pmf = binom * std::pow(p, m) * std::pow(1.0 - p, m_atoms - m);
    sum += pmf * std::polar(1.0, n_phase * m);
    binom = binom * (m_atoms - m) / (m + 1);
  }
  return std::abs(sum);
}

}  // namespace qthermo::oracle

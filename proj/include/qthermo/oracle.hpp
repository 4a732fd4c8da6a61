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

// Brute-force references for the closed forms: literal sums over the
// configuration basis, explicit diagonal evolution, and explicit 2x2
// interferometer algebra. Everything here refuses to run beyond its size
// guard instead of approximating.

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

namespace qthermo::oracle {

inline constexpr int kMaxEnumeratedAtoms = 16;
inline constexpr int kMaxCombinedAtoms = 24;
inline constexpr int kMaxNoonAtoms = 8;

struct ThermalEnumeration {
  double partition_function;
  double mean_energy;
  double energy_variance;
};

/// Sums exp(-beta E) over all 2^N bitstrings of N two-level atoms.
ThermalEnumeration enumerate_thermal(int n_atoms, double epsilon, double beta);

/// Product basis of n_thermometer + m_bath two-level atoms. Configuration
/// index: bits [0, n) are thermometer atoms, bits [n, n + m) bath atoms,
/// a set bit means excited.
class ConfigurationBasis {
 public:
  ConfigurationBasis(int n_thermometer, int m_bath);

  int n_thermometer() const noexcept { return n_; }
  int m_bath() const noexcept { return m_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << (n_ + m_); }

  std::uint64_t index(std::uint64_t thermometer_bits, std::uint64_t bath_bits) const;

  /// <c| H_int |c> / alpha: the number of (thermometer, bath) pairs that are
  /// both excited, counted pair by pair.
  std::int64_t interaction_count(std::uint64_t config) const;

  /// Diagonal of H_int / alpha over the whole basis.
  Eigen::VectorXd interaction_diagonal() const;

  /// exp(-i H_int tau) applied to `state`, with theta = alpha * tau.
  Eigen::VectorXcd evolve(const Eigen::VectorXcd& state, double theta) const;

 private:
  int n_;
  int m_;
};

/// Interaction phase picked up by the configuration with n_thermometer
/// excited thermometer atoms and m_excited_bath excited bath atoms.
double branch_phase(int n_thermometer, int m_excited_bath, double theta);

/// Port probabilities (p_port3, p_port4) of the NOON interferometer on the
/// {all-in-3, all-in-4} subspace: splitter, phase N phi_b (+ bias) on
/// mode 4, splitter.
std::pair<double, double> noon_probs_exact(int n_atoms, double phi_b, double bias_phase = 0.0);

/// |sum_m Binom(m; M, p) exp(i n_phase m)| by direct summation.
double mixed_bath_visibility_exact(int m_atoms, double p, double n_phase);

}  // namespace qthermo::oracle

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

// Closed-form statistical mechanics of an ensemble of N independent
// two-level atoms (ground energy 0, excited energy epsilon) in a thermal
// state at inverse temperature beta, together with the precision bounds
// that follow from it.
//
// Every quantity depends on beta and epsilon only through x = beta*epsilon.
// The logistic forms below are evaluated with exp(-x), x >= 0, so nothing
// overflows for x up to (and beyond) 700.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "qthermo/error.hpp"

namespace qthermo {

template <typename Scalar>
class InverseTemperature {
 public:
  explicit InverseTemperature(Scalar beta) : beta_(beta) {
    if (std::isnan(beta) || beta < Scalar(0)) {
      throw ConfigError("inverse temperature must be >= 0, got " + std::to_string(double(beta)));
    }
  }
  Scalar value() const noexcept { return beta_; }

 private:
  Scalar beta_;
};

/// N identical non-interacting two-level atoms with level splitting epsilon.
template <typename Scalar>
class TwoLevelSpec {
 public:
  TwoLevelSpec(std::int64_t n_atoms, Scalar epsilon) : n_atoms_(n_atoms), epsilon_(epsilon) {
    if (n_atoms < 1) throw ConfigError("n_atoms must be >= 1, got " + std::to_string(n_atoms));
    if (!(epsilon > Scalar(0)) || !std::isfinite(epsilon)) {
      throw ConfigError("epsilon must be a positive finite energy, got " +
                        std::to_string(double(epsilon)));
    }
  }
  std::int64_t n_atoms() const noexcept { return n_atoms_; }
  Scalar epsilon() const noexcept { return epsilon_; }

 private:
  std::int64_t n_atoms_;
  Scalar epsilon_;
};

template <typename Scalar>
struct ThermalSummaryT {
  Scalar log_z;
  Scalar mean_energy;      // E-bar
  Scalar energy_variance;  // sigma_E^2
  Scalar eps_bar;          // mean energy per atom
  Scalar eps_prime;        // |d eps_bar / d beta|
  Scalar fisher_info;      // F(beta), equal to energy_variance for a diagonal state
};

using ThermalSummary = ThermalSummaryT<double>;

namespace detail {

template <typename Scalar>
void require_positive_energy(Scalar epsilon) {
  if (!(epsilon > Scalar(0)) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon must be a positive finite energy");
  }
}

// Excited and ground populations (p, 1 - p) of one atom at x = beta*epsilon >= 0.
template <typename Scalar>
struct Populations {
  Scalar excited;
  Scalar ground;
  Scalar boltzmann;  // exp(-x)
};

template <typename Scalar>
Populations<Scalar> populations(Scalar x) {
  using std::exp;
  const Scalar e = exp(-x);
  return {e / (Scalar(1) + e), Scalar(1) / (Scalar(1) + e), e};
}

}  // namespace detail

/// Single-atom excited population 1/(1 + exp(beta*epsilon)), in (0, 1/2].
template <typename Scalar>
Scalar excitation_probability(Scalar epsilon, InverseTemperature<Scalar> beta) {
  detail::require_positive_energy(epsilon);
  return detail::populations(beta.value() * epsilon).excited;
}

template <typename Scalar>
ThermalSummaryT<Scalar> thermal_summary(const TwoLevelSpec<Scalar>& spec,
                                        InverseTemperature<Scalar> beta) {
  using std::log1p;
  const Scalar eps = spec.epsilon();
  const Scalar n = static_cast<Scalar>(spec.n_atoms());
  const auto pop = detail::populations(beta.value() * eps);

  ThermalSummaryT<Scalar> s;
  s.eps_bar = eps * pop.excited;
  s.eps_prime = eps * eps * pop.excited * pop.ground;
  s.log_z = n * log1p(pop.boltzmann);
  s.mean_energy = n * s.eps_bar;
  s.energy_variance = n * s.eps_prime;
  s.fisher_info = s.energy_variance;
  return s;
}

/// Error propagation from the spread of the per-atom energy to beta.
template <typename Scalar>
Scalar propagate_uncertainty(Scalar sigma_eps, Scalar eps_prime) {
  if (!(eps_prime > Scalar(0))) {
    throw DegenerateSensitivityError("eps_prime must be > 0: thermometer has no temperature response");
  }
  return sigma_eps / eps_prime;
}

/// Cramer-Rao bound 1/sqrt(repetitions * F).
template <typename Scalar>
Scalar cr_bound_sigma(Scalar fisher_info, std::int64_t repetitions) {
  using std::sqrt;
  if (!(fisher_info > Scalar(0))) {
    throw DegenerateSensitivityError("Fisher information must be > 0");
  }
  if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
  return Scalar(1) / sqrt(static_cast<Scalar>(repetitions) * fisher_info);
}

/// Shot-noise limit of a thermalizing thermometer, 1/sqrt(N eps_prime).
/// Identical (bit for bit) to cr_bound_sigma(fisher_info, 1).
template <typename Scalar>
Scalar shot_noise_sigma_beta(const TwoLevelSpec<Scalar>& spec, InverseTemperature<Scalar> beta) {
  using std::sqrt;
  const auto s = thermal_summary(spec, beta);
  return Scalar(1) / sqrt(Scalar(1) * s.fisher_info);
}

/// Inverts p = 1/(1 + exp(beta*epsilon)) for beta. The result is negative
/// when p_hat > 1/2; clamping is left to the caller.
template <typename Scalar>
Scalar invert_mean_fraction(Scalar p_hat, Scalar epsilon) {
  using std::log;
  using std::log1p;
  detail::require_positive_energy(epsilon);
  if (std::isnan(p_hat)) throw ConfigError("p_hat is NaN");
  if (!(p_hat > Scalar(0) && p_hat < Scalar(1))) {
    throw UnboundedEstimateError("occupation fraction " + std::to_string(double(p_hat)) +
                                 " is outside (0, 1); beta estimate is unbounded");
  }
  return (log1p(-p_hat) - log(p_hat)) / epsilon;
}

/// Precision of an atom-counting thermometer with flux `atom_rate`
/// integrated over `integration_time`: (rate * time)^(-1/2).
template <typename Scalar>
Scalar doppler_precision(Scalar atom_rate, Scalar integration_time) {
  using std::sqrt;
  if (!(atom_rate > Scalar(0)) || !(integration_time > Scalar(0))) {
    throw ConfigError("atom rate and integration time must be positive");
  }
  return Scalar(1) / sqrt(atom_rate * integration_time);
}

}  // namespace qthermo

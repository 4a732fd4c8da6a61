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

#include "qthermo/interferometry.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>

namespace qthermo {

namespace {

constexpr std::int64_t kFringeBlock = 4096;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

InterferometerBatch summarize(const std::vector<ProtocolTrial>& trials) {
  std::vector<std::optional<double>> betas;
  InterferometerBatch out;
  betas.reserve(trials.size());
  out.phi_hat.reserve(trials.size());
  for (const auto& t : trials) {
    betas.push_back(t.beta_hat);
    out.phi_hat.push_back(t.phi_hat);
  }
  out.phi = sample_moments(out.phi_hat);
  out.beta = collect_batch(betas);
  return out;
}

// Shared by both protocols: the single-atom campaign is the n_atoms = 1 case.
ProtocolTrial run_phase_protocol(const BathSpec& bath, std::int64_t n_atoms, std::int64_t shots, BathMode mode,
                                 RngStream& rng, double bias_phase) {
  ProtocolTrial trial;
  auto& out = trial.outcome;
  out.m_realized = bath_excitation_draw(bath, mode, rng);
  out.phi_b = bath.theta() * static_cast<double>(out.m_realized);
  out.shots = shots;
  out.counts_port_a = sample_excited_count(shots, biased_port_probability(n_atoms, out.phi_b, bias_phase), rng);

  const double p_hat = *occupation_estimate(out.counts_port_a, shots, EstimatorMode::jeffreys);
  trial.phi_hat = phase_from_port_fraction(n_atoms, p_hat, bias_phase);
  trial.beta_hat = beta_from_phase(bath, trial.phi_hat);
  return trial;
}

void validate_bias(const BathSpec& bath, std::int64_t n_atoms, double bias_phase) {
  validate_phase_window(bath, n_atoms);
  const double top = bias_phase + static_cast<double>(n_atoms) * bath.theta() * static_cast<double>(bath.m_atoms());
  if (!(bias_phase >= 0.0) || top > std::numbers::pi) {
    throw ConfigError("biased phase window [" + fmt(bias_phase) + ", " + fmt(top) + "] is not inside [0, pi]");
  }
}

InterferometerBatch run_campaigns(const BathSpec& bath, std::int64_t n_atoms, std::int64_t shots, BathMode mode,
                                  std::int64_t trials, const RngStream& root, double bias_phase,
                                  ExecutionOptions exec) {
  if (trials < 2) throw ConfigError("need at least 2 trials, got " + std::to_string(trials));
  validate_bias(bath, n_atoms, bias_phase);
  std::vector<ProtocolTrial> results(static_cast<std::size_t>(trials));
  parallel_for(trials, exec, [&](std::int64_t i) {
    RngStream rng = root.child(static_cast<std::uint64_t>(i));
    results[static_cast<std::size_t>(i)] = run_phase_protocol(bath, n_atoms, shots, mode, rng, bias_phase);
  });
  return summarize(results);
}

}  // namespace

BathSpec::BathSpec(std::int64_t m_atoms, double epsilon, double beta_true, double alpha, double tau)
    : m_atoms_(m_atoms), epsilon_(epsilon), beta_true_(beta_true), alpha_(alpha), tau_(tau) {
  if (m_atoms < 1) throw ConfigError("bath must hold at least one atom (M >= 1)");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ConfigError("bath epsilon must be > 0");
  InverseTemperature<double> checked(beta_true);
  if (!std::isfinite(beta_true)) throw ConfigError("bath beta must be finite");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("coupling alpha must be > 0");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ConfigError("interaction time tau must be > 0");
}

double BathSpec::excited_fraction() const {
  return excitation_probability(epsilon_, InverseTemperature<double>(beta_true_));
}

double BathSpec::mean_excitation_slope() const {
  const auto pop = detail::populations(beta_true_ * epsilon_);
  return static_cast<double>(m_atoms_) * epsilon_ * pop.excited * pop.ground;
}

BathMode parse_bath_mode(std::string_view name) {
  if (name == "fixed" || name == "fixed_m") return BathMode::fixed_m;
  if (name == "sampled" || name == "sampled_m") return BathMode::sampled_m;
  throw ConfigError("unknown bath mode '" + std::string(name) + "' (expected fixed|sampled)");
}

std::string_view to_string(BathMode mode) { return mode == BathMode::fixed_m ? "fixed_m" : "sampled_m"; }

void validate_phase_window(const BathSpec& bath, std::int64_t n_atoms) {
  if (n_atoms < 1) throw ConfigError("thermometer must hold at least one atom");
  const double span = static_cast<double>(n_atoms) * bath.theta() * static_cast<double>(bath.m_atoms());
  const double limit = std::numbers::pi - kPhaseWindowMargin;
  if (!(span <= limit)) {
    throw ConfigError("phase window violated: N*theta*M = " + std::to_string(n_atoms) + "*" + fmt(bath.theta()) +
                      "*" + std::to_string(bath.m_atoms()) + " = " + fmt(span) + " > pi - 1e-3 = " + fmt(limit));
  }
}

std::int64_t bath_excitation_draw(const BathSpec& bath, BathMode mode, RngStream& rng) {
  const double p = bath.excited_fraction();
  if (mode == BathMode::fixed_m) {
    return std::llround(static_cast<double>(bath.m_atoms()) * p);
  }
  return sample_excited_count(bath.m_atoms(), p, rng);
}

double single_port_probability(double phi) {
  const double c = std::cos(0.5 * phi);
  return c * c;
}

double noon_outcome_probability(std::int64_t n_atoms, double phi_b) {
  if (n_atoms < 1) throw ConfigError("NOON state needs n_atoms >= 1");
  return single_port_probability(static_cast<double>(n_atoms) * phi_b);
}

double biased_port_probability(std::int64_t n_atoms, double phi_b, double bias_phase) {
  if (n_atoms < 1) throw ConfigError("NOON state needs n_atoms >= 1");
  return single_port_probability(static_cast<double>(n_atoms) * phi_b + bias_phase);
}

double centered_bias_phase(const BathSpec& bath, std::int64_t n_atoms) {
  const double span = static_cast<double>(n_atoms) * bath.theta() * static_cast<double>(bath.m_atoms());
  return 0.5 * (std::numbers::pi - span);
}

double phase_from_port_fraction(std::int64_t n_atoms, double p_hat, double bias_phase) {
  if (n_atoms < 1) throw ConfigError("NOON state needs n_atoms >= 1");
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) throw ConfigError("port fraction must lie in [0, 1]");
  const double total = 2.0 * std::acos(std::sqrt(p_hat));
  return (total - bias_phase) / static_cast<double>(n_atoms);
}

std::optional<double> beta_from_phase(const BathSpec& bath, double phi_hat) {
  const double m_hat = phi_hat / bath.theta();
  const double m = static_cast<double>(bath.m_atoms());
  if (!(m_hat > 0.0 && m_hat < m)) return std::nullopt;
  return invert_mean_fraction(m_hat / m, bath.epsilon());
}

ProtocolTrial run_sn_protocol(const BathSpec& bath, std::int64_t n_shots, BathMode mode, RngStream& rng,
                              double bias_phase) {
  if (n_shots < 1) throw ConfigError("n_shots must be >= 1");
  validate_bias(bath, 1, bias_phase);
  return run_phase_protocol(bath, 1, n_shots, mode, rng, bias_phase);
}

ProtocolTrial run_noon_protocol(const BathSpec& bath, std::int64_t n_atoms, std::int64_t repetitions,
                                BathMode mode, RngStream& rng, double bias_phase) {
  if (repetitions < 2) throw ConfigError("NOON protocol needs repetitions >= 2");
  validate_bias(bath, n_atoms, bias_phase);
  return run_phase_protocol(bath, n_atoms, repetitions, mode, rng, bias_phase);
}

double sigma_m_sn_theory(double theta, std::int64_t n_shots) {
  if (!(theta > 0.0) || n_shots < 1) throw ConfigError("theta and n_shots must be positive");
  return 1.0 / (theta * std::sqrt(static_cast<double>(n_shots)));
}

double sigma_beta_sn_theory(const BathSpec& bath, std::int64_t n_shots) {
  return sigma_m_sn_theory(bath.theta(), n_shots) / bath.mean_excitation_slope();
}

double sigma_beta_h_theory(const BathSpec& bath, std::int64_t n_atoms) {
  if (n_atoms < 1) throw ConfigError("n_atoms must be >= 1");
  return 1.0 / (static_cast<double>(n_atoms) * bath.theta()) / bath.mean_excitation_slope();
}

double dephasing_visibility(const BathSpec& bath, std::int64_t n_atoms) {
  const double p = bath.excited_fraction();
  const std::complex<double> phasor = (1.0 - p) + p * std::polar(1.0, static_cast<double>(n_atoms) * bath.theta());
  return std::pow(std::abs(phasor), static_cast<double>(bath.m_atoms()));
}

InterferometerBatch run_sn_trials(const BathSpec& bath, std::int64_t n_shots, BathMode mode, std::int64_t trials,
                                  const RngStream& root, double bias_phase, ExecutionOptions exec) {
  if (n_shots < 1) throw ConfigError("n_shots must be >= 1");
  return run_campaigns(bath, 1, n_shots, mode, trials, root, bias_phase, exec);
}

InterferometerBatch run_noon_trials(const BathSpec& bath, std::int64_t n_atoms, std::int64_t repetitions,
                                    BathMode mode, std::int64_t trials, const RngStream& root, double bias_phase,
                                    ExecutionOptions exec) {
  if (repetitions < 2) throw ConfigError("NOON protocol needs repetitions >= 2");
  return run_campaigns(bath, n_atoms, repetitions, mode, trials, root, bias_phase, exec);
}

FringeMeasurement measure_dephased_fringe(const BathSpec& bath, std::int64_t n_atoms, std::int64_t shots,
                                          const RngStream& root, ExecutionOptions exec) {
  if (shots < 1) throw ConfigError("shots must be >= 1");
  if (n_atoms < 1) throw ConfigError("n_atoms must be >= 1");
  const std::int64_t blocks = (shots + kFringeBlock - 1) / kFringeBlock;
  // Entry [q * blocks + b]: signed click sum of block b at bias q * pi/2.
  std::vector<std::int64_t> sums(static_cast<std::size_t>(2 * blocks), 0);

  parallel_for(2 * blocks, exec, [&](std::int64_t job) {
    const std::int64_t q = job / blocks;
    const std::int64_t b = job % blocks;
    RngStream rng = root.child(static_cast<std::uint64_t>(q)).child(static_cast<std::uint64_t>(b));
    const double bias = q == 0 ? 0.0 : 0.5 * std::numbers::pi;
    const std::int64_t count = std::min(kFringeBlock, shots - b * kFringeBlock);
    std::int64_t signed_sum = 0;
    for (std::int64_t s = 0; s < count; ++s) {
      const auto m = bath_excitation_draw(bath, BathMode::sampled_m, rng);
      const double p = biased_port_probability(n_atoms, bath.theta() * static_cast<double>(m), bias);
      signed_sum += rng.uniform01() < p ? 1 : -1;
    }
    sums[static_cast<std::size_t>(job)] = signed_sum;
  });

  std::int64_t cos_sum = 0;
  std::int64_t sin_sum = 0;
  for (std::int64_t b = 0; b < blocks; ++b) {
    cos_sum += sums[static_cast<std::size_t>(b)];
    sin_sum += sums[static_cast<std::size_t>(blocks + b)];
  }
  FringeMeasurement out;
  out.shots = shots;
  // P(A) = (1 + cos(psi + bias)) / 2, so the mean signed click is cos(psi + bias).
  out.in_phase = static_cast<double>(cos_sum) / static_cast<double>(shots);
  out.quadrature = -static_cast<double>(sin_sum) / static_cast<double>(shots);
  out.visibility = std::hypot(out.in_phase, out.quadrature);
  return out;
}

}  // namespace qthermo

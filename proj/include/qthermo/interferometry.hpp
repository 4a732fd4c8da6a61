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

// Non-thermalizing interferometric thermometer. Thermometer atoms pass a
// Mach-Zehnder interferometer whose upper arm (mode 4) couples to a bath of
// M two-level atoms through an interaction diagonal in the energy basis, so
// each pass picks up a phase theta * m with theta = alpha * tau and m the
// number of excited bath atoms. Estimating the phase estimates m, and m
// estimates beta through <m> = M / (1 + exp(beta epsilon)).
//
// Two resource models are provided:
//   single-atom (sn): n_shots independent atoms, P(port A) = cos^2(phi/2)
//   NOON:             N atoms per shot, P(port A) = cos^2(N phi/2)
//
// Both interferometers are closed with the splitter (1/sqrt 2)[[1, i], [i, 1]].
// An optional known bias phase on the bath arm shifts the operating point to
// cos^2((N phi + bias)/2); with bias = 0 the bare fringe is recovered.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qthermo/estimators.hpp"
#include "qthermo/parallel.hpp"
#include "qthermo/rng.hpp"
#include "qthermo/thermal.hpp"

namespace qthermo {

/// Margin kept below pi when requiring an unambiguous phase window.
inline constexpr double kPhaseWindowMargin = 1e-3;

class BathSpec {
 public:
  BathSpec(std::int64_t m_atoms, double epsilon, double beta_true, double alpha, double tau);

  std::int64_t m_atoms() const noexcept { return m_atoms_; }
  double epsilon() const noexcept { return epsilon_; }
  double beta_true() const noexcept { return beta_true_; }
  double alpha() const noexcept { return alpha_; }
  double tau() const noexcept { return tau_; }
  /// Phase per excited bath atom per thermometer atom, alpha * tau.
  double theta() const noexcept { return alpha_ * tau_; }

  /// Thermal excited fraction p(beta_true) of one bath atom.
  double excited_fraction() const;
  /// |d<m>/d beta| = M epsilon p (1 - p).
  double mean_excitation_slope() const;

 private:
  std::int64_t m_atoms_;
  double epsilon_;
  double beta_true_;
  double alpha_;
  double tau_;
};

enum class BathMode { fixed_m, sampled_m };

BathMode parse_bath_mode(std::string_view name);  // accepts fixed|fixed_m|sampled|sampled_m
std::string_view to_string(BathMode mode);

struct InterferometerOutcome {
  std::int64_t m_realized = 0;
  double phi_b = 0.0;
  std::int64_t counts_port_a = 0;
  std::int64_t shots = 0;
};

/// Throws ConfigError unless n_atoms * theta * M <= pi - kPhaseWindowMargin.
/// n_atoms = 1 is the single-atom window.
void validate_phase_window(const BathSpec& bath, std::int64_t n_atoms);

/// fixed_m: round(M p), no randomness consumed. sampled_m: Binomial(M, p).
std::int64_t bath_excitation_draw(const BathSpec& bath, BathMode mode, RngStream& rng);

/// cos^2(phi / 2).
double single_port_probability(double phi);

/// cos^2(N phi_b / 2); the complementary outcome has sin^2(N phi_b / 2).
double noon_outcome_probability(std::int64_t n_atoms, double phi_b);

/// Probability of port A with a bias phase on the bath arm.
double biased_port_probability(std::int64_t n_atoms, double phi_b, double bias_phase);

/// Bias that centres the prior window [0, N theta M] on mid-fringe.
double centered_bias_phase(const BathSpec& bath, std::int64_t n_atoms);

/// Inverts biased_port_probability for phi_b on the principal branch.
double phase_from_port_fraction(std::int64_t n_atoms, double p_hat, double bias_phase = 0.0);

/// beta-hat = ln(M / m_hat - 1) / epsilon with m_hat = phi_hat / theta;
/// std::nullopt unless 0 < m_hat < M.
std::optional<double> beta_from_phase(const BathSpec& bath, double phi_hat);

struct ProtocolTrial {
  InterferometerOutcome outcome;
  double phi_hat = 0.0;
  std::optional<double> beta_hat;
};

/// One campaign of n_shots single atoms; m is drawn once for the campaign.
ProtocolTrial run_sn_protocol(const BathSpec& bath, std::int64_t n_shots, BathMode mode, RngStream& rng,
                              double bias_phase = 0.0);

/// One campaign of `repetitions` NOON shots of n_atoms atoms each; m is
/// drawn once and held for every repetition.
ProtocolTrial run_noon_protocol(const BathSpec& bath, std::int64_t n_atoms, std::int64_t repetitions,
                                BathMode mode, RngStream& rng, double bias_phase = 0.0);

double sigma_m_sn_theory(double theta, std::int64_t n_shots);
double sigma_beta_sn_theory(const BathSpec& bath, std::int64_t n_shots);
/// Single NOON shot; divide by sqrt(repetitions) for repeated campaigns.
double sigma_beta_h_theory(const BathSpec& bath, std::int64_t n_atoms);

/// |1 - p + p exp(i N theta)|^M: fringe visibility when m is redrawn from
/// the thermal binomial on every shot.
double dephasing_visibility(const BathSpec& bath, std::int64_t n_atoms);

struct InterferometerBatch {
  TrialBatch beta;
  std::vector<double> phi_hat;  // every trial, in trial order
  SampleMoments phi;
};

InterferometerBatch run_sn_trials(const BathSpec& bath, std::int64_t n_shots, BathMode mode,
                                  std::int64_t trials, const RngStream& root, double bias_phase = 0.0,
                                  ExecutionOptions exec = {});

InterferometerBatch run_noon_trials(const BathSpec& bath, std::int64_t n_atoms, std::int64_t repetitions,
                                    BathMode mode, std::int64_t trials, const RngStream& root,
                                    double bias_phase = 0.0, ExecutionOptions exec = {});

/// Two-quadrature fringe measurement with m redrawn on every shot.
/// `shots` NOON shots are taken at bias 0 and again at bias pi/2.
struct FringeMeasurement {
  double in_phase = 0.0;    // estimate of E[cos(N theta m)]
  double quadrature = 0.0;  // estimate of E[sin(N theta m)]
  double visibility = 0.0;  // hypot of the two
  std::int64_t shots = 0;
};

FringeMeasurement measure_dephased_fringe(const BathSpec& bath, std::int64_t n_atoms, std::int64_t shots,
                                          const RngStream& root, ExecutionOptions exec = {});

}  // namespace qthermo

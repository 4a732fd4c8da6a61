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

// Command-line front end.
//
//   qthermo stats     --epsilon E --beta B [--n N]
//   qthermo fig1      --epsilon E --beta-max X --points K --out FILE
//   qthermo sweep     --protocol thermalizing|sn|noon --n-values 16,32,... --trials T ...
//   qthermo verify
//   qthermo dephasing --bath-m M --theta TH --n N --beta-true B
//
// Every subcommand accepts --config FILE with `key = value` lines named
// after the long flags (without dashes); flags given on the command line win.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
// 3 all trials invalid, 4 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qthermo/error.hpp"
#include "qthermo/interferometry.hpp"
#include "qthermo/oracle.hpp"
#include "qthermo/report.hpp"
#include "qthermo/sweep.hpp"
#include "qthermo/thermal.hpp"
#include "qthermo/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitEmptyBatch = 3;
constexpr int kExitIo = 4;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qthermo::IoError("cannot read config file '" + path + "'", path);
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line.substr(0, line.find('#')));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw qthermo::ConfigError(path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    auto value = trim(text.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    kv[trim(text.substr(0, eq))] = value;
  }
  return kv;
}

// Fills options that were not given on the command line from the config file.
void apply_config(CLI::App& cmd, const std::string& config_path) {
  if (config_path.empty()) return;
  for (const auto& [key, value] : read_config_file(config_path)) {
    CLI::Option* opt = cmd.get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") {
      throw qthermo::ConfigError("unknown key '" + key + "' in config file for '" + cmd.get_name() + "'");
    }
    if (opt->count() > 0) continue;
    try {
      std::stringstream items(value);
      std::string item;
      if (opt->get_delimiter() != '\0' && value.find(opt->get_delimiter()) != std::string::npos) {
        while (std::getline(items, item, opt->get_delimiter())) opt->add_result(trim(item));
      } else {
        opt->add_result(value);
      }
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw qthermo::ConfigError("config key '" + key + "': " + e.what());
    }
  }
}

template <typename T>
const T& require(const std::optional<T>& v, const std::string& flag) {
  if (!v) throw qthermo::ConfigError("missing required option " + flag);
  return *v;
}

struct StatsArgs {
  std::string config;
  double epsilon = 1.0;
  std::optional<double> beta;
  std::int64_t n = 1;
};

struct Fig1Args {
  std::string config;
  double epsilon = 1.0;
  std::optional<double> beta_max;
  std::int64_t points = 101;
  std::optional<std::string> out;
};

struct SweepArgs {
  std::string config;
  std::string protocol = "thermalizing";
  std::vector<std::int64_t> n_values;
  std::int64_t trials = 1000;
  std::int64_t reps = 200;
  std::optional<std::int64_t> bath_m;
  std::optional<double> alpha;
  std::optional<double> tau;
  double beta_true = 1.0;
  double epsilon = 1.0;
  std::string bath_mode = "fixed";
  std::string estimator = "jeffreys";
  std::string operating_point = "centered";
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  std::string format = "csv";
  unsigned threads = 1;
};

struct DephasingArgs {
  std::string config;
  std::optional<std::int64_t> bath_m;
  std::optional<double> theta;
  std::int64_t n = 1;
  std::optional<double> beta_true;
  double epsilon = 1.0;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
};

int run_stats(const StatsArgs& a) {
  const qthermo::TwoLevelSpec<double> spec(a.n, a.epsilon);
  const auto s = qthermo::thermal_summary(spec, qthermo::InverseTemperature<double>(require(a.beta, "--beta")));
  using qthermo::format_double;
  std::cout << "log_z=" << format_double(s.log_z) << '\n'
            << "mean_energy=" << format_double(s.mean_energy) << '\n'
            << "energy_variance=" << format_double(s.energy_variance) << '\n'
            << "eps_bar=" << format_double(s.eps_bar) << '\n'
            << "eps_prime=" << format_double(s.eps_prime) << '\n'
            << "fisher_info=" << format_double(s.fisher_info) << '\n';
  return 0;
}

int run_fig1(const Fig1Args& a) {
  const auto grid = qthermo::linear_beta_grid(require(a.beta_max, "--beta-max"), a.points);
  const auto rows = qthermo::fig1_curves(a.epsilon, grid);
  const auto& path = require(a.out, "--out");
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw qthermo::IoError("cannot open '" + path + "' for writing", path);
  qthermo::write_fig1_csv(file, rows);
  if (!file.flush()) throw qthermo::IoError("write to '" + path + "' failed", path);
  return 0;
}

int run_sweep(const SweepArgs& a) {
  qthermo::SweepPlan plan;
  plan.protocol = qthermo::parse_protocol(a.protocol);
  plan.n_values = a.n_values;
  plan.trials_per_n = a.trials;
  plan.epsilon = a.epsilon;
  plan.beta_true = a.beta_true;
  plan.estimator = qthermo::parse_estimator_mode(a.estimator);
  plan.bath_mode = qthermo::parse_bath_mode(a.bath_mode);
  plan.repetitions = a.reps;
  plan.operating_point = qthermo::parse_operating_point(a.operating_point);
  plan.master_seed = a.seed;
  plan.exec.threads = a.threads;
  if (plan.protocol != qthermo::Protocol::thermalizing) {
    plan.bath.emplace(require(a.bath_m, "--bath-m"), a.epsilon, a.beta_true, require(a.alpha, "--alpha"),
                      require(a.tau, "--tau"));
  }
  const auto format = qthermo::parse_output_format(a.format);
  const auto& out = require(a.out, "--out");

  const auto result = qthermo::run_sweep(plan);
  qthermo::emit_results(result.points, result.fit, format, out);
  std::cerr << "slope=" << qthermo::format_double(result.fit.slope)
            << " stderr=" << qthermo::format_double(result.fit.stderr_slope)
            << " r2=" << qthermo::format_double(result.fit.r_squared) << '\n';
  return 0;
}

int run_verify() {
  const auto checks = qthermo::run_oracle_verification();
  for (const auto& c : checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  cases=" << c.cases
              << " max_error=" << qthermo::format_double(c.max_error)
              << " tolerance=" << qthermo::format_double(c.tolerance) << '\n';
  }
  return qthermo::all_passed(checks) ? 0 : kExitVerifyFailed;
}

int run_dephasing(const DephasingArgs& a) {
  const qthermo::BathSpec bath(require(a.bath_m, "--bath-m"), a.epsilon, require(a.beta_true, "--beta-true"),
                               require(a.theta, "--theta"), 1.0);
  using qthermo::format_double;
  std::cout << "excited_fraction=" << format_double(bath.excited_fraction()) << '\n';
  std::cout << "closed_form=" << format_double(qthermo::dephasing_visibility(bath, a.n)) << '\n';
  if (bath.m_atoms() <= qthermo::oracle::kMaxEnumeratedAtoms) {
    const double n_phase = static_cast<double>(a.n) * bath.theta();
    std::cout << "oracle=" << format_double(qthermo::oracle::mixed_bath_visibility_exact(
                                  static_cast<int>(bath.m_atoms()), bath.excited_fraction(), n_phase))
              << '\n';
  }
  if (a.shots > 0) {
    const auto fringe = qthermo::measure_dephased_fringe(bath, a.n, a.shots, qthermo::RngStream(a.seed, 0));
    std::cout << "empirical=" << format_double(fringe.visibility) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermometry precision toolkit: thermal statistics, protocol sweeps and exact checks"};
  app.require_subcommand(1);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Closed-form thermal statistics of N two-level atoms");
  stats_cmd->add_option("--config", stats.config, "key = value file");
  stats_cmd->add_option("--epsilon", stats.epsilon, "Level splitting")->capture_default_str();
  stats_cmd->add_option("--beta", stats.beta, "Inverse temperature (required)");
  stats_cmd->add_option("--n", stats.n, "Number of atoms")->capture_default_str();

  Fig1Args fig1;
  auto* fig1_cmd = app.add_subcommand("fig1", "Per-atom energy and scaled shot-noise precision vs beta*epsilon");
  fig1_cmd->add_option("--config", fig1.config, "key = value file");
  fig1_cmd->add_option("--epsilon", fig1.epsilon, "Level splitting")->capture_default_str();
  fig1_cmd->add_option("--beta-max", fig1.beta_max, "Largest beta on the grid (required)");
  fig1_cmd->add_option("--points", fig1.points, "Grid points")->capture_default_str();
  fig1_cmd->add_option("--out", fig1.out, "Output CSV (required)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo N-sweep with log-log scaling fit");
  sweep_cmd->add_option("--config", sweep.config, "key = value file");
  sweep_cmd->add_option("--protocol", sweep.protocol, "thermalizing|sn|noon")->capture_default_str();
  sweep_cmd->add_option("--n-values", sweep.n_values, "Comma separated, strictly increasing")->delimiter(',');
  sweep_cmd->add_option("--trials", sweep.trials, "Trials per n")->capture_default_str();
  sweep_cmd->add_option("--reps", sweep.reps, "NOON shots per trial")->capture_default_str();
  sweep_cmd->add_option("--bath-m", sweep.bath_m, "Bath atoms M");
  sweep_cmd->add_option("--alpha", sweep.alpha, "Coupling rate");
  sweep_cmd->add_option("--tau", sweep.tau, "Interaction time");
  sweep_cmd->add_option("--beta-true", sweep.beta_true, "True inverse temperature")->capture_default_str();
  sweep_cmd->add_option("--epsilon", sweep.epsilon, "Level splitting")->capture_default_str();
  sweep_cmd->add_option("--bath-mode", sweep.bath_mode, "fixed|sampled")->capture_default_str();
  sweep_cmd->add_option("--estimator", sweep.estimator, "jeffreys|raw")->capture_default_str();
  sweep_cmd->add_option("--operating-point", sweep.operating_point, "centered|bare")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Master seed")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Output file (required)");
  sweep_cmd->add_option("--format", sweep.format, "csv|jsonl")->capture_default_str();
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run the exact-oracle equivalence suite");

  DephasingArgs deph;
  auto* deph_cmd = app.add_subcommand("dephasing", "NOON fringe visibility for a fluctuating bath");
  deph_cmd->add_option("--config", deph.config, "key = value file");
  deph_cmd->add_option("--bath-m", deph.bath_m, "Bath atoms M (required)");
  deph_cmd->add_option("--theta", deph.theta, "Phase per excited bath atom (required)");
  deph_cmd->add_option("--n", deph.n, "NOON atoms")->capture_default_str();
  deph_cmd->add_option("--beta-true", deph.beta_true, "True inverse temperature (required)");
  deph_cmd->add_option("--epsilon", deph.epsilon, "Level splitting")->capture_default_str();
  deph_cmd->add_option("--shots", deph.shots, "Also simulate this many shots per quadrature")->capture_default_str();
  deph_cmd->add_option("--seed", deph.seed, "Seed for --shots")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*stats_cmd) {
      apply_config(*stats_cmd, stats.config);
      return run_stats(stats);
    }
    if (*fig1_cmd) {
      apply_config(*fig1_cmd, fig1.config);
      return run_fig1(fig1);
    }
    if (*sweep_cmd) {
      apply_config(*sweep_cmd, sweep.config);
      return run_sweep(sweep);
    }
    if (*verify_cmd) return run_verify();
    if (*deph_cmd) {
      apply_config(*deph_cmd, deph.config);
      return run_dephasing(deph);
    }
  } catch (const qthermo::EmptyBatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEmptyBatch;
  } catch (const qthermo::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const qthermo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

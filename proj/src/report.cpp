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

#include "qthermo/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace qthermo {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json to_json(const SweepPoint& p) {
  ordered_json j;
  j["n"] = p.n;
  j["sigma_beta_empirical"] = p.sigma_beta_empirical;
  j["sigma_beta_theory"] = p.sigma_beta_theory;
  j["invalid_fraction"] = p.invalid_fraction;
  j["trials"] = p.trials;
  return j;
}

ordered_json to_json(const ScalingFit& fit) {
  ordered_json points = ordered_json::array();
  for (const auto& [n, sigma] : fit.points) points.push_back(ordered_json::array({n, sigma}));
  ordered_json body;
  body["slope"] = fit.slope;
  body["intercept"] = fit.intercept;
  body["stderr_slope"] = fit.stderr_slope;
  body["r_squared"] = fit.r_squared;
  body["points"] = std::move(points);
  ordered_json j;
  j["fit"] = std::move(body);
  return j;
}

// nlohmann writes non-finite doubles as null.
double number_or_nan(const nlohmann::json& v) {
  return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "jsonl") return OutputFormat::jsonl;
  throw ConfigError("unknown output format '" + std::string(name) + "' (expected csv|jsonl)");
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points, const std::optional<ScalingFit>& fit) {
  out << kSweepCsvHeader << '\n';
  for (const auto& p : points) {
    out << p.n << ',' << format_double(p.sigma_beta_empirical) << ',' << format_double(p.sigma_beta_theory) << ','
        << format_double(p.invalid_fraction) << ',' << p.trials << '\n';
  }
  if (fit) {
    out << "#fit," << format_double(fit->slope) << ',' << format_double(fit->stderr_slope) << ','
        << format_double(fit->r_squared) << '\n';
  }
}

void write_sweep_jsonl(std::ostream& out, std::span<const SweepPoint> points, const std::optional<ScalingFit>& fit) {
  for (const auto& p : points) out << to_json(p).dump() << '\n';
  if (fit) out << to_json(*fit).dump() << '\n';
}

void emit_results(std::span<const SweepPoint> points, const std::optional<ScalingFit>& fit, OutputFormat format,
                  const std::filesystem::path& destination) {
  std::ostringstream buffer;
  if (format == OutputFormat::csv) {
    write_sweep_csv(buffer, points, fit);
  } else {
    write_sweep_jsonl(buffer, points, fit);
  }
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + destination.string() + "' for writing", destination.string());
  file << buffer.str();
  file.flush();
  if (!file) throw IoError("write to '" + destination.string() + "' failed", destination.string());
}

ParsedSweep parse_sweep_jsonl(std::istream& in) {
  ParsedSweep parsed;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      if (j.contains("fit")) {
        const auto& f = j.at("fit");
        ScalingFit fit;
        fit.slope = number_or_nan(f.at("slope"));
        fit.intercept = number_or_nan(f.at("intercept"));
        fit.stderr_slope = number_or_nan(f.at("stderr_slope"));
        fit.r_squared = number_or_nan(f.at("r_squared"));
        for (const auto& pt : f.at("points")) {
          fit.points.emplace_back(pt.at(0).get<std::int64_t>(), pt.at(1).get<double>());
        }
        parsed.fit = std::move(fit);
      } else {
        SweepPoint p;
        p.n = j.at("n").get<std::int64_t>();
        p.sigma_beta_empirical = number_or_nan(j.at("sigma_beta_empirical"));
        p.sigma_beta_theory = number_or_nan(j.at("sigma_beta_theory"));
        p.invalid_fraction = number_or_nan(j.at("invalid_fraction"));
        p.trials = j.at("trials").get<std::int64_t>();
        parsed.points.push_back(p);
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("malformed JSONL record on line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return parsed;
}

void write_fig1_csv(std::ostream& out, std::span<const Fig1Row> rows) {
  out << "beta_epsilon,eps_bar_over_epsilon,sqrt_n_sigma_beta_epsilon\n";
  for (const auto& r : rows) {
    out << format_double(r.beta_epsilon) << ',' << format_double(r.eps_bar_over_epsilon) << ','
        << format_double(r.sqrt_n_sigma_beta_epsilon) << '\n';
  }
}

}  // namespace qthermo

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

// Flat-file output. CSV is the canonical format; JSONL carries the same
// records, one JSON object per line, followed by one fit object.
//
// CSV layout:
//   n,sigma_beta_empirical,sigma_beta_theory,invalid_fraction,trials
//   <one row per point>
//   #fit,<slope>,<stderr>,<r2>
// Floats are printed with 17 significant digits.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qthermo/scaling_fit.hpp"
#include "qthermo/sweep.hpp"

namespace qthermo {

enum class OutputFormat { csv, jsonl };

OutputFormat parse_output_format(std::string_view name);

inline constexpr std::string_view kSweepCsvHeader = "n,sigma_beta_empirical,sigma_beta_theory,invalid_fraction,trials";

std::string format_double(double value);

void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points, const std::optional<ScalingFit>& fit);
void write_sweep_jsonl(std::ostream& out, std::span<const SweepPoint> points, const std::optional<ScalingFit>& fit);

/// Writes to `destination`; throws IoError naming the path on failure.
void emit_results(std::span<const SweepPoint> points, const std::optional<ScalingFit>& fit, OutputFormat format,
                  const std::filesystem::path& destination);

struct ParsedSweep {
  std::vector<SweepPoint> points;
  std::optional<ScalingFit> fit;
};

ParsedSweep parse_sweep_jsonl(std::istream& in);

void write_fig1_csv(std::ostream& out, std::span<const Fig1Row> rows);

}  // namespace qthermo

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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qthermo {

/// Ordinary least-squares fit of log(sigma) = intercept + slope * log(n).
struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<std::int64_t, double>> points;  // (n, sigma) actually used

  bool operator==(const ScalingFit&) const = default;
};

inline constexpr std::size_t kMinFitPoints = 4;

/// Points with non-finite or non-positive sigma are dropped; throws
/// ConfigError if fewer than kMinFitPoints remain or all n coincide.
ScalingFit fit_power_law(std::span<const std::pair<std::int64_t, double>> points);

}  // namespace qthermo

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

#include "qthermo/scaling_fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "qthermo/error.hpp"

namespace qthermo {

ScalingFit fit_power_law(std::span<const std::pair<std::int64_t, double>> points) {
  ScalingFit fit;
  for (const auto& [n, sigma] : points) {
    if (n >= 1 && std::isfinite(sigma) && sigma > 0.0) fit.points.emplace_back(n, sigma);
  }
  const auto count = static_cast<Eigen::Index>(fit.points.size());
  if (fit.points.size() < kMinFitPoints) {
    throw ConfigError("scaling fit needs at least " + std::to_string(kMinFitPoints) + " valid points, got " +
                      std::to_string(count));
  }

  Eigen::MatrixXd design(count, 2);
  Eigen::VectorXd y(count);
  for (Eigen::Index i = 0; i < count; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = std::log(static_cast<double>(fit.points[i].first));
    y(i) = std::log(fit.points[i].second);
  }
  const Eigen::VectorXd x = design.col(1);
  const double sxx = (x.array() - x.mean()).square().sum();
  if (!(sxx > 0.0)) throw ConfigError("scaling fit needs at least two distinct n values");

  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(y);
  fit.intercept = coef(0);
  fit.slope = coef(1);

  const Eigen::VectorXd residual = y - design * coef;
  const double rss = residual.squaredNorm();
  const double tss = (y.array() - y.mean()).square().sum();
  fit.stderr_slope = std::sqrt(rss / static_cast<double>(count - 2) / sxx);
  // A flat input (tss at rounding level) is fitted perfectly by slope 0.
  const bool flat = tss <= 1e-28 * std::max(1.0, y.squaredNorm());
  fit.r_squared = flat ? 1.0 : std::clamp(1.0 - rss / tss, 0.0, 1.0);
  return fit;
}

}  // namespace qthermo

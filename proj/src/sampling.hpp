// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace lunehankel::detail {

/// Points r e^{i theta_j}, theta_j = 2 pi j / samples, over each radius in turn.
struct CircleGrid {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> radius;
  std::vector<double> angle;

  CircleGrid(const std::vector<double>& radii, int samples) {
    const auto n = radii.size() * static_cast<std::size_t>(samples);
    xs.reserve(n);
    ys.reserve(n);
    radius.reserve(n);
    angle.reserve(n);
    for (double r : radii) {
      for (int j = 0; j < samples; ++j) {
        const double th = 2.0 * std::numbers::pi * j / samples;
        xs.push_back(r * std::cos(th));
        ys.push_back(r * std::sin(th));
        radius.push_back(r);
        angle.push_back(th);
      }
    }
  }
};

}  // namespace lunehankel::detail

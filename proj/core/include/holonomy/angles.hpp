// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>

namespace holonomy {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps an angle into (-pi, pi].
inline double wrap_phase(double x) {
  double r = std::remainder(x, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

/// Distance from x to the nearest integer multiple of 2*pi; lies in [0, pi].
inline double distance_to_2pi_multiple(double x) { return std::fabs(std::remainder(x, kTwoPi)); }

/// Shortest distance between two angles on the circle; lies in [0, pi].
inline double circular_distance(double a, double b) { return distance_to_2pi_multiple(a - b); }

}  // namespace holonomy

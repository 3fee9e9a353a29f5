// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "holonomy/linalg.hpp"

namespace holonomy {

/// Seeded source for reproducible random matrices and states.
///
/// Draws are std::mt19937_64 fed through std::normal_distribution, so runs are
/// bit-reproducible for a given standard library, not across implementations.
class Rng {
 public:
  static constexpr std::string_view kGeneratorName = "mt19937_64/std::normal_distribution";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  /// Standard complex normal: E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// (G + G^dag) / 2 with G an i.i.d. standard complex normal matrix.
HermitianMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Haar-random unit vector.
std::vector<Complex> random_amplitudes(std::size_t dim, Rng& rng);

}  // namespace holonomy

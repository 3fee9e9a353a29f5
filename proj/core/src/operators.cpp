// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include "holonomy/operators.hpp"

#include <cmath>

#include "holonomy/errors.hpp"

namespace holonomy {

HermitianMatrix pauli_x() { return HermitianMatrix(Matrix(2, 2, {0.0, 1.0, 1.0, 0.0})); }

HermitianMatrix pauli_y() {
  return HermitianMatrix(Matrix(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}));
}

HermitianMatrix pauli_z() { return HermitianMatrix(Matrix(2, 2, {1.0, 0.0, 0.0, -1.0})); }

std::array<HermitianMatrix, 3> spin_matrices(int two_j) {
  if (two_j < 1) throw InvalidArgument("spin must be at least 1/2");
  const auto d = static_cast<std::size_t>(two_j + 1);
  const double j = 0.5 * two_j;
  Matrix plus(d, d);  // S+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>
  Matrix sz(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const double m = j - static_cast<double>(k);
    sz(k, k) = m;
    if (k > 0) plus(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const Matrix minus = plus.adjoint();
  Matrix sx = (plus + minus) * Complex(0.5);
  Matrix sy = (plus - minus) * Complex(0.0, -0.5);
  return {HermitianMatrix(sx), HermitianMatrix(sy), HermitianMatrix(sz)};
}

HermitianMatrix spin_dot(const std::array<HermitianMatrix, 3>& s, double nx, double ny, double nz) {
  return nx * s[0] + ny * s[1] + nz * s[2];
}

}  // namespace holonomy

// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include "holonomy/random.hpp"

#include <cmath>

#include "holonomy/errors.hpp"

namespace holonomy {

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * M_SQRT1_2;
}

HermitianMatrix random_hermitian(std::size_t dim, Rng& rng) {
  if (dim == 0) throw InvalidArgument("dimension must be >= 1");
  Matrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return HermitianMatrix((g + g.adjoint()) * Complex(0.5));
}

std::vector<Complex> random_amplitudes(std::size_t dim, Rng& rng) {
  if (dim == 0) throw InvalidArgument("dimension must be >= 1");
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  for (auto& z : v) {
    z = rng.complex_normal();
    norm2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : v) z *= inv;
  return v;
}

}  // namespace holonomy

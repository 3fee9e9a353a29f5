// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include "holonomy/gates.hpp"

#include <cmath>

#include "holonomy/angles.hpp"
#include "holonomy/errors.hpp"

namespace holonomy {

UnitaryMatrix phase_gate(const Frame& frame, std::span<const double> gammas) {
  const std::size_t d = frame.dim();
  if (gammas.size() != d) throw DimensionMismatch(d, gammas.size());
  Matrix u(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Complex e = std::polar(1.0, gammas[j]);
    const auto& phi = frame.column(j);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) u(r, c) += e * phi[r] * std::conj(phi[c]);
  }
  return UnitaryMatrix(std::move(u));
}

GateVerdict gate_verdict(const Matrix& u, double tolerance) {
  constexpr double kUnitarityTolerance = 1e-8;
  if (!u.is_square() || u.rows() == 0) throw InvalidArgument("gate must be a square matrix");
  const double defect = unitarity_defect(u);
  if (!(defect <= kUnitarityTolerance)) throw NotUnitary(defect);

  GateVerdict v;
  v.det = determinant(u);
  v.det_phase = wrap_phase(std::arg(v.det));
  v.tolerance = tolerance;
  v.geometric_feasible = std::fabs(v.det_phase) < tolerance;
  return v;
}

UnitaryMatrix hadamard_gate(std::size_t d) {
  if (d < 2) throw InvalidArgument("Hadamard gate needs d >= 2");
  Matrix h(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t mu = 0; mu < d; ++mu) {
    for (std::size_t nu = 0; nu < d; ++nu) {
      // Reduce mu * nu mod d first so the angle stays exact for large products.
      const double k = static_cast<double>((mu * nu) % d);
      h(mu, nu) = std::polar(norm, kTwoPi * k / static_cast<double>(d));
    }
  }
  return UnitaryMatrix(std::move(h));
}

}  // namespace holonomy

// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file gates.hpp
 * @brief Geometric phase gates and the determinant constraint they obey.
 *
 * A phase gate U = sum_j e^{i gamma_j} |phi_j><phi_j| built from the geometric
 * phases of one complete cyclic evolution has det U = e^{i sum_j gamma_j} = 1,
 * so it lies in SU(d). gate_verdict reports whether a given unitary passes that
 * necessary condition. The verdict says nothing about composite schemes that
 * chain several evolutions, nor about redefining the global phase.
 */

#pragma once

#include <span>

#include "holonomy/linalg.hpp"
#include "holonomy/states.hpp"

namespace holonomy {

inline constexpr double kDefaultGateTolerance = 1e-6;

struct GateVerdict {
  Complex det;
  /// arg det, in (-pi, pi].
  double det_phase = 0.0;
  bool geometric_feasible = false;
  double tolerance = kDefaultGateTolerance;
};

/// sum_j e^{i gammas[j]} |phi_j><phi_j|.
UnitaryMatrix phase_gate(const Frame& frame, std::span<const double> gammas);

/// Throws NotUnitary when max |U^dag U - 1| > 1e-8.
GateVerdict gate_verdict(const Matrix& u, double tolerance = kDefaultGateTolerance);
inline GateVerdict gate_verdict(const UnitaryMatrix& u, double tolerance = kDefaultGateTolerance) {
  return gate_verdict(u.matrix(), tolerance);
}

/// (1/sqrt d) sum_{mu,nu} e^{2 pi i mu nu / d} |mu><nu|, d >= 2.
UnitaryMatrix hadamard_gate(std::size_t d);

}  // namespace holonomy

// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file phases.hpp
 * @brief Total, dynamical and geometric phases of cyclic evolutions, Bargmann
 *        phases of discrete loops, and the sum rule over a complete cyclic set.
 *
 * For a cyclic trajectory psi(T) = e^{i alpha} psi(0):
 *   total      alpha = arg <psi(0)|psi(T)>
 *   dynamical  delta = -int_0^T <psi|H|psi> dt        (trapezoid rule)
 *   geometric  gamma = alpha - delta                   (wrapped to (-pi, pi])
 *
 * For a complete set of cyclic states the geometric phases add up to a multiple
 * of 2 pi; SumRuleReport measures the distance to the nearest multiple.
 */

#pragma once

#include <span>
#include <vector>

#include "holonomy/evolution.hpp"
#include "holonomy/states.hpp"

namespace holonomy {

struct PhaseDecomposition {
  double total = 0.0;      ///< (-pi, pi]
  double dynamical = 0.0;  ///< unwrapped
  double geometric = 0.0;  ///< (-pi, pi]
};

inline constexpr double kCyclicityThreshold = 1e-6;

/// Throws NonCyclic if 1 - |<psi(0)|psi(T)>| exceeds kCyclicityThreshold.
PhaseDecomposition phase_decomposition(const Trajectory& traj);

/// -arg prod_k <p_k|p_{k+1}> (cyclic), wrapped to (-pi, pi]. Independent of the
/// phase of each point.
double bargmann_phase(const DiscreteLoop& loop);

/// Distance of sum(phases) to the nearest multiple of 2 pi, in [0, pi].
double sum_rule_residual(std::span<const double> phases);

struct SumRuleReport {
  CyclicSet cyclic;
  std::vector<PhaseDecomposition> decompositions;
  /// decompositions[j].geometric, for convenience.
  std::vector<double> phases;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  bool degenerate() const noexcept { return cyclic.degenerate; }
};

/// Evolves over [0, T], extracts the cyclic eigenstates of U(T) and decomposes the
/// phase of each along its own trajectory. Per-state work runs in parallel; the
/// report is independent of scheduling.
SumRuleReport sum_rule_check(const HamiltonianSampler& h, double duration,
                             std::size_t steps = kDefaultSteps, double tolerance = 1e-6);

}  // namespace holonomy

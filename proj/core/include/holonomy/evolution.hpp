// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file evolution.hpp
 * @brief Cyclic evolutions: time-ordered propagation, cyclic eigenstates of U(T),
 *        sampled trajectories and measurement-sequence loops.
 *
 * Time stepping uses the midpoint rule
 *   U(T) = prod_k exp(-i H(t_k + dt/2) dt),  dt = T / N,
 * with later steps applied on the left. The scheme is second order in dt.
 */

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "holonomy/linalg.hpp"
#include "holonomy/states.hpp"

namespace holonomy {

inline constexpr std::size_t kDefaultSteps = 4096;

/// t -> H(t). The callable must be deterministic in t and safe to call concurrently.
class HamiltonianSampler {
 public:
  using Function = std::function<HermitianMatrix(double)>;

  HamiltonianSampler(std::size_t dim, Function fn);
  static HamiltonianSampler constant(HermitianMatrix h);

  std::size_t dim() const noexcept { return dim_; }
  bool is_constant() const noexcept { return constant_.has_value(); }

  /// Throws DimensionMismatch if the callable returns a matrix of the wrong size.
  HermitianMatrix operator()(double t) const;

 private:
  std::size_t dim_;
  Function fn_;
  std::optional<HermitianMatrix> constant_;
};

/// Midpoint-rule time-ordered propagator over [0, T] in `steps` steps.
UnitaryMatrix evolve(const HamiltonianSampler& h, double duration, std::size_t steps = kDefaultSteps);

class Trajectory {
 public:
  /// Throws InvalidArgument if sizes differ, times do not start at 0 and increase
  /// strictly, or the states mix dimensions.
  Trajectory(std::vector<double> times, std::vector<StateVector> states, std::vector<double> energies);

  std::size_t size() const noexcept { return times_.size(); }
  std::span<const double> times() const noexcept { return times_; }
  std::span<const StateVector> states() const noexcept { return states_; }
  /// <psi(t_k)|H(t_k)|psi(t_k)>.
  std::span<const double> energies() const noexcept { return energies_; }

 private:
  std::vector<double> times_;
  std::vector<StateVector> states_;
  std::vector<double> energies_;
};

/// Samples psi(t_k) = U(t_k, 0) psi0 on the uniform grid t_k = k T / N, one step
/// propagator per sample, and records the energy expectation at each t_k.
Trajectory trajectory(const HamiltonianSampler& h, const StateVector& psi0, double duration,
                      std::size_t steps = kDefaultSteps);

struct CyclicSet {
  /// Eigenvectors of U(T); U(T) frame[j] = e^{i alphas[j]} frame[j].
  Frame frame;
  /// In (-pi, pi].
  std::vector<double> alphas;
  /// Two eigenphases closer than kDegeneracyGap on the circle.
  bool degenerate = false;

  static constexpr double kDegeneracyGap = 1e-8;
};

/// Eigendecomposition of a unitary via its commuting Hermitian parts
/// (U + U^dag)/2 and (U - U^dag)/2i. Columns are ordered by the index of their
/// largest-magnitude component, then by eigenphase.
CyclicSet cyclic_states(const UnitaryMatrix& u);

/// Validates a measurement record as a closed Bargmann-regular loop. Throws
/// OrthogonalStates if consecutive projectors are orthogonal.
DiscreteLoop measurement_loop(std::vector<StateVector> projector_states);

}  // namespace holonomy

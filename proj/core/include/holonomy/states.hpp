// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file states.hpp
 * @brief Pure states, orthonormal frames (complete sets of local sections) and
 *        discrete loops in projective Hilbert space.
 *
 * A Frame stores amplitudes y_mu^(j) = columns[j][mu] subject to
 *   sum_mu conj(y_mu^(j)) y_mu^(k) = delta_jk.
 */

#pragma once

#include <array>
#include <span>
#include <vector>

#include "holonomy/linalg.hpp"

namespace holonomy {

class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws InvalidArgument unless |sum |a|^2 - 1| <= kNormTolerance.
  explicit StateVector(std::vector<Complex> amps);

  /// Rescales to unit norm; throws InvalidArgument for the zero vector.
  static StateVector normalized(std::vector<Complex> amps);
  static StateVector basis(std::size_t dim, std::size_t k);

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amps() const noexcept { return amps_; }
  const Complex& operator[](std::size_t mu) const { return amps_[mu]; }

  /// e^{i phase} |this>, same ray.
  StateVector with_phase(double phase) const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  struct Trusted {};
  StateVector(std::vector<Complex> amps, Trusted) : amps_(std::move(amps)) {}

  std::vector<Complex> amps_;
};

/// <a|b>. Throws DimensionMismatch.
Complex overlap(const StateVector& a, const StateVector& b);

class Frame {
 public:
  static constexpr double kOrthonormalityTolerance = 1e-10;

  /// Throws InvalidArgument unless there are exactly dim columns, orthonormal within tolerance.
  explicit Frame(std::vector<StateVector> columns);
  /// Columns of a (numerically) unitary matrix.
  static Frame from_matrix(const Matrix& m);
  static Frame canonical(std::size_t dim);

  std::size_t dim() const noexcept { return columns_.size(); }
  const StateVector& column(std::size_t j) const { return columns_[j]; }
  std::span<const StateVector> columns() const noexcept { return columns_; }
  /// y_mu^(j).
  const Complex& amp(std::size_t j, std::size_t mu) const { return columns_[j][mu]; }

  Matrix matrix() const;

  /// max_{jk} |<phi_j|phi_k> - delta_jk|.
  double orthonormality_defect() const;

 private:
  std::vector<StateVector> columns_;
};

/// Completes seed to an orthonormal frame with columns[0] = seed. For d = 2 the
/// second column is (-conj(x1), conj(x0)); for d > 2 the remaining columns come from
/// Gram-Schmidt against e_0, e_1, ... in order, skipping near-parallel candidates.
Frame complete_frame(const StateVector& seed);

/// Qubit frame at Bloch angles: columns[0] = (cos(theta/2), e^{i phi} sin(theta/2)),
/// columns[1] by the completion rule.
Frame bloch_frame(double theta, double phi);

/// (x, y, z) = (<sigma_x>, <sigma_y>, <sigma_z>) for a qubit state.
std::array<double, 3> bloch_vector(const StateVector& s);

/// A closed polygon of states; points.back() connects back to points.front().
class DiscreteLoop {
 public:
  static constexpr double kMinOverlap = 1e-9;

  /// Throws InvalidArgument for fewer than two points or mixed dimensions, and
  /// OrthogonalStates when any consecutive (or wraparound) overlap is <= kMinOverlap.
  explicit DiscreteLoop(std::vector<StateVector> points);

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dim() const noexcept { return points_.front().dim(); }
  std::span<const StateVector> points() const noexcept { return points_; }

  DiscreteLoop reversed() const;

 private:
  std::vector<StateVector> points_;
};

}  // namespace holonomy

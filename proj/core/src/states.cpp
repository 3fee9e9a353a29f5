// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include "holonomy/states.hpp"

#include <algorithm>
#include <cmath>

#include "holonomy/errors.hpp"

namespace holonomy {

namespace {

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {
  if (amps_.empty()) throw InvalidArgument("state vector must have dim >= 1");
  const double n2 = norm2(amps_);
  if (!(std::fabs(n2 - 1.0) <= kNormTolerance))
    throw InvalidArgument("state vector is not normalized: |psi|^2 = " + std::to_string(n2));
}

StateVector StateVector::normalized(std::vector<Complex> amps) {
  if (amps.empty()) throw InvalidArgument("state vector must have dim >= 1");
  const double n = std::sqrt(norm2(amps));
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("cannot normalize a zero vector");
  for (auto& z : amps) z /= n;
  return StateVector(std::move(amps), Trusted{});
}

StateVector StateVector::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) throw InvalidArgument("basis index out of range");
  std::vector<Complex> v(dim);
  v[k] = 1.0;
  return StateVector(std::move(v), Trusted{});
}

StateVector StateVector::with_phase(double phase) const {
  const Complex e = std::polar(1.0, phase);
  std::vector<Complex> v = amps_;
  for (auto& z : v) z *= e;
  return StateVector(std::move(v), Trusted{});
}

Complex overlap(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  return inner(a.amps(), b.amps());
}

// ---------------------------------------------------------------------------

Frame::Frame(std::vector<StateVector> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw InvalidArgument("frame must have at least one column");
  const std::size_t d = columns_.size();
  for (const auto& c : columns_)
    if (c.dim() != d) throw DimensionMismatch(d, c.dim());
  const double defect = orthonormality_defect();
  if (!(defect <= kOrthonormalityTolerance))
    throw InvalidArgument("frame columns are not orthonormal (defect " + std::to_string(defect) +
                          ")");
}

Frame Frame::from_matrix(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("frame matrix must be square");
  std::vector<StateVector> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(StateVector::normalized(m.column(j)));
  return Frame(std::move(cols));
}

Frame Frame::canonical(std::size_t dim) {
  std::vector<StateVector> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(StateVector::basis(dim, j));
  return Frame(std::move(cols));
}

Matrix Frame::matrix() const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t mu = 0; mu < d; ++mu) m(mu, j) = columns_[j][mu];
  return m;
}

double Frame::orthonormality_defect() const {
  double worst = 0.0;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (std::size_t k = j; k < columns_.size(); ++k) {
      const Complex g = overlap(columns_[j], columns_[k]);
      worst = std::max(worst, std::abs(g - (j == k ? 1.0 : 0.0)));
    }
  }
  return worst;
}

Frame complete_frame(const StateVector& seed) {
  const std::size_t d = seed.dim();
  if (d == 1) return Frame({seed});
  if (d == 2) {
    return Frame({seed, StateVector({-std::conj(seed[1]), std::conj(seed[0])})});
  }

  constexpr double kParallelThreshold = 1e-6;
  std::vector<std::vector<Complex>> basis;
  basis.emplace_back(seed.amps().begin(), seed.amps().end());
  for (std::size_t e = 0; e < d && basis.size() < d; ++e) {
    std::vector<Complex> v(d);
    v[e] = 1.0;
    // Two Gram-Schmidt passes keep the orthogonality at rounding level.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const Complex c = inner(b, v);
        for (std::size_t i = 0; i < d; ++i) v[i] -= c * b[i];
      }
    }
    const double n = std::sqrt(norm2(v));
    if (n < kParallelThreshold) continue;
    for (auto& z : v) z /= n;
    basis.push_back(std::move(v));
  }

  std::vector<StateVector> cols{seed};
  for (std::size_t j = 1; j < basis.size(); ++j) cols.push_back(StateVector::normalized(basis[j]));
  return Frame(std::move(cols));
}

Frame bloch_frame(double theta, double phi) {
  const auto seed = StateVector::normalized(
      {std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi)});
  return complete_frame(seed);
}

std::array<double, 3> bloch_vector(const StateVector& s) {
  if (s.dim() != 2) throw DimensionMismatch(2, s.dim());
  const Complex c = std::conj(s[0]) * s[1];
  return {2.0 * c.real(), 2.0 * c.imag(), std::norm(s[0]) - std::norm(s[1])};
}

// ---------------------------------------------------------------------------

DiscreteLoop::DiscreteLoop(std::vector<StateVector> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidArgument("a loop needs at least two points");
  const std::size_t d = points_.front().dim();
  for (const auto& p : points_)
    if (p.dim() != d) throw DimensionMismatch(d, p.dim());
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const double m = std::abs(overlap(points_[k], points_[(k + 1) % points_.size()]));
    if (!(m > kMinOverlap)) throw OrthogonalStates(k, m);
  }
}

DiscreteLoop DiscreteLoop::reversed() const {
  std::vector<StateVector> pts(points_.rbegin(), points_.rend());
  return DiscreteLoop(std::move(pts));
}

}  // namespace holonomy

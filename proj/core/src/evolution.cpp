// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include "holonomy/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "holonomy/angles.hpp"
#include "holonomy/errors.hpp"

namespace holonomy {

HamiltonianSampler::HamiltonianSampler(std::size_t dim, Function fn) : dim_(dim), fn_(std::move(fn)) {
  if (dim_ == 0) throw InvalidArgument("Hamiltonian dimension must be >= 1");
  if (!fn_) throw InvalidArgument("Hamiltonian sampler needs a callable");
}

HamiltonianSampler HamiltonianSampler::constant(HermitianMatrix h) {
  const std::size_t d = h.dim();
  HamiltonianSampler s(d, [h](double) { return h; });
  s.constant_ = std::move(h);
  return s;
}

HermitianMatrix HamiltonianSampler::operator()(double t) const {
  if (constant_) return *constant_;
  HermitianMatrix h = fn_(t);
  if (h.dim() != dim_) throw DimensionMismatch(dim_, h.dim());
  return h;
}

namespace {

void check_schedule(double duration, std::size_t steps) {
  if (!(duration > 0.0) || !std::isfinite(duration))
    throw InvalidArgument("duration must be positive and finite");
  if (steps < 1) throw InvalidArgument("step count must be >= 1");
}

// Step propagators exp(-i H(t_k + dt/2) dt); the constant case diagonalizes once.
class Stepper {
 public:
  Stepper(const HamiltonianSampler& h, double duration, std::size_t steps)
      : h_(h), dt_(duration / static_cast<double>(steps)) {
    if (h_.is_constant()) fixed_.emplace(propagator(h_(0.0), dt_));
  }

  UnitaryMatrix step(std::size_t k) const {
    if (fixed_) return *fixed_;
    const double mid = (static_cast<double>(k) + 0.5) * dt_;
    return propagator(h_(mid), dt_);
  }

  double dt() const { return dt_; }

 private:
  const HamiltonianSampler& h_;
  double dt_;
  std::optional<UnitaryMatrix> fixed_;
};

}  // namespace

UnitaryMatrix evolve(const HamiltonianSampler& h, double duration, std::size_t steps) {
  check_schedule(duration, steps);
  const Stepper stepper(h, duration, steps);
  UnitaryMatrix u = stepper.step(0);
  for (std::size_t k = 1; k < steps; ++k) u = stepper.step(k) * u;
  return u;
}

// ---------------------------------------------------------------------------

Trajectory::Trajectory(std::vector<double> times, std::vector<StateVector> states,
                       std::vector<double> energies)
    : times_(std::move(times)), states_(std::move(states)), energies_(std::move(energies)) {
  if (times_.empty()) throw InvalidArgument("trajectory must contain at least one sample");
  if (states_.size() != times_.size()) throw DimensionMismatch(times_.size(), states_.size());
  if (energies_.size() != times_.size()) throw DimensionMismatch(times_.size(), energies_.size());
  if (times_.front() != 0.0) throw InvalidArgument("trajectory must start at t = 0");
  for (std::size_t k = 1; k < times_.size(); ++k)
    if (!(times_[k] > times_[k - 1])) throw InvalidArgument("trajectory times must increase strictly");
  for (const auto& s : states_)
    if (s.dim() != states_.front().dim()) throw DimensionMismatch(states_.front().dim(), s.dim());
}

Trajectory trajectory(const HamiltonianSampler& h, const StateVector& psi0, double duration,
                      std::size_t steps) {
  check_schedule(duration, steps);
  if (psi0.dim() != h.dim()) throw DimensionMismatch(h.dim(), psi0.dim());
  const Stepper stepper(h, duration, steps);

  std::vector<double> times(steps + 1);
  std::vector<StateVector> states;
  std::vector<double> energies(steps + 1);
  states.reserve(steps + 1);
  states.push_back(psi0);

  std::optional<HermitianMatrix> fixed;
  if (h.is_constant()) fixed.emplace(h(0.0));
  for (std::size_t k = 0; k <= steps; ++k) {
    times[k] = static_cast<double>(k) * stepper.dt();
    if (k > 0) {
      states.push_back(StateVector::normalized(stepper.step(k - 1).apply(states.back().amps())));
    }
    const auto& s = states.back();
    energies[k] = fixed ? fixed->expectation(s.amps()) : h(times[k]).expectation(s.amps());
  }
  times.back() = duration;
  return Trajectory(std::move(times), std::move(states), std::move(energies));
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kClusterGap = 1e-6;

// Orthonormal d x m basis of an approximately U-invariant subspace, split by
// alternately diagonalizing the restrictions of the two Hermitian parts.
void split_cluster(const Matrix& basis, const std::array<const HermitianMatrix*, 2>& parts, int part,
                   int stalls, std::vector<std::vector<Complex>>& out) {
  const std::size_t m = basis.cols();
  if (m == 1) {
    out.push_back(basis.column(0));
    return;
  }
  const HermitianMatrix restricted(basis.adjoint() * parts[part]->matrix() * basis, 1e-9);
  const EigenSystem eig = eig_hermitian(restricted);
  const Matrix rotated = basis * eig.vectors;

  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
  std::size_t begin = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    if (k == m || eig.values[k] - eig.values[k - 1] > kClusterGap) {
      groups.emplace_back(begin, k);
      begin = k;
    }
  }

  if (groups.size() == 1) {
    if (stalls >= 1) {
      // Neither part separates this block; its eigenphases coincide to within kClusterGap.
      for (std::size_t k = 0; k < m; ++k) out.push_back(rotated.column(k));
      return;
    }
    split_cluster(rotated, parts, 1 - part, stalls + 1, out);
    return;
  }
  for (const auto& [lo, hi] : groups) {
    Matrix sub(basis.rows(), hi - lo);
    for (std::size_t i = 0; i < basis.rows(); ++i)
      for (std::size_t k = lo; k < hi; ++k) sub(i, k - lo) = rotated(i, k);
    split_cluster(sub, parts, 1 - part, 0, out);
  }
}

std::size_t dominant_index(std::span<const Complex> v) {
  std::size_t idx = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > best * (1.0 + 1e-12)) {
      best = std::abs(v[i]);
      idx = i;
    }
  }
  return idx;
}

}  // namespace

CyclicSet cyclic_states(const UnitaryMatrix& u) {
  const std::size_t d = u.dim();
  const Matrix& m = u.matrix();
  const Matrix ud = m.adjoint();
  const HermitianMatrix re_part((m + ud) * Complex(0.5), 1e-9);
  const HermitianMatrix im_part((m - ud) * Complex(0.0, -0.5), 1e-9);

  std::vector<std::vector<Complex>> vectors;
  vectors.reserve(d);
  split_cluster(Matrix::identity(d), {&re_part, &im_part}, 0, 0, vectors);

  struct Entry {
    std::vector<Complex> v;
    double alpha;
    std::size_t key;
  };
  std::vector<Entry> entries;
  entries.reserve(d);
  for (auto& v : vectors) {
    fix_gauge(v);
    const auto uv = m.apply(v);
    Complex rayleigh = 0.0;
    for (std::size_t i = 0; i < d; ++i) rayleigh += std::conj(v[i]) * uv[i];
    const double alpha = wrap_phase(std::arg(rayleigh));
    const std::size_t key = dominant_index(v);
    entries.push_back({std::move(v), alpha, key});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.key != b.key ? a.key < b.key : a.alpha < b.alpha;
  });

  std::vector<StateVector> cols;
  std::vector<double> alphas;
  for (auto& e : entries) {
    cols.push_back(StateVector::normalized(std::move(e.v)));
    alphas.push_back(e.alpha);
  }

  bool degenerate = false;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k)
      if (circular_distance(alphas[j], alphas[k]) < CyclicSet::kDegeneracyGap) degenerate = true;

  return CyclicSet{Frame(std::move(cols)), std::move(alphas), degenerate};
}

DiscreteLoop measurement_loop(std::vector<StateVector> projector_states) {
  return DiscreteLoop(std::move(projector_states));
}

}  // namespace holonomy

// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include "holonomy/phases.hpp"

#include <cmath>
#include <optional>

#include "holonomy/angles.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/parallel.hpp"

namespace holonomy {

PhaseDecomposition phase_decomposition(const Trajectory& traj) {
  const auto states = traj.states();
  const Complex closure = overlap(states.front(), states.back());
  const double defect = 1.0 - std::abs(closure);
  if (!(defect <= kCyclicityThreshold)) throw NonCyclic(defect);

  const auto t = traj.times();
  const auto e = traj.energies();
  double integral = 0.0;
  for (std::size_t k = 1; k < t.size(); ++k) integral += 0.5 * (e[k] + e[k - 1]) * (t[k] - t[k - 1]);

  PhaseDecomposition out;
  out.total = wrap_phase(std::arg(closure));
  out.dynamical = -integral;
  out.geometric = wrap_phase(out.total - out.dynamical);
  return out;
}

double bargmann_phase(const DiscreteLoop& loop) {
  const auto pts = loop.points();
  // Accumulate the argument link by link; a running product of many near-unit
  // overlaps would lose magnitude without affecting the phase.
  double phase = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const Complex link = overlap(pts[k], pts[(k + 1) % pts.size()]);
    if (!(std::abs(link) > DiscreteLoop::kMinOverlap)) throw OrthogonalStates(k, std::abs(link));
    phase += std::arg(link);
  }
  return wrap_phase(-phase);
}

double sum_rule_residual(std::span<const double> phases) {
  double s = 0.0;
  for (double p : phases) s += p;
  return distance_to_2pi_multiple(s);
}

SumRuleReport sum_rule_check(const HamiltonianSampler& h, double duration, std::size_t steps,
                             double tolerance) {
  const UnitaryMatrix u = evolve(h, duration, steps);
  CyclicSet cyclic = cyclic_states(u);
  const std::size_t d = cyclic.frame.dim();

  std::vector<std::optional<PhaseDecomposition>> parts(d);
  parallel_for(d, [&](std::size_t j) {
    parts[j] = phase_decomposition(trajectory(h, cyclic.frame.column(j), duration, steps));
  });

  SumRuleReport report{std::move(cyclic), {}, {}, 0.0, tolerance, false};
  for (const auto& p : parts) {
    report.decompositions.push_back(*p);
    report.phases.push_back(p->geometric);
  }
  report.residual = sum_rule_residual(report.phases);
  report.pass = report.residual < tolerance;
  return report;
}

}  // namespace holonomy

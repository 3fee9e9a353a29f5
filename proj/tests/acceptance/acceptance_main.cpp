// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero if
// any criterion fails. Reference values come from closed forms evaluated here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "holonomy/angles.hpp"
#include "holonomy/curvature.hpp"
#include "holonomy/evolution.hpp"
#include "holonomy/gates.hpp"
#include "holonomy/operators.hpp"
#include "holonomy/phases.hpp"
#include "holonomy/random.hpp"
#include "oracles.hpp"

namespace {

using namespace holonomy;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// Runs one criterion, enforces its time budget and prints the verdict line.
bool criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= budget_s) out.require(false, "runtime " + sci(elapsed) + " s over budget");
  std::printf("%s  [%d] %s (%.2f s, budget %.0f s)%s%s\n", out.pass ? "PASS" : "FAIL", id, title,
              elapsed, budget_s, out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
  return out.pass;
}

constexpr double kThetas[] = {kPi / 6.0, kPi / 3.0, kPi / 2.0, 2.0 * kPi / 3.0};

HamiltonianSampler precession() { return HamiltonianSampler::constant(0.5 * pauli_z()); }

StateVector tilted(double theta) { return StateVector({std::cos(theta / 2.0), std::sin(theta / 2.0)}); }

HamiltonianSampler rotating_field() {
  return HamiltonianSampler(2, [](double t) {
    return (0.5 * std::cos(t)) * pauli_x() + (0.5 * std::sin(t)) * pauli_y();
  });
}

struct PrecessionRun {
  Frame frame;
  std::vector<double> gammas;
  Trajectory traj;
};

PrecessionRun run_precession(double theta) {
  const Frame frame = complete_frame(tilted(theta));
  const Trajectory t0 = trajectory(precession(), frame.column(0), kTwoPi, 4096);
  const Trajectory t1 = trajectory(precession(), frame.column(1), kTwoPi, 4096);
  return {frame, {phase_decomposition(t0).geometric, phase_decomposition(t1).geometric}, t0};
}

// --- 1 ---------------------------------------------------------------------

Outcome precession_solid_angle() {
  Outcome out;
  double worst = 0.0;
  for (double theta : kThetas) {
    const auto start = std::chrono::steady_clock::now();
    const PrecessionRun run = run_precession(theta);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double expected = wrap_phase(-kPi * (1.0 - std::cos(theta)));
    const double e1 = circular_distance(run.gammas[0], expected);
    const double e2 = circular_distance(run.gammas[1], -run.gammas[0]);
    worst = std::max({worst, e1, e2});
    out.require(e1 < 1e-6, "theta=" + sci(theta) + " gamma1 error " + sci(e1));
    out.require(e2 < 1e-6, "theta=" + sci(theta) + " partner error " + sci(e2));
    out.require(secs < 1.0, "theta=" + sci(theta) + " took " + sci(secs) + " s");
  }
  if (out.pass) out.detail = "max error " + sci(worst) + " (tol 1e-6)";
  return out;
}

// --- 2 ---------------------------------------------------------------------

Outcome sum_rule() {
  Outcome out;
  double worst = 0.0;
  for (std::size_t d = 2; d <= 8; ++d) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      const auto report = sum_rule_check(HamiltonianSampler::constant(random_hermitian(d, rng)), 1.0,
                                         kDefaultSteps, 1e-8);
      worst = std::max(worst, report.residual);
      out.require(report.residual <= 1e-8, "d=" + std::to_string(d) + " seed=" + std::to_string(seed) +
                                               " residual " + sci(report.residual));
    }
  }
  const auto rot = sum_rule_check(rotating_field(), kTwoPi, 4096);
  out.require(rot.residual <= 1e-6, "rotating field residual " + sci(rot.residual));
  if (out.pass)
    out.detail = "random max " + sci(worst) + " (tol 1e-8), rotating field " + sci(rot.residual) +
                 " (tol 1e-6)";
  return out;
}

// --- 3 ---------------------------------------------------------------------

// Bloch family and a random d = 4 family; residual at roundoff counts as converged.
constexpr double kRoundoffFloor = 1e-12;

FrameFamily bloch_band(std::size_t refine) {
  return sample_family(GridAxis::closed(0.1, kPi - 0.1, 30 * refine + 1),
                       GridAxis::periodic_axis(0.0, kTwoPi, 63 * refine),
                       [](double t, double p) { return bloch_frame(t, p); });
}

HermitianMatrix unit_norm(const HermitianMatrix& g) {
  const auto eig = eig_hermitian(g);
  return (1.0 / std::max(-eig.values.front(), eig.values.back())) * g;
}

FrameFamily random_band(std::size_t refine) {
  Rng rng(5);
  const HermitianMatrix g1 = unit_norm(random_hermitian(4, rng));
  const HermitianMatrix g2 = unit_norm(random_hermitian(4, rng));
  const std::size_t n = 10 * refine + 1;
  return sample_family(GridAxis::closed(0.0, 1.0, n), GridAxis::closed(0.0, 1.0, n),
                       [&](double a, double b) {
                         return Frame::from_matrix(propagator(a * g1 + b * g2, 1.0).matrix());
                       });
}

void refinement_study(Outcome& out, const char* name, const std::function<FrameFamily(std::size_t)>& build) {
  std::vector<double> r;
  for (std::size_t refine : {1, 2, 4}) r.push_back(theorem1_residual(two_form_field(build(refine))).max);
  std::string d = std::string(name) + " " + sci(r[0]) + " -> " + sci(r[1]) + " -> " + sci(r[2]);
  out.require(r[0] < 1e-4, std::string(name) + " residual " + sci(r[0]) + " at h~0.1");
  for (std::size_t k = 0; k + 1 < r.size(); ++k) {
    const bool floor = r[k] <= kRoundoffFloor && r[k + 1] <= kRoundoffFloor;
    out.require(floor || r[k] >= 4.0 * r[k + 1], std::string(name) + " refinement " + std::to_string(k + 1) +
                                                     " ratio " + sci(r[k] / r[k + 1]));
    d += floor ? " [roundoff]" : " [x" + sci(r[k] / r[k + 1]) + "]";
  }
  out.detail += (out.detail.empty() ? "" : ", ") + d;
}

Outcome curvature_cancellation() {
  Outcome out;
  refinement_study(out, "bloch", bloch_band);
  refinement_study(out, "random d=4", random_band);
  return out;
}

// --- 4 ---------------------------------------------------------------------

Outcome monopole_cancellation() {
  Outcome out;
  const std::vector<std::vector<int>> expected{{1, -1}, {2, 0, -2}, {3, 1, -1, -3}};
  std::string summary;
  for (int two_j = 1; two_j <= 3; ++two_j) {
    const auto s = spin_matrices(two_j);
    const HamiltonianField field = [&s](double t, double p) {
      return spin_dot(s, std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t));
    };
    const MonopoleReport coarse = chern_charges(sphere_eigenframe_family(60, 60, field));
    const MonopoleReport fine = chern_charges(sphere_eigenframe_family(120, 120, field));
    const std::string tag = "2j=" + std::to_string(two_j);

    std::vector<int> mags;
    for (int c : coarse.charges) mags.push_back(std::abs(c));
    std::vector<int> want_mags;
    for (int c : expected[two_j - 1]) want_mags.push_back(std::abs(c));
    out.require(mags == want_mags, tag + " magnitudes differ");
    out.require(coarse.charges == expected[two_j - 1], tag + " signs differ from orientation convention");
    out.require(coarse.max_defect < 1e-3, tag + " defect " + sci(coarse.max_defect));
    out.require(coarse.sum == 0, tag + " sum " + std::to_string(coarse.sum));
    out.require(fine.charges == coarse.charges, tag + " charges change on doubled mesh");

    summary += (summary.empty() ? "" : ", ") + tag + " {";
    for (std::size_t n = 0; n < coarse.charges.size(); ++n)
      summary += (n ? "," : "") + std::to_string(coarse.charges[n]);
    summary += "} defect " + sci(coarse.max_defect);
  }
  if (out.pass) out.detail = summary;
  return out;
}

// --- 5 ---------------------------------------------------------------------

Outcome gate_corollary() {
  Outcome out;
  const GateVerdict h2 = gate_verdict(hadamard_gate(2));
  out.require(std::abs(h2.det + 1.0) < 1e-9, "H_2 det " + sci(h2.det.real()));
  out.require(!h2.geometric_feasible, "H_2 reported feasible");
  for (std::size_t d : {3, 4}) {
    const GateVerdict v = gate_verdict(hadamard_gate(d));
    const std::string tag = "H_" + std::to_string(d);
    out.require(std::abs(std::abs(v.det) - 1.0) < 1e-12, tag + " det not unimodular");
    out.require(std::abs(v.det_phase) > 0.1, tag + " det phase " + sci(v.det_phase));
    out.require(!v.geometric_feasible, tag + " reported feasible");
  }

  double worst = 0.0;
  std::size_t gates = 0;
  auto pipeline = [&](const Frame& frame, std::span<const double> gammas, const std::string& tag) {
    const GateVerdict v = gate_verdict(phase_gate(frame, gammas));
    const double err = std::abs(v.det - 1.0);
    worst = std::max(worst, err);
    ++gates;
    out.require(err < 1e-6 && v.geometric_feasible, tag + " |det-1| " + sci(err));
  };
  for (double theta : kThetas) {
    const PrecessionRun run = run_precession(theta);
    pipeline(run.frame, run.gammas, "precession theta=" + sci(theta));
  }
  for (std::size_t d = 2; d <= 8; ++d) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      const auto report = sum_rule_check(HamiltonianSampler::constant(random_hermitian(d, rng)), 1.0);
      pipeline(report.cyclic.frame, report.phases, "d=" + std::to_string(d) + " seed=" + std::to_string(seed));
    }
  }
  const auto rot = sum_rule_check(rotating_field(), kTwoPi, 4096);
  pipeline(rot.cyclic.frame, rot.phases, "rotating field");

  if (out.pass)
    out.detail = "H_2 det " + sci(h2.det.real()) + "; " + std::to_string(gates) +
                 " pipeline gates, max |det-1| " + sci(worst);
  return out;
}

// --- 6 ---------------------------------------------------------------------

Outcome bargmann_consistency() {
  Outcome out;
  const DiscreteLoop octant({StateVector::basis(2, 0), StateVector::normalized({1.0, 1.0}),
                             StateVector::normalized({1.0, Complex(0.0, 1.0)})});
  const double g = bargmann_phase(octant);
  out.require(std::abs(g + kPi / 4.0) < 1e-12, "octant " + sci(g + kPi / 4.0) + " off -pi/4");

  double worst = 0.0;
  for (double theta : kThetas) {
    const PrecessionRun run = run_precession(theta);
    const auto states = run.traj.states();
    // 4096 samples; the endpoint closes the loop.
    const DiscreteLoop loop(std::vector<StateVector>(states.begin(), states.end() - 1));
    const double err = circular_distance(bargmann_phase(loop), run.gammas[0]);
    worst = std::max(worst, err);
    out.require(loop.size() == 4096 && err < 1e-5, "theta=" + sci(theta) + " error " + sci(err));
  }
  if (out.pass) out.detail = "octant error " + sci(std::abs(g + kPi / 4.0)) + ", loop max error " + sci(worst);
  return out;
}

// --- 7 ---------------------------------------------------------------------

Outcome gauge_invariance() {
  Outcome out;
  std::mt19937_64 gen(2026);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  double worst = 0.0;
  auto track = [&](double delta, const std::string& what) {
    worst = std::max(worst, delta);
    out.require(delta <= 1e-12, what + " moved by " + sci(delta));
  };

  // Phases: interior samples get independent phases, the endpoints a shared one
  // (the cyclic phase compares psi(T) with the same representative of psi(0)).
  for (double theta : kThetas) {
    const PrecessionRun run = run_precession(theta);
    const auto& t = run.traj;
    const double shared = angle(gen);
    std::vector<StateVector> states;
    for (std::size_t k = 0; k < t.size(); ++k) {
      const bool end = k == 0 || k + 1 == t.size();
      states.push_back(t.states()[k].with_phase(end ? shared : angle(gen)));
    }
    const Trajectory perturbed(std::vector<double>(t.times().begin(), t.times().end()), states,
                               std::vector<double>(t.energies().begin(), t.energies().end()));
    const auto a = phase_decomposition(t);
    const auto b = phase_decomposition(perturbed);
    track(circular_distance(a.total, b.total), "total phase");
    track(std::abs(a.dynamical - b.dynamical), "dynamical phase");
    track(circular_distance(a.geometric, b.geometric), "geometric phase");

    std::vector<StateVector> loop_pts(states.begin(), states.end() - 1);
    std::vector<StateVector> orig_pts(t.states().begin(), t.states().end() - 1);
    track(circular_distance(bargmann_phase(DiscreteLoop(loop_pts)), bargmann_phase(DiscreteLoop(orig_pts))),
          "Bargmann phase");

    // Verdict: regauged columns give the same projectors, hence the same gate.
    const GateVerdict va = gate_verdict(phase_gate(run.frame, run.gammas));
    const GateVerdict vb = gate_verdict(phase_gate(holonomy::oracle::regauge(run.frame, gen), run.gammas));
    track(std::abs(va.det - vb.det), "gate determinant");
    out.require(va.geometric_feasible == vb.geometric_feasible, "gate feasibility flipped");
  }

  // Fluxes: independent per-node, per-column phases.
  auto regauge_family = [&](const FrameFamily& f) {
    std::vector<Frame> frames;
    for (std::size_t i = 0; i < f.axis_a().size(); ++i)
      for (std::size_t k = 0; k < f.axis_b().size(); ++k) frames.push_back(holonomy::oracle::regauge(f.at(i, k), gen));
    std::optional<Frame> first;
    std::optional<Frame> last;
    if (f.pole_first()) first = holonomy::oracle::regauge(*f.pole_first(), gen);
    if (f.pole_last()) last = holonomy::oracle::regauge(*f.pole_last(), gen);
    return FrameFamily(f.axis_a(), f.axis_b(), std::move(frames), first, last);
  };
  auto compare_flux = [&](const FrameFamily& f, const std::string& tag) {
    const FluxGrid a = two_form_field(f);
    const FluxGrid b = two_form_field(regauge_family(f));
    double delta = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t i = 0; i < a.cells_a(); ++i)
        for (std::size_t k = 0; k < a.cells_b(); ++k)
          delta = std::max(delta, circular_distance(a.flux(j, i, k), b.flux(j, i, k)));
      if (a.cap_first(j)) delta = std::max(delta, std::abs(*a.cap_first(j) - *b.cap_first(j)));
      if (a.cap_last(j)) delta = std::max(delta, std::abs(*a.cap_last(j) - *b.cap_last(j)));
    }
    track(delta, tag + " flux");
  };
  compare_flux(bloch_band(1), "bloch");
  compare_flux(random_band(1), "random d=4");

  for (int two_j = 1; two_j <= 3; ++two_j) {
    const auto s = spin_matrices(two_j);
    const FrameFamily f = sphere_eigenframe_family(60, 60, [&s](double t, double p) {
      return spin_dot(s, std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t));
    });
    compare_flux(f, "spin 2j=" + std::to_string(two_j));
    const MonopoleReport a = chern_charges(f);
    const MonopoleReport b = chern_charges(regauge_family(f));
    out.require(a.charges == b.charges, "charges changed for 2j=" + std::to_string(two_j));
    for (std::size_t n = 0; n < a.raw.size(); ++n) track(std::abs(a.raw[n] - b.raw[n]), "raw charge");
  }

  if (out.pass) out.detail = "max change " + sci(worst) + " (tol 1e-12)";
  return out;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= criterion(1, "precession solid angle", 4.0, precession_solid_angle);
  ok &= criterion(2, "geometric phase sum rule", 30.0, sum_rule);
  ok &= criterion(3, "frame curvature cancellation under refinement", 10.0, curvature_cancellation);
  ok &= criterion(4, "monopole charge cancellation", 20.0, monopole_cancellation);
  ok &= criterion(5, "gate determinant corollary", 60.0, gate_corollary);
  ok &= criterion(6, "Bargmann consistency", 60.0, bargmann_consistency);
  ok &= criterion(7, "gauge invariance", 60.0, gauge_invariance);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}

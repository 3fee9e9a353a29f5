// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include "holonomy/gates.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "holonomy/angles.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/operators.hpp"
#include "holonomy/phases.hpp"
#include "holonomy/random.hpp"

namespace holonomy {
namespace {

TEST(PhaseGate, CanonicalZeroPhasesIsIdentity) {
  const std::vector<double> zeros(4, 0.0);
  EXPECT_LT(max_abs_diff(phase_gate(Frame::canonical(4), zeros).matrix(), Matrix::identity(4)), 1e-15);
}

TEST(PhaseGate, CanonicalOppositePhases) {
  const std::vector<double> gammas{kPi / 2.0, -kPi / 2.0};
  const UnitaryMatrix u = phase_gate(Frame::canonical(2), gammas);
  const std::vector<Complex> diag{Complex(0.0, 1.0), Complex(0.0, -1.0)};
  EXPECT_LT(max_abs_diff(u.matrix(), Matrix::diagonal(diag)), 1e-15);
  EXPECT_LT(std::abs(determinant(u) - 1.0), 1e-15);
}

TEST(PhaseGate, DeterminantIsFrameIndependent) {
  for (std::size_t d = 2; d <= 6; ++d) {
    Rng rng(70 + d);
    const Frame f = Frame::from_matrix(propagator(random_hermitian(d, rng), 1.0).matrix());
    std::vector<double> gammas(d);
    double sum = 0.0;
    for (auto& g : gammas) sum += (g = rng.uniform(-kPi, kPi));
    EXPECT_LT(std::abs(determinant(phase_gate(f, gammas)) - std::polar(1.0, sum)), 1e-9) << d;
  }
}

TEST(PhaseGate, PrecessionPipelineIsSpecialUnitary) {
  const double theta = 1.0;
  const auto h = HamiltonianSampler::constant(0.5 * pauli_z());
  const Frame frame = complete_frame(StateVector({std::cos(theta / 2.0), std::sin(theta / 2.0)}));
  std::vector<double> gammas;
  for (const auto& col : frame.columns())
    gammas.push_back(phase_decomposition(trajectory(h, col, kTwoPi, 4096)).geometric);
  const UnitaryMatrix u = phase_gate(frame, gammas);
  EXPECT_LT(std::abs(determinant(u) - 1.0), 1e-8);
  EXPECT_TRUE(gate_verdict(u).geometric_feasible);
}

TEST(PhaseGate, RejectsWrongLength) {
  const std::vector<double> gammas{0.1};
  EXPECT_THROW(phase_gate(Frame::canonical(2), gammas), DimensionMismatch);
}

TEST(GateVerdict, Identity) {
  const GateVerdict v = gate_verdict(UnitaryMatrix::identity(3));
  EXPECT_TRUE(v.geometric_feasible);
  EXPECT_EQ(v.det_phase, 0.0);
}

TEST(GateVerdict, SinglePhaseIsInfeasible) {
  const double gamma = 0.3;
  std::vector<Complex> diag(3, 1.0);
  diag[0] = std::polar(1.0, gamma);
  const GateVerdict v = gate_verdict(Matrix::diagonal(diag));
  EXPECT_FALSE(v.geometric_feasible);
  EXPECT_LT(std::abs(v.det - std::polar(1.0, gamma)), 1e-15);
  EXPECT_NEAR(v.det_phase, gamma, 1e-15);
}

TEST(GateVerdict, RejectsNonUnitary) {
  Matrix m = Matrix::identity(2);
  m(0, 1) = 0.5;
  EXPECT_THROW(gate_verdict(m), NotUnitary);
}

TEST(GateVerdict, ToleranceIsReported) {
  const GateVerdict v = gate_verdict(UnitaryMatrix::identity(2), 1e-3);
  EXPECT_EQ(v.tolerance, 1e-3);
}

TEST(Hadamard, TwoByTwo) {
  const double s = M_SQRT1_2;
  const Matrix expected(2, 2, {s, s, s, -s});
  const UnitaryMatrix h2 = hadamard_gate(2);
  EXPECT_LT(max_abs_diff(h2.matrix(), expected), 1e-15);
  const GateVerdict v = gate_verdict(h2);
  EXPECT_LT(std::abs(v.det + 1.0), 1e-9);
  EXPECT_FALSE(v.geometric_feasible);
}

TEST(Hadamard, HigherDimensionsAreInfeasible) {
  for (std::size_t d : {3, 4}) {
    const UnitaryMatrix h = hadamard_gate(d);
    // Entries omega^{mu nu} / sqrt(d).
    const Complex omega = std::polar(1.0, kTwoPi / static_cast<double>(d));
    for (std::size_t mu = 0; mu < d; ++mu)
      for (std::size_t nu = 0; nu < d; ++nu)
        EXPECT_LT(std::abs(h(mu, nu) - std::pow(omega, static_cast<double>(mu * nu)) /
                                           std::sqrt(static_cast<double>(d))),
                  1e-14);
    const GateVerdict v = gate_verdict(h);
    EXPECT_NEAR(std::abs(v.det), 1.0, 1e-12) << d;
    EXPECT_GT(std::abs(v.det_phase), 0.1) << d;
    EXPECT_FALSE(v.geometric_feasible) << d;
  }
  EXPECT_THROW(hadamard_gate(1), InvalidArgument);
}

}  // namespace
}  // namespace holonomy

// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include "holonomy/linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "holonomy/angles.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/operators.hpp"
#include "holonomy/random.hpp"
#include "oracles.hpp"

namespace holonomy {
namespace {

Matrix reconstruct(const EigenSystem& eig) {
  std::vector<Complex> diag(eig.values.begin(), eig.values.end());
  return eig.vectors * Matrix::diagonal(diag) * eig.vectors.adjoint();
}

TEST(EigHermitian, PauliZ) {
  const EigenSystem eig = eig_hermitian(pauli_z());
  EXPECT_EQ(eig.values, (std::vector<double>{-1.0, 1.0}));
  EXPECT_EQ(eig.vector(0), (std::vector<Complex>{0.0, 1.0}));
  EXPECT_EQ(eig.vector(1), (std::vector<Complex>{1.0, 0.0}));
  EXPECT_FALSE(eig.degenerate);
}

TEST(EigHermitian, PauliXUpToGauge) {
  const EigenSystem eig = eig_hermitian(pauli_x());
  EXPECT_NEAR(eig.values[0], -1.0, 1e-14);
  EXPECT_NEAR(eig.values[1], 1.0, 1e-14);
  const double s = M_SQRT1_2;
  // Gauge fix: first largest-magnitude component real positive.
  const auto v0 = eig.vector(0);
  const auto v1 = eig.vector(1);
  EXPECT_NEAR(std::abs(v0[0] - s), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(v0[1] + s), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(v1[0] - s), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(v1[1] - s), 0.0, 1e-14);
}

TEST(EigHermitian, RandomSixBySixReconstructs) {
  Rng rng(7);
  const HermitianMatrix h = random_hermitian(6, rng);
  const EigenSystem eig = eig_hermitian(h);
  EXPECT_LT(max_abs_diff(reconstruct(eig), h.matrix()), 1e-10);
  EXPECT_LT(unitarity_defect(eig.vectors), 1e-12);
  for (std::size_t k = 1; k < eig.values.size(); ++k) EXPECT_LE(eig.values[k - 1], eig.values[k]);
}

TEST(EigHermitian, ReconstructionPropertyAcrossDimensions) {
  for (std::size_t d = 1; d <= 16; ++d) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Rng rng(100 * d + seed);
      const HermitianMatrix h = (1.0 + static_cast<double>(seed)) * random_hermitian(d, rng);
      const EigenSystem eig = eig_hermitian(h);
      EXPECT_LT(max_abs_diff(reconstruct(eig), h.matrix()), 1e-10 * (1.0 + h.matrix().max_abs()))
          << "d=" << d << " seed=" << seed;
    }
  }
}

TEST(EigHermitian, TraceMatchesEigenvalueSum) {
  Rng rng(21);
  const HermitianMatrix h = random_hermitian(9, rng);
  const EigenSystem eig = eig_hermitian(h);
  double sum = 0.0;
  for (double v : eig.values) sum += v;
  EXPECT_NEAR(sum, h.matrix().trace().real(), 1e-12);
}

TEST(EigHermitian, FlagsDegenerateSpectrum) {
  EXPECT_TRUE(eig_hermitian(HermitianMatrix(Matrix::identity(3))).degenerate);
  const auto s = spin_matrices(2);
  EXPECT_FALSE(eig_hermitian(s[2]).degenerate);
}

TEST(EigHermitian, DeterministicBitForBit) {
  Rng a(13);
  Rng b(13);
  const EigenSystem x = eig_hermitian(random_hermitian(8, a));
  const EigenSystem y = eig_hermitian(random_hermitian(8, b));
  EXPECT_EQ(x.values, y.values);
  EXPECT_EQ(x.vectors, y.vectors);
}

TEST(EigHermitian, GaugeFixedColumns) {
  Rng rng(4);
  const EigenSystem eig = eig_hermitian(random_hermitian(7, rng));
  for (std::size_t k = 0; k < eig.dim(); ++k) {
    const auto v = eig.vector(k);
    std::size_t arg_max = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (std::abs(v[i]) > std::abs(v[arg_max])) arg_max = i;
    EXPECT_EQ(v[arg_max].imag(), 0.0);
    EXPECT_GT(v[arg_max].real(), 0.0);
  }
}

TEST(HermitianMatrix, RejectsNonHermitian) {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(HermitianMatrix{m}, InvalidArgument);
  EXPECT_THROW(HermitianMatrix{Matrix(2, 3)}, InvalidArgument);
}

TEST(UnitaryMatrix, RejectsNonUnitary) {
  Matrix m = Matrix::identity(2);
  m(0, 0) = 1.001;
  EXPECT_THROW(UnitaryMatrix{m}, NotUnitary);
}

TEST(Propagator, PauliZFullTurn) {
  const UnitaryMatrix u = propagator(pauli_z(), kPi);
  EXPECT_LT(max_abs_diff(u.matrix(), Matrix::identity(2) * Complex(-1.0)), 1e-15);
}

TEST(Propagator, ZeroTimeIsIdentity) {
  Rng rng(2);
  const HermitianMatrix h = random_hermitian(5, rng);
  EXPECT_EQ(propagator(h, 0.0).matrix(), Matrix::identity(5));
}

TEST(Propagator, PauliXQuarterTurnMatchesSeries) {
  const Matrix expected = pauli_x().matrix() * Complex(0.0, -1.0);
  const Matrix series = oracle::taylor_exp(pauli_x().matrix(), kPi / 2.0);
  EXPECT_LT(max_abs_diff(series, expected), 1e-14);
  EXPECT_LT(max_abs_diff(propagator(pauli_x(), kPi / 2.0).matrix(), expected), 1e-12);
}

TEST(Propagator, RandomMatchesSeries) {
  for (std::size_t d : {2, 3, 5, 8}) {
    Rng rng(d);
    const HermitianMatrix h = random_hermitian(d, rng);
    for (double t : {0.1, 1.0, 3.7}) {
      EXPECT_LT(max_abs_diff(propagator(h, t).matrix(), oracle::taylor_exp(h.matrix(), t)), 1e-10)
          << "d=" << d << " t=" << t;
    }
  }
}

TEST(Propagator, InverseIsNegativeTime) {
  Rng rng(9);
  const HermitianMatrix h = random_hermitian(6, rng);
  const UnitaryMatrix forward = propagator(h, 0.8);
  const UnitaryMatrix backward = propagator(h, -0.8);
  EXPECT_LT(max_abs_diff((forward * backward).matrix(), Matrix::identity(6)), 1e-12);
  EXPECT_LT(max_abs_diff(backward.matrix(), forward.adjoint().matrix()), 1e-12);
}

TEST(Propagator, DeterminantIsTracePhase) {
  Rng rng(10);
  const HermitianMatrix h = random_hermitian(5, rng);
  const double t = 1.3;
  const Complex det = determinant(propagator(h, t));
  const Complex expected = std::polar(1.0, -h.matrix().trace().real() * t);
  EXPECT_LT(std::abs(det - expected), 1e-12);
}

TEST(Determinant, Examples) {
  for (std::size_t d = 1; d <= 6; ++d) EXPECT_EQ(determinant(Matrix::identity(d)), Complex(1.0));

  const std::vector<Complex> diag{std::polar(1.0, kPi / 3.0), std::polar(1.0, -kPi / 3.0)};
  EXPECT_LT(std::abs(determinant(Matrix::diagonal(diag)) - 1.0), 1e-15);

  const double s = M_SQRT1_2;
  Matrix h2(2, 2, {s, s, s, -s});
  // ad - bc
  const Complex by_hand = h2(0, 0) * h2(1, 1) - h2(0, 1) * h2(1, 0);
  EXPECT_LT(std::abs(determinant(h2) - by_hand), 1e-15);
  EXPECT_LT(std::abs(determinant(h2) + 1.0), 1e-15);
}

TEST(Determinant, NeedsPivoting) {
  Matrix m(3, 3, {0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0});
  EXPECT_LT(std::abs(determinant(m) - 1.0), 1e-15);
  Matrix swap(2, 2, {0.0, 1.0, 1.0, 0.0});
  EXPECT_LT(std::abs(determinant(swap) + 1.0), 1e-15);
}

TEST(SpinMatrices, CommutationAndCasimir) {
  for (int two_j = 1; two_j <= 4; ++two_j) {
    const auto s = spin_matrices(two_j);
    const std::size_t d = static_cast<std::size_t>(two_j) + 1;
    const Matrix comm = s[0].matrix() * s[1].matrix() - s[1].matrix() * s[0].matrix();
    EXPECT_LT(max_abs_diff(comm, s[2].matrix() * Complex(0.0, 1.0)), 1e-14);
    const double j = 0.5 * two_j;
    Matrix casimir = s[0].matrix() * s[0].matrix() + s[1].matrix() * s[1].matrix() +
                     s[2].matrix() * s[2].matrix();
    EXPECT_LT(max_abs_diff(casimir, Matrix::identity(d) * Complex(j * (j + 1.0))), 1e-13);
  }
}

TEST(Angles, WrapPhaseRange) {
  EXPECT_EQ(wrap_phase(kPi), kPi);
  EXPECT_EQ(wrap_phase(-kPi), kPi);
  EXPECT_NEAR(wrap_phase(3.0 * kPi / 2.0), -kPi / 2.0, 1e-15);
  EXPECT_NEAR(distance_to_2pi_multiple(kTwoPi + 1e-3), 1e-3, 1e-12);
}

}  // namespace
}  // namespace holonomy

// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file linalg.hpp
 * @brief Dense complex linear algebra for small dimensions (d up to a few dozen).
 *
 * Matrices are row-major. HermitianMatrix and UnitaryMatrix are checked wrappers
 * around Matrix; their invariants are validated once at construction and the
 * wrapped storage is immutable afterwards.
 *
 * Units: hbar = 1, so energies are inverse times and propagator(h, t) = exp(-i h t).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace holonomy {

using Complex = std::complex<double>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Complex> diag);
  /// Builds a matrix whose k-th column is columns[k].
  static Matrix from_columns(std::span<const std::vector<Complex>> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> data() const noexcept { return data_; }

  std::vector<Complex> column(std::size_t j) const;
  Matrix adjoint() const;
  Complex trace() const;

  /// Largest entry magnitude.
  double max_abs() const;
  double frobenius_norm() const;

  std::vector<Complex> apply(std::span<const Complex> v) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(Complex s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, Complex s) { return lhs *= s; }
  friend Matrix operator*(Complex s, Matrix rhs) { return rhs *= s; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// max_{jk} |a_jk - b_jk|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// max_{jk} |(U^dag U - 1)_jk|.
double unitarity_defect(const Matrix& u);

class HermitianMatrix {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Validates |m_jk - conj(m_kj)| <= tol * max(1, max|m|) and symmetrizes exactly.
  /// Throws InvalidArgument for non-square, empty or non-Hermitian input.
  explicit HermitianMatrix(const Matrix& m, double tol = kTolerance);

  static HermitianMatrix zero(std::size_t dim);

  std::size_t dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// <v|H|v>, real for Hermitian H.
  double expectation(std::span<const Complex> v) const;

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double s, const HermitianMatrix& h);

 private:
  struct Trusted {};
  HermitianMatrix(Matrix m, Trusted) : m_(std::move(m)) {}

  Matrix m_;
};

class UnitaryMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  /// Throws NotUnitary when max |U^dag U - 1| > tol.
  explicit UnitaryMatrix(Matrix m, double tol = kTolerance);

  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  UnitaryMatrix adjoint() const { return UnitaryMatrix(m_.adjoint(), Trusted{}); }
  std::vector<Complex> apply(std::span<const Complex> v) const { return m_.apply(v); }

  /// Products of unitaries are unitary; no re-validation.
  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return UnitaryMatrix(a.m_ * b.m_, Trusted{});
  }

 private:
  struct Trusted {};
  UnitaryMatrix(Matrix m, Trusted) : m_(std::move(m)) {}
  friend UnitaryMatrix propagator(const HermitianMatrix& h, double t);

  Matrix m_;
};

struct EigenSystem {
  /// Ascending.
  std::vector<double> values;
  /// Column k is the eigenvector of values[k]; gauge-fixed so its largest-magnitude
  /// component is real and positive (lowest index on ties).
  Matrix vectors;
  /// Set when two consecutive eigenvalues are closer than kDegeneracyGap.
  bool degenerate = false;
  std::size_t sweeps = 0;

  static constexpr double kDegeneracyGap = 1e-9;

  std::size_t dim() const noexcept { return values.size(); }
  std::vector<Complex> vector(std::size_t k) const { return vectors.column(k); }
};

/// Cyclic complex Jacobi eigensolver. Throws NumericFailure after kMaxJacobiSweeps.
EigenSystem eig_hermitian(const HermitianMatrix& h);

inline constexpr int kMaxJacobiSweeps = 100;

/// exp(-i h t) = V diag(exp(-i E_k t)) V^dag.
UnitaryMatrix propagator(const HermitianMatrix& h, double t);
/// Same as above for an already diagonalized h.
UnitaryMatrix propagator(const EigenSystem& eig, double t);

/// LU elimination with partial pivoting.
Complex determinant(const Matrix& m);
inline Complex determinant(const UnitaryMatrix& u) { return determinant(u.matrix()); }

/// Rotates v in place so that its largest-magnitude entry is real and positive.
void fix_gauge(std::span<Complex> v);

}  // namespace holonomy

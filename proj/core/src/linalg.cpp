// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include "holonomy/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "holonomy/errors.hpp"

namespace holonomy {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw DimensionMismatch(rows_ * cols_, data_.size());
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_columns(std::span<const std::vector<Complex>> columns) {
  if (columns.empty()) return {};
  const std::size_t rows = columns.front().size();
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionMismatch(rows, columns[j].size());
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Complex> Matrix::column(std::size_t j) const {
  std::vector<Complex> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

std::vector<Complex> Matrix::apply(std::span<const Complex> v) const {
  if (v.size() != cols_) throw DimensionMismatch(cols_, v.size());
  std::vector<Complex> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatch(rows_ * cols_, rhs.rows_ * rhs.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatch(rows_ * cols_, rhs.rows_ * rhs.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DimensionMismatch(lhs.cols_, rhs.rows_);
  Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(a.rows() * a.cols(), b.rows() * b.cols());
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double unitarity_defect(const Matrix& u) {
  if (!u.is_square()) throw InvalidArgument("unitarity check needs a square matrix");
  return max_abs_diff(u.adjoint() * u, Matrix::identity(u.rows()));
}

// ---------------------------------------------------------------------------
// HermitianMatrix / UnitaryMatrix
// ---------------------------------------------------------------------------

HermitianMatrix::HermitianMatrix(const Matrix& m, double tol) {
  if (!m.is_square() || m.rows() == 0)
    throw InvalidArgument("Hermitian matrix must be square with dim >= 1");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, m.max_abs());
  Matrix sym(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex a = m(i, j);
      const Complex b = std::conj(m(j, i));
      if (std::abs(a - b) > tol * scale)
        throw InvalidArgument("matrix is not Hermitian at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      const Complex avg = 0.5 * (a + b);
      sym(i, j) = avg;
      sym(j, i) = std::conj(avg);
    }
    sym(i, i) = sym(i, i).real();
  }
  m_ = std::move(sym);
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("Hermitian matrix must have dim >= 1");
  return HermitianMatrix(Matrix(dim, dim), Trusted{});
}

double HermitianMatrix::expectation(std::span<const Complex> v) const {
  const auto hv = m_.apply(v);
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += (std::conj(v[i]) * hv[i]).real();
  return s;
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.m_ + b.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.m_ - b.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix operator*(double s, const HermitianMatrix& h) {
  return HermitianMatrix(h.m_ * Complex(s), HermitianMatrix::Trusted{});
}

UnitaryMatrix::UnitaryMatrix(Matrix m, double tol) {
  if (!m.is_square() || m.rows() == 0)
    throw InvalidArgument("unitary matrix must be square with dim >= 1");
  const double defect = unitarity_defect(m);
  if (!(defect <= tol)) throw NotUnitary(defect);
  m_ = std::move(m);
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("unitary matrix must have dim >= 1");
  return UnitaryMatrix(Matrix::identity(dim), Trusted{});
}

// ---------------------------------------------------------------------------
// Eigensolver
// ---------------------------------------------------------------------------

void fix_gauge(std::span<Complex> v) {
  if (v.empty()) return;
  double best = 0.0;
  for (const auto& z : v) best = std::max(best, std::abs(z));
  if (best == 0.0) return;
  // First index within rounding of the maximum, so near-ties resolve to the lowest index.
  std::size_t idx = 0;
  while (std::abs(v[idx]) < best * (1.0 - 1e-12)) ++idx;
  const Complex phase = std::conj(v[idx]) / std::abs(v[idx]);
  for (auto& z : v) z *= phase;
  v[idx] = std::abs(v[idx]);
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Applies A <- G^dag A G and V <- V G for the unitary G acting on the (p, q) plane:
// G = [[c, s e^{i phi}], [-s e^{-i phi}, c]], with a_pq = |a_pq| e^{i phi}.
void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex e = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s * e;
  const Complex gqp = -s * std::conj(e);
  const Complex gqq = c;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {  // columns: A G
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // rows: G^dag A
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

EigenSystem eig_hermitian(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  Matrix a = h.matrix();
  Matrix v = Matrix::identity(n);
  const double threshold = 1e-13 * h.matrix().frobenius_norm();

  int sweeps = 0;
  double off = off_diagonal_norm(a);
  while (off > threshold) {
    if (sweeps == kMaxJacobiSweeps)
      throw NumericFailure("Jacobi eigensolver did not converge", off);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    ++sweeps;
    off = off_diagonal_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  out.sweeps = static_cast<std::size_t>(sweeps);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    auto col = v.column(order[k]);
    fix_gauge(col);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = col[i];
  }
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (out.values[k + 1] - out.values[k] < EigenSystem::kDegeneracyGap) out.degenerate = true;
  return out;
}

UnitaryMatrix propagator(const EigenSystem& eig, double t) {
  if (!std::isfinite(t)) throw InvalidArgument("propagation time must be finite");
  const std::size_t n = eig.dim();
  Matrix out(n, n);
  std::vector<Complex> phase(n);
  for (std::size_t k = 0; k < n; ++k) phase[k] = std::polar(1.0, -eig.values[k] * t);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += eig.vectors(i, k) * phase[k] * std::conj(eig.vectors(j, k));
      out(i, j) = s;
    }
  }
  return UnitaryMatrix(std::move(out));
}

UnitaryMatrix propagator(const HermitianMatrix& h, double t) {
  if (!std::isfinite(t)) throw InvalidArgument("propagation time must be finite");
  if (t == 0.0) return UnitaryMatrix::identity(h.dim());
  return propagator(eig_hermitian(h), t);
}

Complex determinant(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("determinant needs a square matrix");
  const std::size_t n = m.rows();
  Matrix lu = m;
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(lu(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > best) {
        best = std::abs(lu(r, col));
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(col, j), lu(pivot, j));
      det = -det;
    }
    const Complex diag = lu(col, col);
    det *= diag;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = lu(r, col) / diag;
      if (f == Complex{}) continue;
      for (std::size_t j = col + 1; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
  return det;
}

}  // namespace holonomy

// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holonomy {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (shape, range, normalization).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : InvalidArgument("dimension mismatch: expected " + std::to_string(expected) +
                        ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// An iterative numerical routine failed to reach its target accuracy.
class NumericFailure : public Error {
 public:
  NumericFailure(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NotUnitary : public InvalidArgument {
 public:
  explicit NotUnitary(double defect)
      : InvalidArgument("matrix is not unitary: max |U^dag U - 1| = " + std::to_string(defect)),
        defect_(defect) {}

  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

/// Two consecutive states of a loop are orthogonal, so the Bargmann phase is undefined.
class OrthogonalStates : public InvalidArgument {
 public:
  OrthogonalStates(std::size_t index, double overlap_magnitude)
      : InvalidArgument("orthogonal consecutive states at loop index " + std::to_string(index) +
                        " (|overlap| = " + std::to_string(overlap_magnitude) + ")"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A trajectory does not return to its initial ray.
class NonCyclic : public Error {
 public:
  explicit NonCyclic(double closure_defect)
      : Error("trajectory is not cyclic: closure defect 1 - |<psi(0)|psi(T)>| = " +
              std::to_string(closure_defect)),
        closure_defect_(closure_defect) {}

  double closure_defect() const noexcept { return closure_defect_; }

 private:
  double closure_defect_;
};

/// A plaquette link overlap vanished; the grid must be refined.
class SingularPlaquette : public Error {
 public:
  SingularPlaquette(std::size_t i, std::size_t k, double a, double b)
      : Error("singular plaquette (" + std::to_string(i) + ", " + std::to_string(k) +
              ") at a = " + std::to_string(a) + ", b = " + std::to_string(b) +
              "; refine the grid"),
        i_(i),
        k_(k) {}

  std::size_t i() const noexcept { return i_; }
  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t i_;
  std::size_t k_;
};

/// Two bands touch on a mesh node: a degeneracy pierces the surface.
class GapCollapse : public Error {
 public:
  GapCollapse(double a, double b, double gap)
      : Error("spectral gap collapses to " + std::to_string(gap) + " at node (" +
              std::to_string(a) + ", " + std::to_string(b) + ")"),
        gap_(gap) {}

  double gap() const noexcept { return gap_; }

 private:
  double gap_;
};

/// Total band flux is not integral to within the acceptance window.
class RefineMesh : public Error {
 public:
  RefineMesh(std::size_t band, double defect)
      : Error("band " + std::to_string(band) + " flux is not integral (defect " +
              std::to_string(defect) + "); refine the mesh"),
        defect_(defect) {}

  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

class ConfigError : public Error {
 public:
  ConfigError(std::size_t line, const std::string& key, const std::string& message)
      : Error(format(line, key, message)), line_(line), key_(key) {}

  /// 0 when the error is not tied to a particular line.
  std::size_t line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }

 private:
  static std::string format(std::size_t line, const std::string& key, const std::string& msg) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!key.empty()) out += "key '" + key + "': ";
    return out + msg;
  }

  std::size_t line_;
  std::string key_;
};

}  // namespace holonomy

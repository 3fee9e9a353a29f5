// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file curvature.hpp
 * @brief Gauge-invariant lattice curvature for families of orthonormal frames.
 *
 * The curvature 2-form F^(j) = i <d phi_j| ^ |d phi_j> of column j is discretized
 * as the flux through each grid plaquette,
 *
 *   Phi_j = -arg( <j00|j10> <j10|j11> <j11|j01> <j01|j00> )  in (-pi, pi],
 *
 * traversed (a, b) -> (a+h, b) -> (a+h, b+h) -> (a, b+h). Each node's phase enters
 * once as a bra and once as a ket, so fluxes are exactly gauge invariant. On a
 * closed surface the wrapped fluxes of a band add up to 2 pi times an integer.
 *
 * Orientation: with (a, b) = (theta, phi) on a sphere the traversal above is
 * counterclockwise seen from outside. Under this convention the lower band of
 * R . S for spin 1/2 carries Chern number +1.
 *
 * Sphere meshes avoid the coordinate singularity by placing the theta rows at
 * theta_c + i h (theta_c = h / 2) and closing each end with a cap: a fan of
 * triangles from a pole node to the first (or last) ring.
 */

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "holonomy/linalg.hpp"
#include "holonomy/states.hpp"

namespace holonomy {

struct GridAxis {
  std::vector<double> coords;
  /// Periodic axes store each node once; the last node links back to the first.
  bool periodic = false;
  /// Length of one period; only meaningful when periodic.
  double period = 0.0;

  std::size_t size() const noexcept { return coords.size(); }
  /// Number of cells along the axis.
  std::size_t cells() const noexcept { return periodic ? coords.size() : coords.size() - 1; }
  /// Midpoint of cell i (wraps for the closing cell of a periodic axis).
  double cell_center(std::size_t i) const;

  /// n nodes spanning [lo, hi] inclusive.
  static GridAxis closed(double lo, double hi, std::size_t n);
  /// n nodes lo + k (hi - lo) / n; hi is identified with lo.
  static GridAxis periodic_axis(double lo, double hi, std::size_t n);
};

/// theta rows at (i + 1/2) pi / n_theta and phi nodes 2 pi k / n_phi.
std::pair<GridAxis, GridAxis> sphere_axes(std::size_t n_theta, std::size_t n_phi);

class FrameFamily {
 public:
  /// frames are row-major over (a, b): frames[i * b.size() + k]. Poles close the
  /// surface at the first / last a-row and require a periodic b axis.
  FrameFamily(GridAxis a, GridAxis b, std::vector<Frame> frames,
              std::optional<Frame> pole_first = std::nullopt,
              std::optional<Frame> pole_last = std::nullopt);

  std::size_t dim() const noexcept { return frames_.front().dim(); }
  const GridAxis& axis_a() const noexcept { return a_; }
  const GridAxis& axis_b() const noexcept { return b_; }
  const Frame& at(std::size_t i, std::size_t k) const { return frames_[i * b_.size() + k]; }
  const std::optional<Frame>& pole_first() const noexcept { return pole_first_; }
  const std::optional<Frame>& pole_last() const noexcept { return pole_last_; }

  /// Torus (both axes periodic) or sphere (periodic b with both poles).
  bool closed_surface() const noexcept;

  /// Smallest spectral gap over the nodes, when built from Hamiltonian eigenframes.
  std::optional<double> gap_min;

 private:
  GridAxis a_;
  GridAxis b_;
  std::vector<Frame> frames_;
  std::optional<Frame> pole_first_;
  std::optional<Frame> pole_last_;
};

/// Evaluates frame_at(a_i, b_k) on every node (in parallel).
FrameFamily sample_family(GridAxis a, GridAxis b,
                          const std::function<Frame(double, double)>& frame_at);

class FluxGrid {
 public:
  FluxGrid(std::size_t dim, std::vector<double> a_centers, std::vector<double> b_centers,
           bool closed_surface = false);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t cells_a() const noexcept { return a_centers_.size(); }
  std::size_t cells_b() const noexcept { return b_centers_.size(); }
  std::span<const double> a_centers() const noexcept { return a_centers_; }
  std::span<const double> b_centers() const noexcept { return b_centers_; }

  double flux(std::size_t j, std::size_t i, std::size_t k) const {
    return flux_[j][i * cells_b() + k];
  }
  double& flux(std::size_t j, std::size_t i, std::size_t k) { return flux_[j][i * cells_b() + k]; }

  /// Total cap flux for band j at the first / last row, if the family has poles.
  std::optional<double> cap_first(std::size_t j) const;
  std::optional<double> cap_last(std::size_t j) const;
  void set_caps(std::vector<double> first, std::vector<double> last);

  /// Sum over all plaquettes and caps for band j.
  double total(std::size_t j) const;

  /// The cells (and caps) tile a closed surface.
  bool closed_surface() const noexcept { return closed_; }

 private:
  std::size_t dim_;
  std::vector<double> a_centers_;
  std::vector<double> b_centers_;
  std::vector<std::vector<double>> flux_;
  std::vector<double> cap_first_;
  std::vector<double> cap_last_;
  bool closed_;
};

/// Flux of column j through the plaquette f00 -> f10 -> f11 -> f01. Throws
/// SingularPlaquette when a link overlap has magnitude <= 1e-9.
double plaquette_flux(const Frame& f00, const Frame& f10, const Frame& f11, const Frame& f01,
                      std::size_t j);

/// Fluxes of every column through every plaquette (and cap). Throws
/// SingularPlaquette with the offending cell.
FluxGrid two_form_field(const FrameFamily& family);

struct Theorem1Residual {
  /// max over plaquettes (and caps) of |sum_j Phi_j|.
  double max = 0.0;
  /// |sum_j Phi_j| per plaquette, row-major like FluxGrid.
  std::vector<double> map;
  std::optional<double> cap_first;
  std::optional<double> cap_last;
};

Theorem1Residual theorem1_residual(const FluxGrid& flux);

inline constexpr double kMinSpectralGap = 1e-8;

using HamiltonianField = std::function<HermitianMatrix(double, double)>;

/// Eigenbases (ascending eigenvalue, gauge-fixed) of h_at(a, b) on every node.
/// Throws GapCollapse if any node has a gap below kMinSpectralGap.
FrameFamily eigenframe_family(GridAxis a, GridAxis b, const HamiltonianField& h_at);

/// Eigenframes of h_at(theta, phi) on a closed sphere mesh with polar caps.
FrameFamily sphere_eigenframe_family(std::size_t n_theta, std::size_t n_phi,
                                     const HamiltonianField& h_at);

struct MonopoleReport {
  /// Chern number per band (band flux / 2 pi). The monopole charge is 2 pi c_n.
  std::vector<int> charges;
  /// Unrounded band flux / 2 pi.
  std::vector<double> raw;
  int sum = 0;
  /// Largest |raw - round(raw)|.
  double max_defect = 0.0;
  std::optional<double> gap_min;
};

inline constexpr double kIntegerTolerance = 1e-3;

/// Chern numbers of every band over a closed surface. Throws InvalidArgument if the
/// family is not closed and RefineMesh when a band flux is not within
/// kIntegerTolerance of an integer.
MonopoleReport chern_charges(const FrameFamily& family);
/// Same, from precomputed fluxes of a closed surface.
MonopoleReport chern_charges(const FluxGrid& flux, std::optional<double> gap_min = std::nullopt);

}  // namespace holonomy

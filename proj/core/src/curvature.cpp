// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include "holonomy/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holonomy/angles.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/parallel.hpp"

namespace holonomy {

double GridAxis::cell_center(std::size_t i) const {
  if (i + 1 < coords.size()) return 0.5 * (coords[i] + coords[i + 1]);
  return coords[i] + 0.5 * (coords.front() + period - coords[i]);
}

GridAxis GridAxis::closed(double lo, double hi, std::size_t n) {
  if (n < 2) throw InvalidArgument("a closed axis needs at least two nodes");
  GridAxis ax;
  ax.coords.resize(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) ax.coords[i] = lo + static_cast<double>(i) * h;
  ax.coords.back() = hi;
  return ax;
}

GridAxis GridAxis::periodic_axis(double lo, double hi, std::size_t n) {
  if (n < 3) throw InvalidArgument("a periodic axis needs at least three nodes");
  GridAxis ax;
  ax.periodic = true;
  ax.period = hi - lo;
  ax.coords.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    ax.coords[i] = lo + static_cast<double>(i) * ax.period / static_cast<double>(n);
  return ax;
}

std::pair<GridAxis, GridAxis> sphere_axes(std::size_t n_theta, std::size_t n_phi) {
  if (n_theta < 2) throw InvalidArgument("sphere mesh needs at least two theta rows");
  const double h = kPi / static_cast<double>(n_theta);
  return {GridAxis::closed(0.5 * h, kPi - 0.5 * h, n_theta), GridAxis::periodic_axis(0.0, kTwoPi, n_phi)};
}

// ---------------------------------------------------------------------------

FrameFamily::FrameFamily(GridAxis a, GridAxis b, std::vector<Frame> frames,
                         std::optional<Frame> pole_first, std::optional<Frame> pole_last)
    : a_(std::move(a)),
      b_(std::move(b)),
      frames_(std::move(frames)),
      pole_first_(std::move(pole_first)),
      pole_last_(std::move(pole_last)) {
  if (a_.size() < 2 || b_.size() < 2) throw InvalidArgument("frame family needs a 2x2 grid at least");
  if (frames_.size() != a_.size() * b_.size())
    throw DimensionMismatch(a_.size() * b_.size(), frames_.size());
  const std::size_t d = frames_.front().dim();
  for (const auto& f : frames_)
    if (f.dim() != d) throw DimensionMismatch(d, f.dim());
  for (const auto* pole : {&pole_first_, &pole_last_}) {
    if (!pole->has_value()) continue;
    if ((*pole)->dim() != d) throw DimensionMismatch(d, (*pole)->dim());
    if (!b_.periodic || a_.periodic)
      throw InvalidArgument("polar caps need a periodic b axis and an open a axis");
  }
}

bool FrameFamily::closed_surface() const noexcept {
  if (!b_.periodic) return false;
  return a_.periodic || (pole_first_.has_value() && pole_last_.has_value());
}

FrameFamily sample_family(GridAxis a, GridAxis b,
                          const std::function<Frame(double, double)>& frame_at) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  std::vector<std::optional<Frame>> slots(na * nb);
  parallel_for(na, [&](std::size_t i) {
    for (std::size_t k = 0; k < nb; ++k) slots[i * nb + k] = frame_at(a.coords[i], b.coords[k]);
  });
  std::vector<Frame> frames;
  frames.reserve(slots.size());
  for (auto& s : slots) frames.push_back(std::move(*s));
  return FrameFamily(std::move(a), std::move(b), std::move(frames));
}

// ---------------------------------------------------------------------------

FluxGrid::FluxGrid(std::size_t dim, std::vector<double> a_centers, std::vector<double> b_centers,
                   bool closed_surface)
    : dim_(dim),
      a_centers_(std::move(a_centers)),
      b_centers_(std::move(b_centers)),
      flux_(dim, std::vector<double>(a_centers_.size() * b_centers_.size(), 0.0)),
      closed_(closed_surface) {}

std::optional<double> FluxGrid::cap_first(std::size_t j) const {
  if (cap_first_.empty()) return std::nullopt;
  return cap_first_[j];
}

std::optional<double> FluxGrid::cap_last(std::size_t j) const {
  if (cap_last_.empty()) return std::nullopt;
  return cap_last_[j];
}

void FluxGrid::set_caps(std::vector<double> first, std::vector<double> last) {
  if (!first.empty() && first.size() != dim_) throw DimensionMismatch(dim_, first.size());
  if (!last.empty() && last.size() != dim_) throw DimensionMismatch(dim_, last.size());
  cap_first_ = std::move(first);
  cap_last_ = std::move(last);
}

double FluxGrid::total(std::size_t j) const {
  double s = 0.0;
  for (double v : flux_[j]) s += v;
  if (!cap_first_.empty()) s += cap_first_[j];
  if (!cap_last_.empty()) s += cap_last_[j];
  return s;
}

namespace {

constexpr double kMinLink = 1e-9;

// -arg of the product of link overlaps around the polygon; nullopt if a link vanishes.
std::optional<double> loop_flux(std::initializer_list<const StateVector*> nodes) {
  Complex product = 1.0;
  const auto* first = *nodes.begin();
  const StateVector* prev = nullptr;
  for (const auto* n : nodes) {
    if (prev != nullptr) {
      const Complex link = overlap(*prev, *n);
      if (!(std::abs(link) > kMinLink)) return std::nullopt;
      product *= link / std::abs(link);
    }
    prev = n;
  }
  const Complex closing = overlap(*prev, *first);
  if (!(std::abs(closing) > kMinLink)) return std::nullopt;
  product *= closing / std::abs(closing);
  return wrap_phase(-std::arg(product));
}

}  // namespace

double plaquette_flux(const Frame& f00, const Frame& f10, const Frame& f11, const Frame& f01,
                      std::size_t j) {
  const std::size_t d = f00.dim();
  for (const Frame* f : {&f10, &f11, &f01})
    if (f->dim() != d) throw DimensionMismatch(d, f->dim());
  if (j >= d) throw InvalidArgument("state index out of range");
  const auto flux = loop_flux({&f00.column(j), &f10.column(j), &f11.column(j), &f01.column(j)});
  if (!flux) throw SingularPlaquette(0, 0, 0.0, 0.0);
  return *flux;
}

FluxGrid two_form_field(const FrameFamily& family) {
  const GridAxis& a = family.axis_a();
  const GridAxis& b = family.axis_b();
  const std::size_t d = family.dim();
  const std::size_t ca = a.cells();
  const std::size_t cb = b.cells();

  std::vector<double> ac(ca);
  std::vector<double> bc(cb);
  for (std::size_t i = 0; i < ca; ++i) ac[i] = a.cell_center(i);
  for (std::size_t k = 0; k < cb; ++k) bc[k] = b.cell_center(k);
  FluxGrid grid(d, ac, bc, family.closed_surface());

  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  parallel_for(ca, [&](std::size_t i) {
    const std::size_t i1 = (i + 1) % na;
    for (std::size_t k = 0; k < cb; ++k) {
      const std::size_t k1 = (k + 1) % nb;
      const Frame& f00 = family.at(i, k);
      const Frame& f10 = family.at(i1, k);
      const Frame& f11 = family.at(i1, k1);
      const Frame& f01 = family.at(i, k1);
      for (std::size_t j = 0; j < d; ++j) {
        const auto flux =
            loop_flux({&f00.column(j), &f10.column(j), &f11.column(j), &f01.column(j)});
        if (!flux) throw SingularPlaquette(i, k, ac[i], bc[k]);
        grid.flux(j, i, k) = *flux;
      }
    }
  });

  // Fans of triangles; the first cap runs pole -> ring_k -> ring_{k+1}, the last
  // cap the opposite way, so shared ring links cancel against the plaquettes.
  auto cap = [&](const Frame& pole, std::size_t row, bool reverse) {
    std::vector<double> totals(d, 0.0);
    for (std::size_t k = 0; k < nb; ++k) {
      const std::size_t k1 = (k + 1) % nb;
      const Frame& r0 = family.at(row, reverse ? k1 : k);
      const Frame& r1 = family.at(row, reverse ? k : k1);
      for (std::size_t j = 0; j < d; ++j) {
        const auto flux = loop_flux({&pole.column(j), &r0.column(j), &r1.column(j)});
        if (!flux) throw SingularPlaquette(row, k, a.coords[row], bc[k]);
        totals[j] += *flux;
      }
    }
    return totals;
  };
  std::vector<double> first;
  std::vector<double> last;
  if (family.pole_first()) first = cap(*family.pole_first(), 0, false);
  if (family.pole_last()) last = cap(*family.pole_last(), na - 1, true);
  grid.set_caps(std::move(first), std::move(last));
  return grid;
}

Theorem1Residual theorem1_residual(const FluxGrid& flux) {
  Theorem1Residual out;
  const std::size_t cells = flux.cells_a() * flux.cells_b();
  out.map.assign(cells, 0.0);
  for (std::size_t i = 0; i < flux.cells_a(); ++i) {
    for (std::size_t k = 0; k < flux.cells_b(); ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j < flux.dim(); ++j) s += flux.flux(j, i, k);
      const double r = std::fabs(s);
      out.map[i * flux.cells_b() + k] = r;
      out.max = std::max(out.max, r);
    }
  }
  auto cap_residual = [&](auto getter) -> std::optional<double> {
    if (!getter(0)) return std::nullopt;
    double s = 0.0;
    for (std::size_t j = 0; j < flux.dim(); ++j) s += *getter(j);
    return std::fabs(s);
  };
  out.cap_first = cap_residual([&](std::size_t j) { return flux.cap_first(j); });
  out.cap_last = cap_residual([&](std::size_t j) { return flux.cap_last(j); });
  if (out.cap_first) out.max = std::max(out.max, *out.cap_first);
  if (out.cap_last) out.max = std::max(out.max, *out.cap_last);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct NodeEigenframe {
  Frame frame;
  double gap;
};

NodeEigenframe eigenframe_at(const HamiltonianField& h_at, double a, double b) {
  const EigenSystem eig = eig_hermitian(h_at(a, b));
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < eig.dim(); ++k) gap = std::min(gap, eig.values[k + 1] - eig.values[k]);
  if (gap < kMinSpectralGap) throw GapCollapse(a, b, gap);
  return {Frame::from_matrix(eig.vectors), gap};
}

FrameFamily eigen_family(GridAxis a, GridAxis b, const HamiltonianField& h_at,
                         const std::optional<std::pair<double, double>>& pole_first,
                         const std::optional<std::pair<double, double>>& pole_last) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  std::vector<std::optional<Frame>> slots(na * nb);
  std::vector<double> row_gap(na, std::numeric_limits<double>::infinity());
  parallel_for(na, [&](std::size_t i) {
    for (std::size_t k = 0; k < nb; ++k) {
      auto node = eigenframe_at(h_at, a.coords[i], b.coords[k]);
      row_gap[i] = std::min(row_gap[i], node.gap);
      slots[i * nb + k] = std::move(node.frame);
    }
  });
  double gap_min = *std::min_element(row_gap.begin(), row_gap.end());

  std::optional<Frame> first;
  std::optional<Frame> last;
  if (pole_first) {
    auto node = eigenframe_at(h_at, pole_first->first, pole_first->second);
    gap_min = std::min(gap_min, node.gap);
    first = std::move(node.frame);
  }
  if (pole_last) {
    auto node = eigenframe_at(h_at, pole_last->first, pole_last->second);
    gap_min = std::min(gap_min, node.gap);
    last = std::move(node.frame);
  }

  std::vector<Frame> frames;
  frames.reserve(slots.size());
  for (auto& s : slots) frames.push_back(std::move(*s));
  FrameFamily family(std::move(a), std::move(b), std::move(frames), std::move(first), std::move(last));
  family.gap_min = gap_min;
  return family;
}

}  // namespace

FrameFamily eigenframe_family(GridAxis a, GridAxis b, const HamiltonianField& h_at) {
  return eigen_family(std::move(a), std::move(b), h_at, std::nullopt, std::nullopt);
}

FrameFamily sphere_eigenframe_family(std::size_t n_theta, std::size_t n_phi,
                                     const HamiltonianField& h_at) {
  auto [theta, phi] = sphere_axes(n_theta, n_phi);
  return eigen_family(std::move(theta), std::move(phi), h_at, std::pair{0.0, 0.0},
                      std::pair{kPi, 0.0});
}

MonopoleReport chern_charges(const FluxGrid& flux, std::optional<double> gap_min) {
  if (!flux.closed_surface())
    throw InvalidArgument("Chern numbers need fluxes over a closed surface");
  MonopoleReport report;
  report.gap_min = gap_min;
  for (std::size_t j = 0; j < flux.dim(); ++j) {
    const double raw = flux.total(j) / kTwoPi;
    const double rounded = std::round(raw);
    const double defect = std::fabs(raw - rounded);
    if (defect > kIntegerTolerance) throw RefineMesh(j, defect);
    report.raw.push_back(raw);
    report.charges.push_back(static_cast<int>(rounded));
    report.sum += static_cast<int>(rounded);
    report.max_defect = std::max(report.max_defect, defect);
  }
  return report;
}

MonopoleReport chern_charges(const FrameFamily& family) {
  if (!family.closed_surface())
    throw InvalidArgument("Chern numbers need a family over a closed surface");
  return chern_charges(two_form_field(family), family.gap_min);
}

}  // namespace holonomy

// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include "holonomy/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "holonomy/angles.hpp"
#include "holonomy/curvature.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/evolution.hpp"
#include "holonomy/operators.hpp"
#include "holonomy/phases.hpp"
#include "holonomy/random.hpp"

namespace holonomy {

namespace {

constexpr std::pair<ScenarioKind, std::string_view> kKindNames[] = {
    {ScenarioKind::kPrecession, "precession"},
    {ScenarioKind::kRandomHamiltonian, "random-hamiltonian"},
    {ScenarioKind::kRotatingField, "rotating-field"},
    {ScenarioKind::kFrameFamily, "frame-family"},
    {ScenarioKind::kSpinMonopole, "spin-monopole"},
    {ScenarioKind::kMeasurementLoop, "measurement-loop"},
    {ScenarioKind::kGateCheck, "gate-check"},
};

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

ScenarioKind scenario_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  throw ConfigError(0, "kind", "unknown scenario kind '" + std::string(name) + "'");
}

std::vector<ScenarioInfo> list_scenarios() {
  return {
      {ScenarioKind::kPrecession,
       "qubit precessing about z; geometric phases of a state and its orthogonal partner"},
      {ScenarioKind::kRandomHamiltonian,
       "random constant Hermitian H; phase sum over the cyclic eigenstates of U(T)"},
      {ScenarioKind::kRotatingField,
       "qubit in a rotating transverse field; time-dependent phase sum rule"},
      {ScenarioKind::kFrameFamily,
       "curvature of a 2-parameter frame family; pointwise cancellation under refinement"},
      {ScenarioKind::kSpinMonopole,
       "spin-j in a radial field over a sphere; per-band Chern numbers and their sum"},
      {ScenarioKind::kMeasurementLoop,
       "Bargmann phase of a closed sequence of projective measurements"},
      {ScenarioKind::kGateCheck, "determinant test of a candidate geometric phase gate"},
  };
}

// ---------------------------------------------------------------------------
// Config parsing
// ---------------------------------------------------------------------------

namespace {

std::string format_real(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::size_t line;
  std::string value;
};

const std::set<std::string, std::less<>> kCommonKeys = {"kind", "seed", "tolerance"};

const std::map<ScenarioKind, std::set<std::string, std::less<>>> kKindKeys = {
    {ScenarioKind::kPrecession, {"theta", "omega", "steps", "duration"}},
    {ScenarioKind::kRandomHamiltonian, {"dim", "steps", "duration"}},
    {ScenarioKind::kRotatingField, {"omega", "omega0", "steps", "duration"}},
    {ScenarioKind::kFrameFamily, {"family", "dim", "grid"}},
    {ScenarioKind::kSpinMonopole, {"spin", "grid"}},
    {ScenarioKind::kMeasurementLoop, {"loop", "theta", "points"}},
    {ScenarioKind::kGateCheck, {"gate", "dim", "gamma"}},
};

const std::map<ScenarioKind, std::vector<std::string>> kRequiredKeys = {
    {ScenarioKind::kPrecession, {"theta"}},
    {ScenarioKind::kRandomHamiltonian, {"dim"}},
    {ScenarioKind::kSpinMonopole, {"spin"}},
    {ScenarioKind::kGateCheck, {"gate", "dim"}},
};

bool is_known_key(std::string_view key) {
  if (kCommonKeys.contains(key)) return true;
  return std::any_of(kKindKeys.begin(), kKindKeys.end(),
                     [&](const auto& kv) { return kv.second.contains(key); });
}

std::optional<double> parse_plain_real(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Plain reals or [coef][*]pi[/denom].
std::optional<double> parse_real(std::string_view s) {
  if (auto v = parse_plain_real(s)) return v;
  const auto pos = s.find("pi");
  if (pos == std::string_view::npos) return std::nullopt;
  std::string_view coef = trim(s.substr(0, pos));
  std::string_view rest = trim(s.substr(pos + 2));
  double c = 1.0;
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  if (coef == "-") {
    c = -1.0;
  } else if (!coef.empty()) {
    const auto v = parse_plain_real(coef);
    if (!v) return std::nullopt;
    c = *v;
  }
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') return std::nullopt;
    const auto v = parse_plain_real(trim(rest.substr(1)));
    if (!v || *v == 0.0) return std::nullopt;
    denom = *v;
  }
  return c * kPi / denom;
}

template <typename T>
std::optional<T> parse_unsigned(std::string_view s) {
  T v{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

// 2j from "1/2", "3/2", "1", "0.5", ...
std::optional<int> parse_two_j(std::string_view s) {
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = parse_unsigned<unsigned>(trim(s.substr(0, slash)));
    const auto den = parse_unsigned<unsigned>(trim(s.substr(slash + 1)));
    if (!num || !den || *den != 2) return std::nullopt;
    return static_cast<int>(*num);
  }
  const auto v = parse_plain_real(s);
  if (!v) return std::nullopt;
  const double twice = 2.0 * *v;
  if (std::fabs(twice - std::round(twice)) > 1e-12) return std::nullopt;
  return static_cast<int>(std::lround(twice));
}

}  // namespace

ScenarioConfig parse_config(std::string_view text, const ScenarioOverrides& overrides) {
  std::map<std::string, Entry, std::less<>> entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "", "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError(line_no, "", "empty key");
    if (value.empty()) throw ConfigError(line_no, key, "empty value");
    if (!is_known_key(key)) throw ConfigError(line_no, key, "unknown key");
    if (entries.contains(key))
      throw ConfigError(line_no, key,
                        "duplicate key (first set on line " + std::to_string(entries[key].line) + ")");
    entries.emplace(key, Entry{line_no, value});
  }

  const auto kind_it = entries.find("kind");
  if (kind_it == entries.end()) throw ConfigError(0, "kind", "missing required key");
  ScenarioConfig cfg;
  try {
    cfg.kind = scenario_kind_from_string(kind_it->second.value);
  } catch (const ConfigError& e) {
    throw ConfigError(kind_it->second.line, "kind",
                      "unknown scenario kind '" + kind_it->second.value + "'");
  }

  const auto& allowed = kKindKeys.at(cfg.kind);
  auto override_key = [&](const std::string& key, const std::optional<std::string>& value) {
    if (value && (kCommonKeys.contains(key) || allowed.contains(key)))
      entries.insert_or_assign(key, Entry{0, *value});
  };
  override_key("steps", overrides.steps ? std::optional(std::to_string(*overrides.steps)) : std::nullopt);
  override_key("grid", overrides.grid);
  override_key("tolerance", overrides.tolerance ? std::optional(format_real(*overrides.tolerance))
                                                : std::nullopt);
  for (const auto& [key, entry] : entries) {
    if (!kCommonKeys.contains(key) && !allowed.contains(key))
      throw ConfigError(entry.line, key,
                        "not used by scenario kind '" + std::string(to_string(cfg.kind)) + "'");
  }
  if (const auto req = kRequiredKeys.find(cfg.kind); req != kRequiredKeys.end()) {
    for (const auto& key : req->second)
      if (!entries.contains(key)) throw ConfigError(0, key, "missing required key");
  }

  auto fail = [&](const std::string& key, const std::string& msg) -> ConfigError {
    return ConfigError(entries.at(key).line, key, msg + ", got '" + entries.at(key).value + "'");
  };
  auto real = [&](const std::string& key, auto valid, const char* expect) -> std::optional<double> {
    const auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    const auto v = parse_real(it->second.value);
    if (!v || !valid(*v)) throw fail(key, expect);
    return v;
  };
  auto count = [&](const std::string& key, std::size_t min) -> std::optional<std::size_t> {
    const auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    const auto v = parse_unsigned<std::size_t>(it->second.value);
    if (!v || *v < min) throw fail(key, "expected an integer >= " + std::to_string(min));
    return v;
  };
  auto word = [&](const std::string& key, std::initializer_list<std::string_view> options)
      -> std::optional<std::string> {
    const auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    if (std::find(options.begin(), options.end(), it->second.value) == options.end()) {
      std::string list;
      for (auto o : options) list += (list.empty() ? "" : " | ") + std::string(o);
      throw fail(key, "expected one of " + list);
    }
    return it->second.value;
  };
  const auto positive = [](double v) { return v > 0.0; };
  const auto any = [](double) { return true; };

  if (const auto it = entries.find("seed"); it != entries.end()) {
    const auto v = parse_unsigned<std::uint64_t>(it->second.value);
    if (!v) throw fail("seed", "expected an unsigned 64-bit integer");
    cfg.seed = *v;
  }
  if (auto v = real("tolerance", positive, "expected a positive real")) cfg.tolerance = *v;
  if (auto v = count("steps", 1)) cfg.steps = *v;
  if (const auto it = entries.find("grid"); it != entries.end()) {
    const std::string& g = it->second.value;
    const auto x = g.find_first_of("xX");
    std::optional<std::size_t> na;
    std::optional<std::size_t> nb;
    if (x != std::string::npos) {
      na = parse_unsigned<std::size_t>(trim(std::string_view(g).substr(0, x)));
      nb = parse_unsigned<std::size_t>(trim(std::string_view(g).substr(x + 1)));
    }
    if (!na || !nb || *na < 3 || *nb < 3) throw fail("grid", "expected AxB with A, B >= 3");
    cfg.grid_a = *na;
    cfg.grid_b = *nb;
  }
  cfg.duration = real("duration", positive, "expected a positive real");
  cfg.dim = count("dim", 1);
  cfg.theta = real("theta", [](double v) { return v >= 0.0 && v <= kPi + 1e-12; },
                   "expected an angle in [0, pi]");
  if (auto v = real("omega", [](double v) { return v != 0.0; }, "expected a nonzero real"))
    cfg.omega = *v;
  if (auto v = real("omega0", any, "expected a real")) cfg.omega0 = *v;
  if (const auto it = entries.find("spin"); it != entries.end()) {
    const auto v = parse_two_j(it->second.value);
    if (!v || *v < 1) throw fail("spin", "expected a positive half-integer such as 1/2, 1, 3/2");
    cfg.two_j = *v;
  }
  if (auto v = word("family", {"bloch", "random"})) cfg.family = *v;
  if (auto v = word("loop", {"octant", "latitude"})) cfg.loop = *v;
  if (auto v = count("points", 3)) cfg.points = *v;
  if (auto v = word("gate", {"hadamard", "identity", "single-phase"})) cfg.gate = *v;
  if (auto v = real("gamma", any, "expected a real")) cfg.gamma = *v;

  // Cross-field rules.
  if (cfg.kind == ScenarioKind::kRandomHamiltonian && *cfg.dim < 1)
    throw fail("dim", "expected dim >= 1");
  if (cfg.kind == ScenarioKind::kFrameFamily) {
    if (cfg.family == "bloch" && cfg.dim && *cfg.dim != 2)
      throw fail("dim", "the bloch family has dim 2");
    if (cfg.family == "random" && cfg.dim && *cfg.dim < 2) throw fail("dim", "expected dim >= 2");
  }
  if (cfg.kind == ScenarioKind::kMeasurementLoop) {
    if (cfg.loop == "latitude" && !cfg.theta)
      throw ConfigError(0, "theta", "missing required key for loop = latitude");
    if (cfg.loop == "octant" && cfg.theta) throw fail("theta", "only applies to loop = latitude");
    if (cfg.loop == "octant" && entries.contains("points"))
      throw fail("points", "only applies to loop = latitude");
  }
  if (cfg.kind == ScenarioKind::kGateCheck) {
    if (cfg.gate == "hadamard" && *cfg.dim < 2) throw fail("dim", "Hadamard gates need dim >= 2");
    if (cfg.gate != "single-phase" && entries.contains("gamma"))
      throw fail("gamma", "only applies to gate = single-phase");
  }
  return cfg;
}

std::vector<std::pair<std::string, std::string>> echo_config(const ScenarioConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("kind", std::string(to_string(cfg.kind)));
  out.emplace_back("seed", std::to_string(cfg.seed));
  out.emplace_back("tolerance", format_real(cfg.tolerance));
  const auto& keys = kKindKeys.at(cfg.kind);
  auto add = [&](const char* key, std::string value) {
    if (keys.contains(key)) out.emplace_back(key, std::move(value));
  };
  add("steps", std::to_string(cfg.steps));
  add("grid", std::to_string(cfg.grid_a) + "x" + std::to_string(cfg.grid_b));
  if (cfg.duration) add("duration", format_real(*cfg.duration));
  if (cfg.dim) add("dim", std::to_string(*cfg.dim));
  if (cfg.theta) add("theta", format_real(*cfg.theta));
  add("omega", format_real(cfg.omega));
  add("omega0", format_real(cfg.omega0));
  add("spin", cfg.two_j % 2 == 0 ? std::to_string(cfg.two_j / 2) : std::to_string(cfg.two_j) + "/2");
  add("family", cfg.family);
  add("loop", cfg.loop);
  if (cfg.loop == "latitude") add("points", std::to_string(cfg.points));
  add("gate", cfg.gate);
  if (cfg.gate == "single-phase") add("gamma", format_real(cfg.gamma));
  return out;
}

std::optional<double> RunReport::metric(std::string_view name) const {
  for (const auto& [k, v] : metrics)
    if (k == name) return v;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Scenario runners
// ---------------------------------------------------------------------------

namespace {

// Residuals at or below this level are pure rounding; a refinement ratio between
// two such values carries no information.
constexpr double kRoundoffFloor = 1e-12;

void add_check(RunReport& r, std::string name, bool pass) { r.checks.push_back({std::move(name), pass}); }

void add_phase_rows(RunReport& r, std::span<const PhaseDecomposition> parts) {
  for (std::size_t j = 0; j < parts.size(); ++j)
    r.phases.push_back({j, parts[j].total, parts[j].dynamical, parts[j].geometric});
}

void add_gate(RunReport& r, const Frame& frame, std::span<const double> gammas, double tol) {
  r.verdict = gate_verdict(phase_gate(frame, gammas), tol);
  add_check(r, "gate_su_d", r.verdict->geometric_feasible);
}

void add_flux_grids(RunReport& r, const FluxGrid& flux, const Theorem1Residual& residual) {
  const std::vector<double> a(flux.a_centers().begin(), flux.a_centers().end());
  const std::vector<double> b(flux.b_centers().begin(), flux.b_centers().end());
  for (std::size_t j = 0; j < flux.dim(); ++j) {
    GridData g{"flux_j" + std::to_string(j), a, b, {}};
    g.values.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < b.size(); ++k) g.values.push_back(flux.flux(j, i, k));
    r.grids.push_back(std::move(g));
  }
  r.grids.push_back({"residual", a, b, residual.map});
}

void run_precession(const ScenarioConfig& cfg, RunReport& r) {
  const double theta = *cfg.theta;
  const double period = kTwoPi / std::fabs(cfg.omega);
  const double duration = cfg.duration.value_or(period);
  const auto h = HamiltonianSampler::constant(0.5 * cfg.omega * pauli_z());
  const Frame frame = complete_frame(
      StateVector::normalized({std::cos(0.5 * theta), std::sin(0.5 * theta)}));

  std::vector<PhaseDecomposition> parts;
  std::vector<double> gammas;
  std::optional<Trajectory> first;
  for (std::size_t j = 0; j < 2; ++j) {
    Trajectory traj = trajectory(h, frame.column(j), duration, cfg.steps);
    parts.push_back(phase_decomposition(traj));
    gammas.push_back(parts.back().geometric);
    if (j == 0) first.emplace(std::move(traj));
  }
  add_phase_rows(r, parts);

  r.residual_theorem2 = sum_rule_residual(gammas);
  add_check(r, "theorem2", *r.residual_theorem2 < cfg.tolerance);
  const double mirror = circular_distance(gammas[1], -gammas[0]);
  r.metrics.emplace_back("mirror_residual", mirror);
  add_check(r, "mirror", mirror < cfg.tolerance);

  if (std::fabs(duration - period) <= 1e-12 * period) {
    const double analytic = wrap_phase(-kPi * (1.0 - std::cos(theta)));
    const double error = circular_distance(gammas[0], analytic);
    r.metrics.emplace_back("analytic_geometric", analytic);
    r.metrics.emplace_back("analytic_error", error);
    add_check(r, "analytic", error < cfg.tolerance);
  }

  // The sampled trajectory read as a measurement record: geodesic polygon through
  // psi(t_0), ..., psi(t_{N-1}).
  const auto states = first->states();
  const DiscreteLoop loop(std::vector<StateVector>(states.begin(), states.end() - 1));
  const double bargmann = bargmann_phase(loop);
  r.metrics.emplace_back("bargmann_phase", bargmann);
  r.metrics.emplace_back("bargmann_error", circular_distance(bargmann, gammas[0]));

  add_gate(r, frame, gammas, cfg.tolerance);
}

void run_sum_rule(const HamiltonianSampler& h, double duration, const ScenarioConfig& cfg,
                  RunReport& r) {
  const SumRuleReport report = sum_rule_check(h, duration, cfg.steps, cfg.tolerance);
  add_phase_rows(r, report.decompositions);
  r.residual_theorem2 = report.residual;
  r.metrics.emplace_back("degenerate", report.degenerate() ? 1.0 : 0.0);
  // Cross-check: the total phases are the eigenphases of U(T).
  double alpha_mismatch = 0.0;
  for (std::size_t j = 0; j < report.decompositions.size(); ++j)
    alpha_mismatch = std::max(
        alpha_mismatch, circular_distance(report.decompositions[j].total, report.cyclic.alphas[j]));
  r.metrics.emplace_back("alpha_mismatch", alpha_mismatch);
  add_check(r, "theorem2", report.pass);
  add_gate(r, report.cyclic.frame, report.phases, cfg.tolerance);
}

void run_random_hamiltonian(const ScenarioConfig& cfg, RunReport& r) {
  Rng rng(cfg.seed);
  const auto h = HamiltonianSampler::constant(random_hermitian(*cfg.dim, rng));
  run_sum_rule(h, cfg.duration.value_or(1.0), cfg, r);
}

void run_rotating_field(const ScenarioConfig& cfg, RunReport& r) {
  const double omega = cfg.omega;
  const double half_drive = 0.5 * cfg.omega0;
  const HermitianMatrix sx = pauli_x();
  const HermitianMatrix sy = pauli_y();
  const HamiltonianSampler h(2, [=](double t) {
    return (half_drive * std::cos(omega * t)) * sx + (half_drive * std::sin(omega * t)) * sy;
  });
  run_sum_rule(h, cfg.duration.value_or(kTwoPi / std::fabs(omega)), cfg, r);
}

struct FamilyBuilder {
  std::size_t dim;
  std::function<FrameFamily(std::size_t, std::size_t)> build;
};

FamilyBuilder frame_family_builder(const ScenarioConfig& cfg) {
  if (cfg.family == "bloch") {
    return {2, [](std::size_t na, std::size_t nb) {
              return sample_family(GridAxis::closed(0.1, kPi - 0.1, na),
                                   GridAxis::periodic_axis(0.0, kTwoPi, nb),
                                   [](double theta, double phi) { return bloch_frame(theta, phi); });
            }};
  }
  const std::size_t d = cfg.dim.value_or(4);
  Rng rng(cfg.seed);
  // Unit spectral norm keeps the family's variation rate independent of d.
  const auto unit = [](const HermitianMatrix& g) {
    const auto eig = eig_hermitian(g);
    return (1.0 / std::max(std::abs(eig.values.front()), std::abs(eig.values.back()))) * g;
  };
  const HermitianMatrix g1 = unit(random_hermitian(d, rng));
  const HermitianMatrix g2 = unit(random_hermitian(d, rng));
  return {d, [g1, g2](std::size_t na, std::size_t nb) {
            return sample_family(GridAxis::closed(0.0, 1.0, na), GridAxis::closed(0.0, 1.0, nb),
                                 [&](double a, double b) {
                                   return Frame::from_matrix(propagator(a * g1 + b * g2, 1.0).matrix());
                                 });
          }};
}

// Node count that halves the cell size along an axis.
std::size_t refined(const GridAxis& ax) { return ax.periodic ? 2 * ax.size() : 2 * ax.size() - 1; }

void run_frame_family(const ScenarioConfig& cfg, RunReport& r) {
  const FamilyBuilder builder = frame_family_builder(cfg);
  const FrameFamily coarse = builder.build(cfg.grid_a, cfg.grid_b);
  const FluxGrid flux = two_form_field(coarse);
  const Theorem1Residual res = theorem1_residual(flux);

  const FrameFamily fine = builder.build(refined(coarse.axis_a()), refined(coarse.axis_b()));
  const Theorem1Residual res_fine = theorem1_residual(two_form_field(fine));

  r.residual_theorem1 = res.max;
  r.metrics.emplace_back("residual_theorem1_refined", res_fine.max);
  const bool at_floor = res.max <= kRoundoffFloor && res_fine.max <= kRoundoffFloor;
  const double ratio = res_fine.max > 0.0 ? res.max / res_fine.max : 0.0;
  r.metrics.emplace_back("refinement_ratio", ratio);
  r.metrics.emplace_back("roundoff_floor", kRoundoffFloor);
  for (std::size_t j = 0; j < flux.dim(); ++j)
    r.metrics.emplace_back("band_flux_j" + std::to_string(j), flux.total(j));
  add_check(r, "theorem1", res.max < cfg.tolerance);
  add_check(r, "theorem1_refinement", at_floor || ratio >= 4.0);
  add_flux_grids(r, flux, res);
}

void run_spin_monopole(const ScenarioConfig& cfg, RunReport& r) {
  const auto spin = spin_matrices(cfg.two_j);
  const HamiltonianField field = [&spin](double theta, double phi) {
    return spin_dot(spin, std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                    std::cos(theta));
  };
  const FrameFamily family = sphere_eigenframe_family(cfg.grid_a, cfg.grid_b, field);
  const FluxGrid flux = two_form_field(family);
  const MonopoleReport report = chern_charges(flux, family.gap_min);
  const Theorem1Residual res = theorem1_residual(flux);

  const MonopoleReport doubled =
      chern_charges(sphere_eigenframe_family(2 * cfg.grid_a, 2 * cfg.grid_b, field));

  r.charges = report.charges;
  r.residual_theorem1 = res.max;
  r.metrics.emplace_back("charge_sum", report.sum);
  r.metrics.emplace_back("max_integer_defect", report.max_defect);
  r.metrics.emplace_back("gap_min", report.gap_min.value_or(0.0));
  for (std::size_t n = 0; n < report.raw.size(); ++n)
    r.metrics.emplace_back("raw_charge_j" + std::to_string(n), report.raw[n]);
  add_check(r, "charge_sum_zero", report.sum == 0);
  add_check(r, "mesh_stable", doubled.charges == report.charges);
  add_flux_grids(r, flux, res);
}

std::vector<StateVector> measurement_points(const ScenarioConfig& cfg) {
  if (cfg.loop == "octant") {
    const double s = M_SQRT1_2;
    return {StateVector::basis(2, 0), StateVector::normalized({s, s}),
            StateVector::normalized({s, Complex(0.0, s)})};
  }
  const double theta = *cfg.theta;
  std::vector<StateVector> pts;
  pts.reserve(cfg.points);
  for (std::size_t k = 0; k < cfg.points; ++k) {
    const double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(cfg.points);
    pts.push_back(StateVector::normalized({std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi)}));
  }
  return pts;
}

void run_measurement_loop(const ScenarioConfig& cfg, RunReport& r) {
  std::vector<StateVector> pts = measurement_points(cfg);
  std::vector<StateVector> partners;
  partners.reserve(pts.size());
  for (const auto& p : pts) partners.push_back(complete_frame(p).column(1));

  const double gamma = bargmann_phase(measurement_loop(std::move(pts)));
  const double partner = bargmann_phase(measurement_loop(std::move(partners)));
  const double solid_angle = cfg.loop == "octant" ? kPi / 2.0 : kTwoPi * (1.0 - std::cos(*cfg.theta));
  const double analytic = wrap_phase(-0.5 * solid_angle);

  r.metrics.emplace_back("bargmann_phase", gamma);
  r.metrics.emplace_back("partner_bargmann_phase", partner);
  r.metrics.emplace_back("analytic_geometric", analytic);
  r.metrics.emplace_back("analytic_error", circular_distance(gamma, analytic));
  r.residual_theorem2 = sum_rule_residual(std::vector<double>{gamma, partner});
  add_check(r, "theorem2", *r.residual_theorem2 < cfg.tolerance);
  add_check(r, "analytic", circular_distance(gamma, analytic) < cfg.tolerance);
}

void run_gate_check(const ScenarioConfig& cfg, RunReport& r) {
  const std::size_t d = *cfg.dim;
  Matrix u;
  if (cfg.gate == "hadamard") {
    u = hadamard_gate(d).matrix();
  } else if (cfg.gate == "identity") {
    u = Matrix::identity(d);
  } else {
    u = Matrix::identity(d);
    u(0, 0) = std::polar(1.0, cfg.gamma);
  }
  r.verdict = gate_verdict(u, cfg.tolerance);
  r.metrics.emplace_back("det_abs", std::abs(r.verdict->det));
  add_check(r, "gate_su_d", r.verdict->geometric_feasible);
}

}  // namespace

RunReport run_scenario(const ScenarioConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  r.scenario = echo_config(cfg);
  r.generator = std::string(Rng::kGeneratorName);
  switch (cfg.kind) {
    case ScenarioKind::kPrecession:
      run_precession(cfg, r);
      break;
    case ScenarioKind::kRandomHamiltonian:
      run_random_hamiltonian(cfg, r);
      break;
    case ScenarioKind::kRotatingField:
      run_rotating_field(cfg, r);
      break;
    case ScenarioKind::kFrameFamily:
      run_frame_family(cfg, r);
      break;
    case ScenarioKind::kSpinMonopole:
      run_spin_monopole(cfg, r);
      break;
    case ScenarioKind::kMeasurementLoop:
      run_measurement_loop(cfg, r);
      break;
    case ScenarioKind::kGateCheck:
      run_gate_check(cfg, r);
      break;
  }
  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
  r.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace holonomy

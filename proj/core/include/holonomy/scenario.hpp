// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scenario.hpp
 * @brief Declarative scenarios: config parsing, built-in generators and run reports.
 *
 * Config documents are UTF-8 `key = value` lines; `#` starts a comment. One
 * scenario per document. Reals accept plain numbers and multiples of pi written
 * as `pi`, `2pi`, `pi/3`, `2*pi/3`.
 *
 *   kind       precession | random-hamiltonian | rotating-field | frame-family |
 *              spin-monopole | measurement-loop | gate-check       (required)
 *   seed       unsigned 64-bit, default 0
 *   tolerance  radians, default 1e-6
 *   steps      time steps, default 4096
 *   grid       AxB mesh nodes, default 64x64
 *   duration   evolution time; defaults to one period where one exists
 *   dim        Hilbert space dimension
 *   theta      polar angle (precession, latitude loops)
 *   omega      precession / field rotation frequency, default 1
 *   omega0     rotating-field drive strength, default 1
 *   spin       1/2, 1, 3/2, ...
 *   family     bloch | random        (frame-family, default bloch)
 *   loop       octant | latitude     (measurement-loop, default octant)
 *   points     latitude loop points, default 4096
 *   gate       hadamard | identity | single-phase
 *   gamma      phase of the single-phase gate, default 0.3
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holonomy/gates.hpp"

namespace holonomy {

enum class ScenarioKind {
  kPrecession,
  kRandomHamiltonian,
  kRotatingField,
  kFrameFamily,
  kSpinMonopole,
  kMeasurementLoop,
  kGateCheck,
};

std::string_view to_string(ScenarioKind kind);
/// Throws ConfigError for unknown names.
ScenarioKind scenario_kind_from_string(std::string_view name);

struct ScenarioInfo {
  ScenarioKind kind;
  std::string_view description;
};
std::vector<ScenarioInfo> list_scenarios();

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::kPrecession;
  std::uint64_t seed = 0;
  double tolerance = 1e-6;
  std::size_t steps = 4096;
  std::size_t grid_a = 64;
  std::size_t grid_b = 64;
  std::optional<double> duration;
  std::optional<std::size_t> dim;
  std::optional<double> theta;
  double omega = 1.0;
  double omega0 = 1.0;
  int two_j = 1;
  std::string family = "bloch";
  std::string loop = "octant";
  std::size_t points = 4096;
  std::string gate;
  double gamma = 0.3;
};

/// Command-line values that replace config keys. An override for a key the
/// scenario kind does not use is ignored.
struct ScenarioOverrides {
  std::optional<std::size_t> steps;
  std::optional<std::string> grid;
  std::optional<double> tolerance;
};

/// Parses and validates a config document, applying overrides and defaults. Throws
/// ConfigError naming the line and key for unknown kinds or keys, keys that do not
/// apply to the kind, duplicate keys, malformed values and missing required keys.
ScenarioConfig parse_config(std::string_view text, const ScenarioOverrides& overrides = {});

/// Canonical key/value listing of every effective field of cfg.
std::vector<std::pair<std::string, std::string>> echo_config(const ScenarioConfig& cfg);

struct PhaseRow {
  std::size_t j = 0;
  double alpha = 0.0;
  double dynamical = 0.0;
  double geometric = 0.0;
};

struct Check {
  std::string name;
  bool pass = false;
};

/// Plot-ready cell data: values[i * b.size() + k] at (a[i], b[k]).
struct GridData {
  std::string name;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> values;
};

struct RunReport {
  std::vector<std::pair<std::string, std::string>> scenario;
  std::vector<PhaseRow> phases;
  std::optional<double> residual_theorem1;
  std::optional<double> residual_theorem2;
  std::vector<int> charges;
  std::optional<GateVerdict> verdict;
  /// Named scalar diagnostics, in insertion order.
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<Check> checks;
  std::vector<GridData> grids;
  std::string generator;
  std::optional<double> timing_ms;
  bool pass = false;

  std::optional<double> metric(std::string_view name) const;
};

/// Runs one built-in scenario. Deterministic in (cfg) apart from timing_ms.
RunReport run_scenario(const ScenarioConfig& cfg);

/// Exit status contract of the CLI.
enum class ExitCode : int { kPass = 0, kFail = 1, kConfigError = 2, kNumericFailure = 3 };

}  // namespace holonomy

// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

// holonomy: command-line front end for the geometric phase scenarios.
//
//   holonomy run <config-file> [--format json|csv|grid-tsv] [--out DIR]
//                [--steps N] [--grid AxB] [--tolerance X] [--no-timing]
//   holonomy list-scenarios
//   holonomy gate-check --gate hadamard --dim D [--tolerance X]
//
// Exit status: 0 pass, 1 sum-rule or verdict failure, 2 config error, 3 numeric failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/report_io.hpp"
#include "holonomy/scenario.hpp"

namespace {

using holonomy::ExitCode;

int code(ExitCode c) { return static_cast<int>(c); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw holonomy::ConfigError(0, "", "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit_report(const holonomy::RunReport& report, holonomy::ReportFormat format,
                const std::optional<std::string>& out_dir, bool timing) {
  const auto docs = holonomy::emit(report, format, {timing});
  if (format == holonomy::ReportFormat::kGridTsv && docs.empty())
    std::cerr << "holonomy: scenario produced no grid data\n";
  if (out_dir || format == holonomy::ReportFormat::kGridTsv) {
    const std::filesystem::path dir = out_dir.value_or(".");
    for (const auto& d : docs) {
      holonomy::write_atomically(dir, d);
      std::cerr << "wrote " << (dir / d.filename).string() << "\n";
    }
  } else {
    for (const auto& d : docs) std::cout << d.content;
  }
  return code(report.pass ? ExitCode::kPass : ExitCode::kFail);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric phases, curvature sum rules and geometric gate checks"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a scenario described by a config file");
  std::string config_path;
  std::string format_name = "json";
  std::optional<std::string> out_dir;
  std::optional<std::size_t> steps;
  std::optional<std::string> grid;
  std::optional<double> tolerance;
  bool no_timing = false;
  run->add_option("config", config_path, "Scenario config file (key = value lines)")->required();
  run->add_option("--format", format_name, "Output format: json, csv or grid-tsv");
  run->add_option("--out", out_dir, "Directory for output files (default: stdout)");
  run->add_option("--steps", steps, "Override the time step count");
  run->add_option("--grid", grid, "Override the mesh size, AxB");
  run->add_option("--tolerance", tolerance, "Override the pass/fail tolerance (radians)");
  run->add_flag("--no-timing", no_timing, "Write timing_ms as null for byte-reproducible json");

  app.add_subcommand("list-scenarios", "List the built-in scenario kinds");

  auto* gate = app.add_subcommand("gate-check", "Determinant test for a named gate");
  std::string gate_name;
  std::size_t gate_dim = 0;
  std::optional<double> gate_tolerance;
  gate->add_option("--gate", gate_name, "hadamard, identity or single-phase")->required();
  gate->add_option("--dim", gate_dim, "Hilbert space dimension")->required();
  gate->add_option("--tolerance", gate_tolerance, "Feasibility tolerance on arg det (radians)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : code(ExitCode::kConfigError);
  }

  try {
    if (app.got_subcommand("list-scenarios")) {
      for (const auto& info : holonomy::list_scenarios())
        std::cout << holonomy::to_string(info.kind) << "\t" << info.description << "\n";
      return 0;
    }
    if (app.got_subcommand("gate-check")) {
      std::ostringstream text;
      text.precision(17);
      text << "kind = gate-check\ngate = " << gate_name << "\ndim = " << gate_dim << "\n";
      if (gate_tolerance) text << "tolerance = " << *gate_tolerance << "\n";
      const auto report = holonomy::run_scenario(holonomy::parse_config(text.str()));
      return emit_report(report, holonomy::ReportFormat::kJson, std::nullopt, true);
    }

    const auto format = holonomy::report_format_from_string(format_name);
    const holonomy::ScenarioOverrides overrides{steps, grid, tolerance};
    const auto report =
        holonomy::run_scenario(holonomy::parse_config(read_file(config_path), overrides));
    return emit_report(report, format, out_dir, !no_timing);
  } catch (const holonomy::ConfigError& e) {
    std::cerr << "holonomy: config error: " << e.what() << "\n";
    return code(ExitCode::kConfigError);
  } catch (const holonomy::Error& e) {
    std::cerr << "holonomy: numeric failure: " << e.what() << "\n";
    return code(ExitCode::kNumericFailure);
  } catch (const std::exception& e) {
    std::cerr << "holonomy: error: " << e.what() << "\n";
    return code(ExitCode::kNumericFailure);
  }
}

// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file report_io.hpp
 * @brief Serialization of run reports.
 *
 *   json      one document, report.json. Stable top-level fields: scenario,
 *             phases[], residual_theorem1, residual_theorem2, charges[], verdict,
 *             generator, timing_ms (plus float_format, metrics, checks, grids, pass).
 *             Doubles use the shortest representation that round-trips exactly.
 *   csv       phases.csv with header `j,alpha,dynamical,geometric`.
 *   grid-tsv  one `<grid>.tsv` per grid: `#` header lines, then `a<TAB>b<TAB>value`.
 */

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "holonomy/scenario.hpp"

namespace holonomy {

enum class ReportFormat { kJson, kCsv, kGridTsv };

/// Throws ConfigError for anything other than json, csv, grid-tsv.
ReportFormat report_format_from_string(std::string_view name);

struct EmittedDocument {
  std::string filename;
  std::string content;
};

struct EmitOptions {
  /// When false timing_ms is written as null so identical configs give identical bytes.
  bool include_timing = true;
};

/// Renders the report. grid-tsv on a report without grids yields no documents.
std::vector<EmittedDocument> emit(const RunReport& report, ReportFormat format,
                                  const EmitOptions& options = {});

/// Inverse of the json emitter. Throws InvalidArgument on malformed input.
RunReport report_from_json(std::string_view text);

/// Writes content to dir/filename via a temporary file and rename.
void write_atomically(const std::filesystem::path& dir, const EmittedDocument& doc);

}  // namespace holonomy

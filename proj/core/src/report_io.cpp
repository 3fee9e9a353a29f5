// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include "holonomy/report_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "holonomy/errors.hpp"
#include "json.hpp"

namespace holonomy {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kFloatFormat = "shortest round-trip decimal (IEEE-754 binary64)";

std::string real_text(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json to_json(const RunReport& r, const EmitOptions& options) {
  Json j;
  Json scenario = Json::object();
  for (const auto& [k, v] : r.scenario) scenario[k] = v;
  j["scenario"] = std::move(scenario);

  Json phases = Json::array();
  for (const auto& p : r.phases)
    phases.push_back({{"j", p.j}, {"alpha", p.alpha}, {"dynamical", p.dynamical}, {"geometric", p.geometric}});
  j["phases"] = std::move(phases);
  j["residual_theorem1"] = optional_number(r.residual_theorem1);
  j["residual_theorem2"] = optional_number(r.residual_theorem2);
  j["charges"] = r.charges;
  if (r.verdict) {
    j["verdict"] = {{"det_re", r.verdict->det.real()},
                    {"det_im", r.verdict->det.imag()},
                    {"det_phase", r.verdict->det_phase},
                    {"geometric_feasible", r.verdict->geometric_feasible},
                    {"tolerance", r.verdict->tolerance}};
  } else {
    j["verdict"] = nullptr;
  }
  j["generator"] = r.generator;
  j["timing_ms"] = options.include_timing ? optional_number(r.timing_ms) : Json(nullptr);
  j["float_format"] = kFloatFormat;

  Json metrics = Json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = v;
  j["metrics"] = std::move(metrics);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
  j["checks"] = std::move(checks);
  Json grids = Json::array();
  for (const auto& g : r.grids)
    grids.push_back({{"name", g.name}, {"a", g.a}, {"b", g.b}, {"values", g.values}});
  j["grids"] = std::move(grids);
  j["pass"] = r.pass;
  return j;
}

std::string to_csv(const RunReport& r) {
  std::string out = "j,alpha,dynamical,geometric\n";
  for (const auto& p : r.phases) {
    out += std::to_string(p.j) + "," + real_text(p.alpha) + "," + real_text(p.dynamical) + "," +
           real_text(p.geometric) + "\n";
  }
  return out;
}

std::string to_tsv(const RunReport& r, const GridData& g) {
  std::string out;
  out += "# grid: " + g.name + "\n";
  for (const auto& [k, v] : r.scenario) out += "# " + k + " = " + v + "\n";
  out += "# cells: " + std::to_string(g.a.size()) + " x " + std::to_string(g.b.size()) + "\n";
  out += "# columns: a\tb\tvalue\n";
  for (std::size_t i = 0; i < g.a.size(); ++i) {
    for (std::size_t k = 0; k < g.b.size(); ++k) {
      out += real_text(g.a[i]) + "\t" + real_text(g.b[k]) + "\t" +
             real_text(g.values[i * g.b.size() + k]) + "\n";
    }
    out += "\n";  // blank line between rows for gnuplot's pm3d
  }
  return out;
}

std::optional<double> read_optional(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "grid-tsv") return ReportFormat::kGridTsv;
  throw ConfigError(0, "format", "unsupported format '" + std::string(name) + "'");
}

std::vector<EmittedDocument> emit(const RunReport& report, ReportFormat format,
                                  const EmitOptions& options) {
  switch (format) {
    case ReportFormat::kJson:
      return {{"report.json", to_json(report, options).dump(2) + "\n"}};
    case ReportFormat::kCsv:
      return {{"phases.csv", to_csv(report)}};
    case ReportFormat::kGridTsv: {
      std::vector<EmittedDocument> docs;
      for (const auto& g : report.grids) docs.push_back({g.name + ".tsv", to_tsv(report, g)});
      return docs;
    }
  }
  throw InvalidArgument("unsupported report format");
}

RunReport report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report json: ") + e.what());
  }
  try {
    RunReport r;
    for (const auto& [k, v] : j.at("scenario").items()) r.scenario.emplace_back(k, v.get<std::string>());
    for (const auto& p : j.at("phases"))
      r.phases.push_back({p.at("j").get<std::size_t>(), p.at("alpha").get<double>(),
                          p.at("dynamical").get<double>(), p.at("geometric").get<double>()});
    r.residual_theorem1 = read_optional(j, "residual_theorem1");
    r.residual_theorem2 = read_optional(j, "residual_theorem2");
    r.charges = j.at("charges").get<std::vector<int>>();
    if (const auto& v = j.at("verdict"); !v.is_null()) {
      GateVerdict gv;
      gv.det = Complex(v.at("det_re").get<double>(), v.at("det_im").get<double>());
      gv.det_phase = v.at("det_phase").get<double>();
      gv.geometric_feasible = v.at("geometric_feasible").get<bool>();
      gv.tolerance = v.at("tolerance").get<double>();
      r.verdict = gv;
    }
    r.generator = j.at("generator").get<std::string>();
    r.timing_ms = read_optional(j, "timing_ms");
    for (const auto& [k, v] : j.at("metrics").items()) r.metrics.emplace_back(k, v.get<double>());
    for (const auto& c : j.at("checks")) r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>()});
    for (const auto& g : j.at("grids")) {
      r.grids.push_back({g.at("name").get<std::string>(), g.at("a").get<std::vector<double>>(),
                         g.at("b").get<std::vector<double>>(), g.at("values").get<std::vector<double>>()});
    }
    r.pass = j.at("pass").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("report json is missing fields: ") + e.what());
  }
}

void write_atomically(const std::filesystem::path& dir, const EmittedDocument& doc) {
  std::filesystem::create_directories(dir);
  const auto target = dir / doc.filename;
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << doc.content;
    if (!out.flush()) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace holonomy

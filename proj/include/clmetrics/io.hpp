// Copyright 2026 The clmetrics Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "clmetrics/detail/decimal.hpp"
#include "clmetrics/error.hpp"
#include "clmetrics/learners.hpp"
#include "clmetrics/report.hpp"
#include "clmetrics/schedule.hpp"
#include "clmetrics/traditional.hpp"

namespace clmetrics {

using ordered_json = nlohmann::ordered_json;

enum class MatrixFormat { csv, json };

/// Picks the matrix format from a file extension: ".json" is JSON, anything else CSV.
inline MatrixFormat infer_matrix_format(const std::filesystem::path& path) {
  return path.extension() == ".json" ? MatrixFormat::json : MatrixFormat::csv;
}

inline MatrixFormat matrix_format_from_string(std::string_view name) {
  if (name == "csv") return MatrixFormat::csv;
  if (name == "json") return MatrixFormat::json;
  throw validation_error("unknown matrix format '" + std::string(name) + "'");
}

/// Result of ingesting a matrix file.
struct ParsedMatrix {
  AccuracyMatrix matrix;
  /// Provenance embedded in a JSON matrix (e.g. a report written by `simulate`).
  std::optional<ReportSource> source;
};

// ---------------------------------------------------------------------------
// Source (de)serialization

inline ordered_json source_to_json(const ReportSource& source) {
  ordered_json j;
  switch (source.kind) {
    case ReportSource::Kind::file:
      j["kind"] = "file";
      j["path"] = source.path;
      break;
    case ReportSource::Kind::synthetic:
      j["kind"] = "synthetic";
      j["learner"] = std::string(to_string(source.learner->kind));
      if (source.learner->plasticity) j["plasticity"] = *source.learner->plasticity;
      if (source.learner->stability) j["stability"] = *source.learner->stability;
      break;
    case ReportSource::Kind::monte_carlo:
      j["kind"] = "monte_carlo";
      j["samples_per_task"] = source.samples_per_task;
      j["seed"] = source.seed;
      break;
  }
  return j;
}

inline ReportSource source_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw validation_error("source: expected an object with a string 'kind'");
  }
  const auto kind = j["kind"].get<std::string>();
  try {
    if (kind == "file") return ReportSource::from_file(j.at("path").get<std::string>());
    if (kind == "synthetic") {
      LearnerSpec spec{learner_kind_from_string(j.at("learner").get<std::string>()), {}, {}};
      if (j.contains("plasticity")) spec.plasticity = j["plasticity"].get<double>();
      if (j.contains("stability")) spec.stability = j["stability"].get<double>();
      spec.validate();
      return ReportSource::from_learner(spec);
    }
    if (kind == "monte_carlo") {
      return ReportSource::from_monte_carlo(j.at("samples_per_task").get<std::uint64_t>(),
                                            j.at("seed").get<std::uint64_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("source: ") + e.what());
  }
  throw validation_error("source: unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Matrix parsing

/// CSV matrix: a header `# tasks=<int> classes=<int>(,<int>)*` followed by K
/// rows, row k holding k comma-separated numbers. Blank lines are ignored.
inline AccuracyMatrix parse_matrix_csv(std::istream& in, bool percent) {
  static const std::regex header_re(R"(^# tasks=([0-9]+) classes=([0-9]+(?:,[0-9]+)*)$)");
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw validation_error("csv: empty input, expected header '# tasks=<K> classes=<n>'");
  std::smatch m;
  if (!std::regex_match(line, m, header_re)) {
    throw validation_error("csv line " + std::to_string(line_no) + ": malformed header '" + line +
                           "', expected '# tasks=<int> classes=<int>(,<int>)*'");
  }
  std::size_t num_tasks = 0;
  std::vector<std::int64_t> classes;
  try {
    num_tasks = std::stoull(m[1].str());
    std::stringstream list(m[2].str());
    std::string item;
    while (std::getline(list, item, ',')) classes.push_back(std::stoll(item));
  } catch (const std::out_of_range&) {
    throw validation_error("csv line " + std::to_string(line_no) + ": header value out of range");
  }
  auto schedule = TaskSchedule::make(num_tasks, classes);

  std::vector<std::vector<double>> rows;
  while (next_line()) {
    const std::size_t k = rows.size() + 1;
    if (k > num_tasks) {
      throw validation_error("csv line " + std::to_string(line_no) + ": row " + std::to_string(k) +
                             " exceeds the declared " + std::to_string(num_tasks) + " tasks");
    }
    std::vector<double> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      auto v = detail::parse_double(cell);
      if (!v) {
        throw validation_error("csv row " + std::to_string(k) + ", column " + std::to_string(row.size() + 1) +
                               ": '" + cell + "' is not a number");
      }
      row.push_back(*v);
    }
    if (!line.empty() && line.back() == ',') {
      throw validation_error("csv row " + std::to_string(k) + ": trailing empty cell");
    }
    if (row.size() != k) {
      throw validation_error("csv row " + std::to_string(k) + ": has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(k));
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != num_tasks) {
    throw validation_error("csv: " + std::to_string(rows.size()) + " rows for " + std::to_string(num_tasks) +
                           " declared tasks (row " + std::to_string(rows.size() + 1) + " missing)");
  }
  return AccuracyMatrix::make(std::move(schedule), rows, percent);
}

/// JSON matrix: `{"classes_per_task": [...], "rows": [[...], ...]}` with an
/// optional "source" object. The number of tasks is the number of rows; a
/// single class count is broadcast. Other keys are ignored, so a JSON report
/// is itself a valid matrix file.
inline ParsedMatrix parse_matrix_json(std::istream& in, bool percent) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw validation_error(std::string("json: ") + e.what());
  }
  if (!doc.is_object()) throw validation_error("json: top level must be an object");
  if (!doc.contains("classes_per_task") || !doc["classes_per_task"].is_array()) {
    throw validation_error("json: missing array 'classes_per_task'");
  }
  if (!doc.contains("rows") || !doc["rows"].is_array()) throw validation_error("json: missing array 'rows'");

  std::vector<std::int64_t> classes;
  for (std::size_t i = 0; i < doc["classes_per_task"].size(); ++i) {
    const auto& c = doc["classes_per_task"][i];
    if (!c.is_number_integer()) {
      throw validation_error("json: classes_per_task[" + std::to_string(i) + "] is not an integer");
    }
    classes.push_back(c.get<std::int64_t>());
  }

  const auto& jrows = doc["rows"];
  std::vector<std::vector<double>> rows;
  rows.reserve(jrows.size());
  for (std::size_t k = 1; k <= jrows.size(); ++k) {
    const auto& jr = jrows[k - 1];
    if (!jr.is_array()) throw validation_error("json row " + std::to_string(k) + ": not an array");
    if (jr.size() != k) {
      throw validation_error("json row " + std::to_string(k) + ": has " + std::to_string(jr.size()) +
                             " entries, expected " + std::to_string(k));
    }
    std::vector<double> row;
    row.reserve(k);
    for (std::size_t j = 1; j <= k; ++j) {
      if (!jr[j - 1].is_number()) {
        throw validation_error("json row " + std::to_string(k) + ", column " + std::to_string(j) +
                               ": not a number");
      }
      row.push_back(jr[j - 1].get<double>());
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw validation_error("json: 'rows' is empty");

  auto schedule = TaskSchedule::make(rows.size(), classes);
  ParsedMatrix out{AccuracyMatrix::make(std::move(schedule), rows, percent), std::nullopt};
  if (doc.contains("source")) out.source = source_from_json(doc["source"]);
  return out;
}

inline ParsedMatrix parse_matrix(std::istream& in, MatrixFormat format, bool percent) {
  if (format == MatrixFormat::json) return parse_matrix_json(in, percent);
  return ParsedMatrix{parse_matrix_csv(in, percent), std::nullopt};
}

/// Reads a matrix file. The format defaults to the one implied by the extension.
inline ParsedMatrix parse_matrix_file(const std::filesystem::path& path, std::optional<MatrixFormat> format,
                                      bool percent) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open '" + path.string() + "'");
  return parse_matrix(in, format.value_or(infer_matrix_format(path)), percent);
}

// ---------------------------------------------------------------------------
// Matrix emission

inline std::string emit_matrix_csv(const AccuracyMatrix& matrix) {
  std::string out = "# tasks=" + std::to_string(matrix.num_tasks()) + " classes=";
  const auto counts = matrix.schedule().classes_per_task();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  out += '\n';
  for (task_id k = 1; k <= matrix.num_tasks(); ++k) {
    const auto row = matrix.row(k);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += detail::format_shortest(row[j]);
    }
    out += '\n';
  }
  return out;
}

inline std::string emit_matrix_json(const AccuracyMatrix& matrix, const std::optional<ReportSource>& source) {
  ordered_json doc;
  doc["classes_per_task"] = std::vector<std::int64_t>(matrix.schedule().classes_per_task().begin(),
                                                      matrix.schedule().classes_per_task().end());
  doc["rows"] = matrix.rows();
  if (source) doc["source"] = source_to_json(*source);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Reports

namespace detail {

inline ordered_json series_to_json(const MetricSeries& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : s.values) {
    if (v) {
      arr.push_back(*v);
    } else {
      arr.push_back(nullptr);
    }
  }
  return arr;
}

}  // namespace detail

/// Canonical JSON report. Key order is fixed; undefined entries are null;
/// numbers use the shortest representation that round-trips exactly.
/// The top-level "classes_per_task"/"rows"/"source" keys make the report a
/// valid JSON matrix file.
inline std::string emit_report_json(const MetricReport& report) {
  const auto& schedule = report.schedule();
  const std::size_t K = schedule.num_tasks();
  ordered_json doc;
  doc["format"] = "clmetrics-report/1";
  doc["classes_per_task"] = std::vector<std::int64_t>(schedule.classes_per_task().begin(),
                                                      schedule.classes_per_task().end());
  doc["rows"] = report.matrix.rows();
  doc["source"] = source_to_json(report.source);
  doc["flags"] = report.flags;
  doc["schedule"] = {
      {"num_tasks", K},
      {"cumulative_classes",
       std::vector<std::int64_t>(schedule.cumulative_counts().begin(), schedule.cumulative_counts().end())},
      {"uniform", schedule.is_uniform()},
  };
  ordered_json forgetting = ordered_json::array();
  if (K >= 2) {
    const auto f = forgetting_entries(report.matrix);
    for (task_id k = 1; k <= K; ++k) {
      const auto r = f.row(k);
      forgetting.push_back(std::vector<double>(r.begin(), r.end()));
    }
  }
  doc["forgetting"] = forgetting;

  ordered_json series;
  std::vector<std::size_t> ids(K);
  for (std::size_t k = 1; k <= K; ++k) ids[k - 1] = k;
  series["k"] = ids;
  for (auto name : kReportMetrics) series[std::string(name)] = detail::series_to_json(report.get(name));
  doc["series"] = series;
  return doc.dump(2) + "\n";
}

/// Parses a report produced by emit_report_json.
inline MetricReport parse_report_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw validation_error(std::string("report: ") + e.what());
  }
  std::istringstream in{std::string(text)};
  auto parsed = parse_matrix_json(in, false);
  if (!doc.contains("series") || !doc["series"].is_object()) throw validation_error("report: missing 'series'");
  const std::size_t K = parsed.matrix.num_tasks();

  std::vector<MetricSeries> series;
  for (auto name : kReportMetrics) {
    const std::string key(name);
    if (!doc["series"].contains(key)) throw validation_error("report: missing series '" + key + "'");
    const auto& arr = doc["series"][key];
    if (!arr.is_array() || arr.size() != K) {
      throw validation_error("report: series '" + key + "' must be an array of length " + std::to_string(K));
    }
    MetricSeries s{key, {}, {}};
    for (const auto& v : arr) {
      if (v.is_null()) {
        s.values.emplace_back(std::nullopt);
      } else if (v.is_number()) {
        s.values.emplace_back(v.get<double>());
      } else {
        throw validation_error("report: series '" + key + "' holds a non-numeric entry");
      }
    }
    series.push_back(std::move(s));
  }
  std::vector<std::string> report_flags;
  if (doc.contains("flags")) report_flags = doc["flags"].get<std::vector<std::string>>();
  ReportSource source = parsed.source.value_or(ReportSource::from_file(""));
  return MetricReport{std::move(parsed.matrix), std::move(series), std::move(report_flags), std::move(source)};
}

/// Plot-ready CSV: header `k,AA,AF,uRAA,uRAF,RAA,RAF,gamma,beta`, one row per
/// task, empty cells for undefined entries. With `percent`, AA/AF/RAA/RAF are
/// multiplied by 100; ratios and coefficients are unitless and stay as-is.
inline std::string emit_report_csv(const MetricReport& report, bool percent = false) {
  std::string out = "k";
  for (auto name : kReportMetrics) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (task_id k = 1; k <= report.schedule().num_tasks(); ++k) {
    out += std::to_string(k);
    for (auto name : kReportMetrics) {
      out += ',';
      const auto v = report.get(name).at(k);
      if (!v) continue;
      const bool scale = percent && (name == "AA" || name == "AF" || name == "RAA" || name == "RAF");
      out += detail::format_shortest(scale ? *v * 100.0 : *v);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Difficulty coefficients

enum class CoefficientFormat { text, csv, json };

namespace detail {

/// Shortest form, with ".0" kept on integral values so "1" reads as "1.0".
inline std::string format_coefficient(double x) {
  auto s = format_shortest(x);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace detail

/// gamma/beta series as `text` (one space-separated line per coefficient,
/// "-" for undefined), plot-ready `csv` (`k,C_k,gamma,beta`), or `json`.
inline std::string emit_coefficients(const TaskSchedule& schedule, const DifficultyCoefficients& coeffs,
                                     CoefficientFormat format) {
  const std::size_t K = schedule.num_tasks();
  std::string out;
  switch (format) {
    case CoefficientFormat::text: {
      for (const auto* s : {&coeffs.gamma, &coeffs.beta}) {
        out += s->name;
        for (task_id k = 1; k <= K; ++k) {
          out += ' ';
          const auto v = s->at(k);
          out += v ? detail::format_coefficient(*v) : "-";
        }
        out += '\n';
      }
      break;
    }
    case CoefficientFormat::csv: {
      out = "k,C_k,gamma,beta\n";
      for (task_id k = 1; k <= K; ++k) {
        out += std::to_string(k) + ',' + std::to_string(schedule.cumulative(k)) + ',';
        out += detail::format_shortest(coeffs.gamma.value(k));
        out += ',';
        if (const auto b = coeffs.beta.at(k)) out += detail::format_shortest(*b);
        out += '\n';
      }
      break;
    }
    case CoefficientFormat::json: {
      ordered_json doc;
      doc["classes_per_task"] = std::vector<std::int64_t>(schedule.classes_per_task().begin(),
                                                          schedule.classes_per_task().end());
      doc["uniform"] = schedule.is_uniform();
      doc["gamma"] = detail::series_to_json(coeffs.gamma);
      doc["beta"] = detail::series_to_json(coeffs.beta);
      out = doc.dump(2) + "\n";
      break;
    }
  }
  return out;
}

}  // namespace clmetrics

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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clmetrics/learners.hpp"
#include "clmetrics/rescaled.hpp"
#include "clmetrics/schedule.hpp"
#include "clmetrics/traditional.hpp"

namespace clmetrics {

/// Where a report's accuracy matrix came from.
struct ReportSource {
  enum class Kind { file, synthetic, monte_carlo };

  Kind kind = Kind::file;
  std::string path;                   // file
  std::optional<LearnerSpec> learner;  // synthetic
  std::uint64_t samples_per_task = 0;  // monte_carlo
  std::uint64_t seed = 0;              // monte_carlo

  static ReportSource from_file(std::string path) { return {Kind::file, std::move(path), {}, 0, 0}; }
  static ReportSource from_learner(LearnerSpec spec) { return {Kind::synthetic, {}, spec, 0, 0}; }
  static ReportSource from_monte_carlo(std::uint64_t samples, std::uint64_t seed) {
    return {Kind::monte_carlo, {}, {}, samples, seed};
  }

  friend bool operator==(const ReportSource&, const ReportSource&) = default;
};

namespace flags {
inline constexpr std::string_view percent_input = "percent_input";
inline constexpr std::string_view general_schedule_forgetting = "general_schedule_forgetting";
inline constexpr std::string_view single_task_forgetting_undefined = "single_task_forgetting_undefined";
}  // namespace flags

/// Metric names in canonical report order.
inline constexpr std::string_view kReportMetrics[] = {"AA", "AF", "uRAA", "uRAF", "RAA", "RAF", "gamma", "beta"};

/// All metric series for one accuracy matrix, plus provenance.
struct MetricReport {
  AccuracyMatrix matrix;
  /// One series per entry of kReportMetrics, in that order, each of length K.
  std::vector<MetricSeries> series;
  std::vector<std::string> flags;
  ReportSource source;

  const TaskSchedule& schedule() const noexcept { return matrix.schedule(); }

  const MetricSeries& get(std::string_view name) const {
    for (const auto& s : series) {
      if (s.name == name) return s;
    }
    throw validation_error("report has no series named '" + std::string(name) + "'");
  }

  bool has_flag(std::string_view flag) const {
    for (const auto& f : flags) {
      if (f == flag) return true;
    }
    return false;
  }

  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

inline MetricSeries undefined_series(std::string name, std::size_t K, std::string note) {
  return MetricSeries{std::move(name), std::vector<std::optional<double>>(K), std::move(note)};
}

/// Computes every metric for `matrix`. Forgetting-type series are all
/// undefined (and flagged) for single-task matrices instead of throwing.
inline MetricReport compute_report(AccuracyMatrix matrix, ReportSource source, bool percent_input = false) {
  const ScheduleBaseline baseline(matrix.schedule());
  const std::size_t K = matrix.num_tasks();

  std::vector<std::string> report_flags;
  if (percent_input) report_flags.emplace_back(flags::percent_input);
  if (!matrix.schedule().is_uniform() && K >= 2) report_flags.emplace_back(flags::general_schedule_forgetting);
  if (K < 2) report_flags.emplace_back(flags::single_task_forgetting_undefined);

  std::vector<MetricSeries> series;
  series.reserve(std::size(kReportMetrics));
  series.push_back(average_accuracy(matrix));
  series.push_back(average_forgetting(matrix));
  series.push_back(unnormalized_rescaled_accuracy(matrix, baseline));
  if (K >= 2) {
    series.push_back(unnormalized_rescaled_forgetting(matrix, baseline));
  } else {
    series.push_back(undefined_series("uRAF", K, "forgetting undefined: single-task sequence"));
  }
  series.push_back(rescaled_average_accuracy(matrix, baseline));
  if (K >= 2) {
    series.push_back(rescaled_average_forgetting(matrix, baseline));
  } else {
    series.push_back(undefined_series("RAF", K, "forgetting undefined: single-task sequence"));
  }
  series.push_back(baseline.coefficients().gamma);
  series.push_back(baseline.coefficients().beta);

  return MetricReport{std::move(matrix), std::move(series), std::move(report_flags), std::move(source)};
}

}  // namespace clmetrics

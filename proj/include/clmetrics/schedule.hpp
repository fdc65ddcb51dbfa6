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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clmetrics/error.hpp"

namespace clmetrics {

/// Task ids are 1-based throughout the public interface.
using task_id = std::size_t;

/// Sequence of K tasks, each introducing a disjoint set of new classes.
///
/// Immutable once built. `cumulative(k)` is the number of classes seen after
/// task k; it is strictly increasing because every task adds at least one class.
class TaskSchedule {
 public:
  /// Builds a schedule from per-task class counts. A single-element
  /// `classes_per_task` is broadcast to all `num_tasks` tasks.
  static TaskSchedule make(std::size_t num_tasks, std::span<const std::int64_t> classes_per_task) {
    if (num_tasks < 1) {
      throw validation_error("schedule: number of tasks must be at least 1");
    }
    if (classes_per_task.empty()) {
      throw validation_error("schedule: classes per task must not be empty");
    }
    std::vector<std::int64_t> counts;
    if (classes_per_task.size() == 1) {
      counts.assign(num_tasks, classes_per_task.front());
    } else if (classes_per_task.size() == num_tasks) {
      counts.assign(classes_per_task.begin(), classes_per_task.end());
    } else {
      throw validation_error("schedule: " + std::to_string(classes_per_task.size()) +
                             " class counts given for " + std::to_string(num_tasks) + " tasks");
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] < 1) {
        throw validation_error("schedule: task " + std::to_string(i + 1) + " has " +
                               std::to_string(counts[i]) + " classes (must be >= 1)");
      }
    }
    return TaskSchedule(std::move(counts));
  }

  static TaskSchedule make(std::size_t num_tasks, std::initializer_list<std::int64_t> classes_per_task) {
    return make(num_tasks, std::span<const std::int64_t>(classes_per_task.begin(), classes_per_task.size()));
  }

  static TaskSchedule uniform(std::size_t num_tasks, std::int64_t classes_per_task) {
    return make(num_tasks, {classes_per_task});
  }

  std::size_t num_tasks() const noexcept { return counts_.size(); }

  std::span<const std::int64_t> classes_per_task() const noexcept { return counts_; }

  std::int64_t classes_at(task_id k) const {
    check_task(k);
    return counts_[k - 1];
  }

  /// C_k, the number of classes seen after training on task k.
  std::int64_t cumulative(task_id k) const {
    check_task(k);
    return cumulative_[k - 1];
  }

  std::span<const std::int64_t> cumulative_counts() const noexcept { return cumulative_; }

  std::int64_t total_classes() const noexcept { return cumulative_.back(); }

  /// True iff every task introduces the same number of classes.
  bool is_uniform() const noexcept {
    return std::all_of(counts_.begin(), counts_.end(), [&](std::int64_t c) { return c == counts_.front(); });
  }

  /// The common per-task class count of a uniform schedule.
  std::optional<std::int64_t> uniform_classes() const noexcept {
    if (!is_uniform()) return std::nullopt;
    return counts_.front();
  }

  /// The first `k` tasks of this schedule.
  TaskSchedule prefix(std::size_t k) const {
    if (k < 1 || k > num_tasks()) {
      throw validation_error("schedule: prefix length " + std::to_string(k) + " outside [1, " +
                             std::to_string(num_tasks()) + "]");
    }
    return TaskSchedule(std::vector<std::int64_t>(counts_.begin(), counts_.begin() + static_cast<std::ptrdiff_t>(k)));
  }

  friend bool operator==(const TaskSchedule&, const TaskSchedule&) = default;

 private:
  explicit TaskSchedule(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
    cumulative_.reserve(counts_.size());
    std::int64_t total = 0;
    for (auto c : counts_) {
      total += c;
      cumulative_.push_back(total);
    }
  }

  void check_task(task_id k) const {
    if (k < 1 || k > counts_.size()) {
      throw validation_error("schedule: task id " + std::to_string(k) + " outside [1, " +
                             std::to_string(counts_.size()) + "]");
    }
  }

  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> cumulative_;
};

inline TaskSchedule make_schedule(std::size_t num_tasks, std::span<const std::int64_t> classes_per_task) {
  return TaskSchedule::make(num_tasks, classes_per_task);
}

/// Lower-triangular matrix of accuracies a(k, j): accuracy on task j after
/// training on tasks 1..k, stored as fractions in [0, 1].
class AccuracyMatrix {
 public:
  /// Validates and builds the matrix. Row k (1-based) must hold exactly k
  /// entries. With `percent`, entries are given in percent and are divided
  /// by 100 (exact decimal shift, see `percent_to_fraction`).
  static AccuracyMatrix make(TaskSchedule schedule, const std::vector<std::vector<double>>& rows,
                             bool percent = false);

  const TaskSchedule& schedule() const noexcept { return schedule_; }

  std::size_t num_tasks() const noexcept { return schedule_.num_tasks(); }

  /// a(k, j) for 1 <= j <= k <= K.
  double at(task_id k, task_id j) const {
    if (k < 1 || k > num_tasks() || j < 1 || j > k) {
      throw validation_error("accuracy matrix: entry (" + std::to_string(k) + ", " + std::to_string(j) +
                             ") is not defined (need 1 <= j <= k <= " + std::to_string(num_tasks()) + ")");
    }
    return entries_[offset(k) + (j - 1)];
  }

  /// Row k as a contiguous view of k entries.
  std::span<const double> row(task_id k) const {
    if (k < 1 || k > num_tasks()) {
      throw validation_error("accuracy matrix: row " + std::to_string(k) + " outside [1, " +
                             std::to_string(num_tasks()) + "]");
    }
    return std::span<const double>(entries_).subspan(offset(k), k);
  }

  std::vector<std::vector<double>> rows() const {
    std::vector<std::vector<double>> out;
    out.reserve(num_tasks());
    for (task_id k = 1; k <= num_tasks(); ++k) {
      auto r = row(k);
      out.emplace_back(r.begin(), r.end());
    }
    return out;
  }

  friend bool operator==(const AccuracyMatrix&, const AccuracyMatrix&) = default;

 private:
  AccuracyMatrix(TaskSchedule schedule, std::vector<double> entries)
      : schedule_(std::move(schedule)), entries_(std::move(entries)) {}

  static std::size_t offset(task_id k) noexcept { return (k - 1) * k / 2; }

  TaskSchedule schedule_;
  std::vector<double> entries_;
};

/// Per-task sequence of a metric. Entries may be explicitly undefined
/// (forgetting-type metrics at k = 1).
struct MetricSeries {
  std::string name;
  std::vector<std::optional<double>> values;
  /// Provenance or warning note; empty when the series was computed normally.
  std::string note;

  std::size_t size() const noexcept { return values.size(); }

  bool defined(task_id k) const { return values.at(k - 1).has_value(); }

  std::optional<double> at(task_id k) const {
    if (k < 1 || k > values.size()) {
      throw validation_error("series " + name + ": task id " + std::to_string(k) + " outside [1, " +
                             std::to_string(values.size()) + "]");
    }
    return values[k - 1];
  }

  /// Value at k; throws when undefined.
  double value(task_id k) const {
    auto v = at(k);
    if (!v) throw undefined_metric_error("series " + name + " is undefined at k=" + std::to_string(k));
    return *v;
  }

  /// Notes are annotations and do not take part in comparison.
  friend bool operator==(const MetricSeries& a, const MetricSeries& b) {
    return a.name == b.name && a.values == b.values;
  }
};

}  // namespace clmetrics

#include "clmetrics/detail/decimal.hpp"

namespace clmetrics {

inline AccuracyMatrix AccuracyMatrix::make(TaskSchedule schedule, const std::vector<std::vector<double>>& rows,
                                           bool percent) {
  const std::size_t K = schedule.num_tasks();
  if (rows.size() != K) {
    throw validation_error("accuracy matrix: " + std::to_string(rows.size()) + " rows given for a schedule of " +
                           std::to_string(K) + " tasks");
  }
  std::vector<double> entries;
  entries.reserve(K * (K + 1) / 2);
  for (std::size_t k = 1; k <= K; ++k) {
    const auto& r = rows[k - 1];
    if (r.size() != k) {
      throw validation_error("accuracy matrix: row " + std::to_string(k) + " has " + std::to_string(r.size()) +
                             " entries, expected " + std::to_string(k));
    }
    for (std::size_t j = 1; j <= k; ++j) {
      const double raw = r[j - 1];
      const double a = percent ? detail::percent_to_fraction(raw) : raw;
      if (!(a >= 0.0 && a <= 1.0)) {
        throw validation_error("accuracy matrix: entry at row " + std::to_string(k) + ", column " +
                               std::to_string(j) + " is " + detail::format_shortest(raw) +
                               (percent ? "%" : "") + ", outside [0, 1]" + (percent ? " after conversion" : ""));
      }
      entries.push_back(a);
    }
  }
  return AccuracyMatrix(std::move(schedule), std::move(entries));
}

inline AccuracyMatrix make_accuracy_matrix(TaskSchedule schedule, const std::vector<std::vector<double>>& rows,
                                           bool percent = false) {
  return AccuracyMatrix::make(std::move(schedule), rows, percent);
}

}  // namespace clmetrics

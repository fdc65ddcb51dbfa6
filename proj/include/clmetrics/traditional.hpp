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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clmetrics/error.hpp"
#include "clmetrics/schedule.hpp"

namespace clmetrics {

/// Strictly lower-triangular matrix of forgetting entries f(k, j), j < k.
///
/// f(k, j) is the best accuracy on task j before task k minus the current
/// accuracy on it. Negative entries (backward transfer) are kept as-is.
class ForgettingMatrix {
 public:
  ForgettingMatrix(std::size_t num_tasks, std::vector<double> entries)
      : num_tasks_(num_tasks), entries_(std::move(entries)) {}

  std::size_t num_tasks() const noexcept { return num_tasks_; }

  double at(task_id k, task_id j) const {
    if (k < 2 || k > num_tasks_ || j < 1 || j >= k) {
      throw validation_error("forgetting matrix: entry (" + std::to_string(k) + ", " + std::to_string(j) +
                             ") is not defined (need 1 <= j < k <= " + std::to_string(num_tasks_) + ")");
    }
    return entries_[offset(k) + (j - 1)];
  }

  /// The k-1 entries f(k, 1..k-1); empty for k = 1.
  std::span<const double> row(task_id k) const {
    if (k < 1 || k > num_tasks_) {
      throw validation_error("forgetting matrix: row " + std::to_string(k) + " outside [1, " +
                             std::to_string(num_tasks_) + "]");
    }
    if (k == 1) return {};
    return std::span<const double>(entries_).subspan(offset(k), k - 1);
  }

 private:
  static std::size_t offset(task_id k) noexcept { return (k - 2) * (k - 1) / 2; }

  std::size_t num_tasks_;
  std::vector<double> entries_;
};

/// AA_k = (1/k) * sum_{j<=k} a(k, j), defined at every k.
inline MetricSeries average_accuracy(const AccuracyMatrix& matrix) {
  MetricSeries out{"AA", {}, {}};
  out.values.reserve(matrix.num_tasks());
  for (task_id k = 1; k <= matrix.num_tasks(); ++k) {
    double sum = 0.0;
    for (double a : matrix.row(k)) sum += a;
    out.values.emplace_back(sum / static_cast<double>(k));
  }
  return out;
}

/// f(k, j) = max_{l in [j, k-1]} a(l, j) - a(k, j) for every j < k.
/// Throws undefined_metric_error when the matrix has a single task.
inline ForgettingMatrix forgetting_entries(const AccuracyMatrix& matrix) {
  const std::size_t K = matrix.num_tasks();
  if (K < 2) {
    throw undefined_metric_error("forgetting is undefined for a single-task sequence (K = 1)");
  }
  std::vector<double> entries;
  entries.reserve((K - 1) * K / 2);
  // best[j-1] holds max_{l in [j, k-1]} a(l, j) while sweeping rows.
  std::vector<double> best(K, 0.0);
  for (task_id k = 1; k <= K; ++k) {
    auto row = matrix.row(k);
    for (task_id j = 1; j < k; ++j) entries.push_back(best[j - 1] - row[j - 1]);
    for (task_id j = 1; j <= k; ++j) best[j - 1] = (j == k) ? row[j - 1] : std::max(best[j - 1], row[j - 1]);
  }
  return ForgettingMatrix(K, std::move(entries));
}

/// AF_k = (1/(k-1)) * sum_{j<k} f(k, j) for k >= 2; undefined at k = 1.
/// For K = 1 every entry is undefined and the series carries a warning note.
inline MetricSeries average_forgetting(const AccuracyMatrix& matrix) {
  const std::size_t K = matrix.num_tasks();
  MetricSeries out{"AF", std::vector<std::optional<double>>(K), {}};
  if (K < 2) {
    out.note = "forgetting undefined: single-task sequence";
    return out;
  }
  const auto f = forgetting_entries(matrix);
  for (task_id k = 2; k <= K; ++k) {
    double sum = 0.0;
    for (double v : f.row(k)) sum += v;
    out.values[k - 1] = sum / static_cast<double>(k - 1);
  }
  return out;
}

}  // namespace clmetrics

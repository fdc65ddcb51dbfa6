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
#include <random>
#include <string>
#include <vector>

#include "clmetrics/error.hpp"
#include "clmetrics/harmonic.hpp"
#include "clmetrics/schedule.hpp"
#include "clmetrics/traditional.hpp"

namespace clmetrics {

/// Expected accuracy matrix of the uniform random classifier: after task k it
/// guesses among all C_k classes seen so far, so a(k, j) = 1/C_k.
inline AccuracyMatrix rand_accuracy_matrix(const TaskSchedule& schedule) {
  std::vector<std::vector<double>> rows;
  rows.reserve(schedule.num_tasks());
  for (task_id k = 1; k <= schedule.num_tasks(); ++k) {
    rows.emplace_back(k, 1.0 / static_cast<double>(schedule.cumulative(k)));
  }
  return AccuracyMatrix::make(schedule, rows);
}

/// f(k, j) of the random classifier: 1/C_j - 1/C_k. The historical max is
/// attained at l = j because each epoch uses its own classifier size.
inline double rand_forgetting_entry(const TaskSchedule& schedule, task_id k, task_id j) {
  if (j < 1 || j >= k) {
    throw undefined_metric_error("random forgetting entry (" + std::to_string(k) + ", " + std::to_string(j) +
                                 ") requires 1 <= j < k");
  }
  return 1.0 / static_cast<double>(schedule.cumulative(j)) - 1.0 / static_cast<double>(schedule.cumulative(k));
}

/// The harmonic closed form of AF_k(Rand) holds only when every task adds the
/// same number of classes.
inline bool rand_forgetting_closed_form_applies(const TaskSchedule& schedule) noexcept {
  return schedule.is_uniform();
}

namespace detail {

inline void check_forgetting_task(const TaskSchedule& schedule, task_id k) {
  if (k < 2) {
    throw undefined_metric_error("random-classifier forgetting requires k >= 2 (got k=" + std::to_string(k) + ")");
  }
  if (k > schedule.num_tasks()) {
    throw validation_error("task id " + std::to_string(k) + " exceeds schedule length " +
                           std::to_string(schedule.num_tasks()));
  }
}

}  // namespace detail

/// (1/C_k) * (k * H_{k-1} / (k-1) - 1). Uniform schedules only.
inline double rand_average_forgetting_closed_form(const TaskSchedule& schedule, task_id k,
                                                  const HarmonicTable& harmonics) {
  detail::check_forgetting_task(schedule, k);
  if (!rand_forgetting_closed_form_applies(schedule)) {
    throw validation_error("closed-form random forgetting requires a uniform schedule");
  }
  const double kd = static_cast<double>(k);
  return (kd * harmonics(k - 1) / (kd - 1.0) - 1.0) / static_cast<double>(schedule.cumulative(k));
}

inline double rand_average_forgetting_closed_form(const TaskSchedule& schedule, task_id k) {
  detail::check_forgetting_task(schedule, k);
  return rand_average_forgetting_closed_form(schedule, k, HarmonicTable(k));
}

/// AF(Rand) series computed by definition: build the random-classifier matrix
/// and run the ordinary average-forgetting computation over it.
inline MetricSeries rand_average_forgetting_series(const TaskSchedule& schedule) {
  auto series = average_forgetting(rand_accuracy_matrix(schedule));
  series.name = "AF_rand";
  return series;
}

/// AF_k(Rand_{C_k}). Uniform schedules use the harmonic closed form; other
/// schedules fall back to the definitional computation.
inline double rand_average_forgetting(const TaskSchedule& schedule, task_id k) {
  detail::check_forgetting_task(schedule, k);
  if (rand_forgetting_closed_form_applies(schedule)) {
    return rand_average_forgetting_closed_form(schedule, k);
  }
  return average_forgetting(rand_accuracy_matrix(schedule.prefix(k))).value(k);
}

/// Empirical accuracy matrix of a random guesser. For each cell (k, j) it
/// draws `samples_per_task` test labels uniformly from task j's classes and a
/// guess uniformly from all C_k classes; the cell is the hit rate.
/// Deterministic for a fixed seed; the generator is local to the call.
inline AccuracyMatrix monte_carlo_random_classifier(const TaskSchedule& schedule, std::uint64_t samples_per_task,
                                                    std::uint64_t seed) {
  if (samples_per_task < 1) throw validation_error("Monte-Carlo: samples per task must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> rows;
  rows.reserve(schedule.num_tasks());
  for (task_id k = 1; k <= schedule.num_tasks(); ++k) {
    std::uniform_int_distribution<std::int64_t> guess(0, schedule.cumulative(k) - 1);
    std::vector<double> row;
    row.reserve(k);
    for (task_id j = 1; j <= k; ++j) {
      const std::int64_t first = schedule.cumulative(j) - schedule.classes_at(j);
      std::uniform_int_distribution<std::int64_t> truth(first, schedule.cumulative(j) - 1);
      std::uint64_t hits = 0;
      for (std::uint64_t s = 0; s < samples_per_task; ++s) {
        const auto label = truth(rng);
        const auto predicted = guess(rng);
        if (label == predicted) ++hits;
      }
      row.push_back(static_cast<double>(hits) / static_cast<double>(samples_per_task));
    }
    rows.push_back(std::move(row));
  }
  return AccuracyMatrix::make(schedule, rows);
}

}  // namespace clmetrics

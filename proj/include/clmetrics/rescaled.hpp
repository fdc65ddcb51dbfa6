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
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "clmetrics/error.hpp"
#include "clmetrics/harmonic.hpp"
#include "clmetrics/random_baseline.hpp"
#include "clmetrics/schedule.hpp"
#include "clmetrics/traditional.hpp"

namespace clmetrics {

/// Absolute tolerance for agreement between definitional and closed-form routes.
inline constexpr double kPathTolerance = 1e-12;

/// Largest uRAA / uRAF attainable by any classifier at any task.
///
/// uRAA peaks for the perfect classifier at the last task (C_K). uRAF peaks
/// for the worst classifier (every f = 1), i.e. at max_k 1/AF_k(Rand); on a
/// uniform schedule that is C_K (K-1) / (K (H_K - 1)).
struct Normalizers {
  double max_uraa = 0.0;
  /// Absent for single-task schedules, where forgetting is undefined.
  std::optional<double> max_uraf;
  /// True when max_uraf came from the harmonic closed form.
  bool uraf_closed_form = false;
};

/// Task-difficulty coefficients: RAA_k = gamma_k AA_k and RAF_k = beta_k AF_k.
struct DifficultyCoefficients {
  MetricSeries gamma;
  MetricSeries beta;
};

/// Everything the rescaled metrics need from the schedule alone: the random
/// classifier's AA/AF, the normalizers and the coefficients. Built once per
/// schedule, read-only afterwards.
class ScheduleBaseline {
 public:
  explicit ScheduleBaseline(TaskSchedule schedule)
      : schedule_(std::move(schedule)), harmonics_(schedule_.num_tasks()) {
    const std::size_t K = schedule_.num_tasks();
    const auto rand = rand_accuracy_matrix(schedule_);
    aa_rand_ = average_accuracy(rand);
    aa_rand_.name = "AA_rand";
    af_rand_ = average_forgetting(rand);
    af_rand_.name = "AF_rand";

    const double CK = static_cast<double>(schedule_.total_classes());
    normalizers_.max_uraa = CK;

    coefficients_.gamma = MetricSeries{"gamma", {}, {}};
    coefficients_.gamma.values.reserve(K);
    for (task_id k = 1; k <= K; ++k) {
      coefficients_.gamma.values.emplace_back(static_cast<double>(schedule_.cumulative(k)) / CK);
    }

    coefficients_.beta = MetricSeries{"beta", std::vector<std::optional<double>>(K), {}};
    if (K < 2) {
      coefficients_.beta.note = "beta undefined: single-task sequence";
      return;
    }

    // Worst classifier: AF_k = 1, so uRAF_k = 1 / AF_k(Rand).
    std::vector<double> worst_uraf(K + 1, 0.0);
    double numeric_max = 0.0;
    for (task_id k = 2; k <= K; ++k) {
      worst_uraf[k] = 1.0 / af_rand_.value(k);
      numeric_max = std::max(numeric_max, worst_uraf[k]);
    }

    if (schedule_.is_uniform()) {
      const double Kd = static_cast<double>(K);
      const double HK = harmonics_(K);
      const double closed = CK * (Kd - 1.0) / (Kd * (HK - 1.0));
      if (std::fabs(closed - numeric_max) > kPathTolerance * closed) {
        throw consistency_error("max uRAF: closed form " + detail::format_shortest(closed) +
                                " disagrees with numeric maximum " + detail::format_shortest(numeric_max));
      }
      normalizers_.max_uraf = closed;
      normalizers_.uraf_closed_form = true;
      for (task_id k = 2; k <= K; ++k) {
        const double kd = static_cast<double>(k);
        const double beta = ((HK - 1.0) * (kd - 1.0)) / ((harmonics_(k) - 1.0) * (Kd - 1.0));
        const double numeric = worst_uraf[k] / numeric_max;
        if (std::fabs(beta - numeric) > kPathTolerance) {
          throw consistency_error("beta_" + std::to_string(k) + ": closed form " + detail::format_shortest(beta) +
                                  " disagrees with normalized ratio " + detail::format_shortest(numeric));
        }
        coefficients_.beta.values[k - 1] = beta;
      }
    } else {
      normalizers_.max_uraf = numeric_max;
      for (task_id k = 2; k <= K; ++k) coefficients_.beta.values[k - 1] = worst_uraf[k] / numeric_max;
      coefficients_.beta.note = "general-schedule: beta from numeric uRAF normalization";
    }
  }

  const TaskSchedule& schedule() const noexcept { return schedule_; }
  const HarmonicTable& harmonics() const noexcept { return harmonics_; }
  const MetricSeries& rand_average_accuracy() const noexcept { return aa_rand_; }
  const MetricSeries& rand_average_forgetting() const noexcept { return af_rand_; }
  const Normalizers& normalizers() const noexcept { return normalizers_; }
  const DifficultyCoefficients& coefficients() const noexcept { return coefficients_; }

  /// False when RAF had to fall back to numeric normalization.
  bool uniform_forgetting_path() const noexcept { return schedule_.is_uniform(); }

 private:
  TaskSchedule schedule_;
  HarmonicTable harmonics_;
  MetricSeries aa_rand_;
  MetricSeries af_rand_;
  Normalizers normalizers_;
  DifficultyCoefficients coefficients_;
};

inline Normalizers normalizers(const TaskSchedule& schedule) { return ScheduleBaseline(schedule).normalizers(); }

/// gamma_k = C_k / C_K; beta_k = (H_K - 1)(k - 1) / ((H_k - 1)(K - 1)) for k >= 2.
/// On non-uniform schedules beta is the numerically normalized ratio and the
/// series carries a "general-schedule" note.
inline DifficultyCoefficients difficulty_coefficients(const TaskSchedule& schedule) {
  return ScheduleBaseline(schedule).coefficients();
}

namespace detail {

inline void check_same_schedule(const AccuracyMatrix& matrix, const ScheduleBaseline& baseline) {
  if (!(matrix.schedule() == baseline.schedule())) {
    throw validation_error("baseline was built for a different schedule than the matrix");
  }
}

inline void require_forgetting(const AccuracyMatrix& matrix, const char* what) {
  if (matrix.num_tasks() < 2) {
    throw undefined_metric_error(std::string(what) + " is undefined for a single-task sequence (K = 1)");
  }
}

}  // namespace detail

/// uRAA_k = AA_k / AA_k(Rand) (= C_k AA_k).
inline MetricSeries unnormalized_rescaled_accuracy(const AccuracyMatrix& matrix, const ScheduleBaseline& baseline) {
  detail::check_same_schedule(matrix, baseline);
  const auto aa = average_accuracy(matrix);
  MetricSeries out{"uRAA", {}, {}};
  out.values.reserve(matrix.num_tasks());
  for (task_id k = 1; k <= matrix.num_tasks(); ++k) {
    out.values.emplace_back(aa.value(k) / baseline.rand_average_accuracy().value(k));
  }
  return out;
}

inline MetricSeries unnormalized_rescaled_accuracy(const AccuracyMatrix& matrix) {
  return unnormalized_rescaled_accuracy(matrix, ScheduleBaseline(matrix.schedule()));
}

/// uRAF_k = AF_k / AF_k(Rand) for k >= 2; undefined at k = 1.
inline MetricSeries unnormalized_rescaled_forgetting(const AccuracyMatrix& matrix, const ScheduleBaseline& baseline) {
  detail::require_forgetting(matrix, "uRAF");
  detail::check_same_schedule(matrix, baseline);
  const auto af = average_forgetting(matrix);
  MetricSeries out{"uRAF", std::vector<std::optional<double>>(matrix.num_tasks()), {}};
  for (task_id k = 2; k <= matrix.num_tasks(); ++k) {
    out.values[k - 1] = af.value(k) / baseline.rand_average_forgetting().value(k);
  }
  return out;
}

inline MetricSeries unnormalized_rescaled_forgetting(const AccuracyMatrix& matrix) {
  detail::require_forgetting(matrix, "uRAF");
  return unnormalized_rescaled_forgetting(matrix, ScheduleBaseline(matrix.schedule()));
}

/// RAA_k = uRAA_k / max uRAA, checked against gamma_k AA_k. Returns the
/// definitional value; a disagreement beyond kPathTolerance throws
/// consistency_error.
inline MetricSeries rescaled_average_accuracy(const AccuracyMatrix& matrix, const ScheduleBaseline& baseline) {
  const auto uraa = unnormalized_rescaled_accuracy(matrix, baseline);
  const auto aa = average_accuracy(matrix);
  const auto& gamma = baseline.coefficients().gamma;
  MetricSeries out{"RAA", {}, {}};
  out.values.reserve(matrix.num_tasks());
  for (task_id k = 1; k <= matrix.num_tasks(); ++k) {
    const double definitional = uraa.value(k) / baseline.normalizers().max_uraa;
    const double closed = gamma.value(k) * aa.value(k);
    if (!(std::fabs(definitional - closed) <= kPathTolerance)) {
      throw consistency_error("RAA_" + std::to_string(k) + ": definitional " + detail::format_shortest(definitional) +
                              " vs gamma*AA " + detail::format_shortest(closed));
    }
    out.values.emplace_back(definitional);
  }
  return out;
}

inline MetricSeries rescaled_average_accuracy(const AccuracyMatrix& matrix) {
  return rescaled_average_accuracy(matrix, ScheduleBaseline(matrix.schedule()));
}

/// RAF_k = uRAF_k / max uRAF for k >= 2, checked against beta_k AF_k.
/// On non-uniform schedules the normalizer is numeric and the series is
/// noted as a general-schedule result.
inline MetricSeries rescaled_average_forgetting(const AccuracyMatrix& matrix, const ScheduleBaseline& baseline) {
  detail::require_forgetting(matrix, "RAF");
  const auto uraf = unnormalized_rescaled_forgetting(matrix, baseline);
  const auto af = average_forgetting(matrix);
  const auto& beta = baseline.coefficients().beta;
  const double max_uraf = *baseline.normalizers().max_uraf;
  MetricSeries out{"RAF", std::vector<std::optional<double>>(matrix.num_tasks()), {}};
  if (!baseline.uniform_forgetting_path()) out.note = "general-schedule: numeric uRAF normalization";
  for (task_id k = 2; k <= matrix.num_tasks(); ++k) {
    const double definitional = uraf.value(k) / max_uraf;
    const double closed = beta.value(k) * af.value(k);
    if (!(std::fabs(definitional - closed) <= kPathTolerance)) {
      throw consistency_error("RAF_" + std::to_string(k) + ": definitional " + detail::format_shortest(definitional) +
                              " vs beta*AF " + detail::format_shortest(closed));
    }
    out.values[k - 1] = definitional;
  }
  return out;
}

inline MetricSeries rescaled_average_forgetting(const AccuracyMatrix& matrix) {
  detail::require_forgetting(matrix, "RAF");
  return rescaled_average_forgetting(matrix, ScheduleBaseline(matrix.schedule()));
}

}  // namespace clmetrics

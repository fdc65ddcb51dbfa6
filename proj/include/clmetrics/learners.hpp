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
#include <string_view>
#include <vector>

#include "clmetrics/error.hpp"
#include "clmetrics/random_baseline.hpp"
#include "clmetrics/schedule.hpp"

namespace clmetrics {

enum class LearnerKind { random, perfect, worst, parametric };

inline std::string_view to_string(LearnerKind kind) noexcept {
  switch (kind) {
    case LearnerKind::random: return "random";
    case LearnerKind::perfect: return "perfect";
    case LearnerKind::worst: return "worst";
    case LearnerKind::parametric: return "parametric";
  }
  return "unknown";
}

inline LearnerKind learner_kind_from_string(std::string_view name) {
  if (name == "random") return LearnerKind::random;
  if (name == "perfect") return LearnerKind::perfect;
  if (name == "worst") return LearnerKind::worst;
  if (name == "parametric") return LearnerKind::parametric;
  throw validation_error("unknown learner kind '" + std::string(name) + "'");
}

/// Analytic learner model used to generate accuracy matrices.
///
/// `plasticity` is the accuracy reached on the task just trained; `stability`
/// is the per-task geometric retention of the above-chance margin. Both are
/// required for the parametric kind and forbidden for the others.
struct LearnerSpec {
  LearnerKind kind = LearnerKind::random;
  std::optional<double> plasticity;
  std::optional<double> stability;

  static LearnerSpec random() { return {LearnerKind::random, {}, {}}; }
  static LearnerSpec perfect() { return {LearnerKind::perfect, {}, {}}; }
  static LearnerSpec worst() { return {LearnerKind::worst, {}, {}}; }
  static LearnerSpec parametric(double plasticity, double stability) {
    return {LearnerKind::parametric, plasticity, stability};
  }

  void validate() const {
    if (kind == LearnerKind::parametric) {
      if (!plasticity || !stability) {
        throw validation_error("parametric learner requires both plasticity and stability");
      }
      if (!(*plasticity >= 0.0 && *plasticity <= 1.0)) {
        throw validation_error("plasticity " + detail::format_shortest(*plasticity) + " outside [0, 1]");
      }
      if (!(*stability >= 0.0 && *stability <= 1.0)) {
        throw validation_error("stability " + detail::format_shortest(*stability) + " outside [0, 1]");
      }
    } else if (plasticity || stability) {
      throw validation_error(std::string(to_string(kind)) + " learner takes no plasticity/stability parameters");
    }
  }

  friend bool operator==(const LearnerSpec&, const LearnerSpec&) = default;
};

/// Accuracy matrix of a synthetic learner.
///
///   random      a(k, j) = 1/C_k
///   perfect     a(k, j) = 1
///   worst       a(j, j) = 1, a(k, j) = 0 for k > j
///   parametric  a(k, k) = p,
///               a(k, j) = 1/C_k + (p - 1/C_j) s^(k-j) for j < k, clipped to [0, 1]
inline AccuracyMatrix generate(const LearnerSpec& spec, const TaskSchedule& schedule) {
  spec.validate();
  if (spec.kind == LearnerKind::random) return rand_accuracy_matrix(schedule);

  const std::size_t K = schedule.num_tasks();
  std::vector<std::vector<double>> rows(K);
  for (task_id k = 1; k <= K; ++k) {
    auto& row = rows[k - 1];
    row.resize(k);
    for (task_id j = 1; j <= k; ++j) {
      double a = 0.0;
      switch (spec.kind) {
        case LearnerKind::perfect:
          a = 1.0;
          break;
        case LearnerKind::worst:
          a = (j == k) ? 1.0 : 0.0;
          break;
        case LearnerKind::parametric: {
          const double p = *spec.plasticity;
          if (j == k) {
            a = p;
          } else {
            const double chance_now = 1.0 / static_cast<double>(schedule.cumulative(k));
            const double chance_then = 1.0 / static_cast<double>(schedule.cumulative(j));
            a = chance_now + (p - chance_then) * std::pow(*spec.stability, static_cast<double>(k - j));
            a = std::clamp(a, 0.0, 1.0);
          }
          break;
        }
        case LearnerKind::random:
          break;
      }
      row[j - 1] = a;
    }
  }
  return AccuracyMatrix::make(schedule, rows);
}

}  // namespace clmetrics

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

#include <string>

#include "clmetrics/detail/decimal.hpp"
#include "clmetrics/learners.hpp"
#include "clmetrics/traditional.hpp"

namespace clmetrics {

/// Accuracy and forgetting tables (in percent) of the random classifier on
/// five tasks of two classes each, computed from the synthetic learner and
/// printed with the customary short precision:
///   accuracies      3 significant digits, rounded      (16.7)
///   forgetting      3 significant digits, truncated    (4.16, 6.66)
///   AF column       4 significant digits, rounded      (18.06)
/// `which` is 1 (accuracy) or 2 (forgetting).
inline std::string random_classifier_table(int which) {
  constexpr std::size_t K = 5;
  const auto matrix = generate(LearnerSpec::random(), TaskSchedule::uniform(K, 2));
  using detail::digit_rounding;
  using detail::format_significant;

  std::string out;
  if (which == 1) {
    const auto aa = average_accuracy(matrix);
    out += "# a_kj (%), random classifier, 5 tasks x 2 classes; columns T1..T5, AA_k\n";
    for (task_id k = 1; k <= K; ++k) {
      for (task_id j = 1; j <= K; ++j) {
        out += j <= k ? format_significant(100.0 * matrix.at(k, j), 3, digit_rounding::nearest) : "-";
        out += ' ';
      }
      out += format_significant(100.0 * aa.value(k), 3, digit_rounding::nearest);
      out += '\n';
    }
  } else if (which == 2) {
    const auto f = forgetting_entries(matrix);
    const auto af = average_forgetting(matrix);
    out += "# f_kj (%), random classifier, 5 tasks x 2 classes; columns T1..T5, AF_k\n";
    for (task_id k = 1; k <= K; ++k) {
      for (task_id j = 1; j <= K; ++j) {
        out += j < k ? format_significant(100.0 * f.at(k, j), 3, digit_rounding::truncate) : "-";
        out += ' ';
      }
      const auto v = af.at(k);
      out += v ? format_significant(100.0 * *v, 4, digit_rounding::nearest) : "-";
      out += '\n';
    }
  } else {
    throw validation_error("table: --which must be 1 or 2");
  }
  return out;
}

}  // namespace clmetrics

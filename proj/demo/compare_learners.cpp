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

// Compares traditional and rescaled metrics for a few synthetic learners.

#include <cstdio>
#include <string>

#include "clmetrics/clmetrics.hpp"

int main() {
  using namespace clmetrics;
  const auto schedule = TaskSchedule::uniform(10, 2);
  const ScheduleBaseline baseline(schedule);
  const auto K = schedule.num_tasks();
  const task_id mid = K / 2;

  std::printf("Metrics after task %zu of %zu\n", mid, K);
  std::printf("%-24s %8s %8s %8s %8s\n", "learner", "AA", "AF", "RAA", "RAF");
  for (const auto& spec : {LearnerSpec::random(), LearnerSpec::perfect(), LearnerSpec::worst(),
                           LearnerSpec::parametric(0.9, 0.7), LearnerSpec::parametric(0.6, 0.95)}) {
    const auto m = generate(spec, schedule);
    std::string label(to_string(spec.kind));
    if (spec.kind == LearnerKind::parametric) {
      label += " p=" + detail::format_shortest(*spec.plasticity) + " s=" + detail::format_shortest(*spec.stability);
    }
    std::printf("%-24s %8.4f %8.4f %8.4f %8.4f\n", label.c_str(), average_accuracy(m).value(mid),
                average_forgetting(m).value(mid), rescaled_average_accuracy(m, baseline).value(mid),
                rescaled_average_forgetting(m, baseline).value(mid));
  }

  const auto& c = baseline.coefficients();
  std::printf("\n%4s %8s %8s\n", "k", "gamma", "beta");
  for (task_id k = 1; k <= K; ++k) {
    std::printf("%4zu %8.4f ", k, c.gamma.value(k));
    if (c.beta.defined(k)) {
      std::printf("%8.4f\n", c.beta.value(k));
    } else {
      std::printf("%8s\n", "-");
    }
  }
  return 0;
}

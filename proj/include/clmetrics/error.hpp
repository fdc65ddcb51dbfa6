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

#include <stdexcept>
#include <string>

namespace clmetrics {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input data (schedules, matrices, files, learner specs).
class validation_error : public error {
 public:
  using error::error;
};

/// A metric was requested where it has no definition (e.g. forgetting with a single task).
class undefined_metric_error : public error {
 public:
  using error::error;
};

/// Two independent computation routes disagreed beyond tolerance. Always a bug.
class consistency_error : public error {
 public:
  using error::error;
};

}  // namespace clmetrics

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

#include <cstddef>
#include <string>
#include <vector>

#include "clmetrics/error.hpp"

namespace clmetrics {

/// Cached harmonic numbers H_1..H_n, built once by compensated forward
/// summation. Immutable afterwards.
class HarmonicTable {
 public:
  explicit HarmonicTable(std::size_t n) {
    if (n < 1) throw validation_error("harmonic table: size must be at least 1");
    values_.reserve(n);
    // Neumaier summation keeps H_k within a few ulps of the exact rational.
    double sum = 0.0;
    double carry = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      const double term = 1.0 / static_cast<double>(i);
      const double t = sum + term;
      if (sum >= term) {
        carry += (sum - t) + term;
      } else {
        carry += (term - t) + sum;
      }
      sum = t;
      values_.push_back(sum + carry);
    }
  }

  std::size_t size() const noexcept { return values_.size(); }

  /// H_k for 1 <= k <= size().
  double operator()(std::size_t k) const {
    if (k < 1 || k > values_.size()) {
      throw validation_error("harmonic number H_" + std::to_string(k) + " outside table [1, " +
                             std::to_string(values_.size()) + "]");
    }
    return values_[k - 1];
  }

 private:
  std::vector<double> values_;
};

/// H_k = sum_{i=1}^{k} 1/i.
inline double harmonic(std::size_t k) {
  if (k < 1) throw validation_error("harmonic number requires k >= 1");
  return HarmonicTable(k)(k);
}

}  // namespace clmetrics

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
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

namespace clmetrics::detail {

/// Shortest decimal string that parses back to exactly `x`.
inline std::string format_shortest(double x) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

/// Strict full-string parse of a decimal number; surrounding blanks allowed.
inline std::optional<double> parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

/// Divides a percent value by 100 as a decimal shift: the result is the double
/// nearest to the decimal number obtained by moving the point of the shortest
/// representation of `percent` two places left. "16.7" and "0.167" therefore
/// land on the same double.
inline double percent_to_fraction(double percent) {
  if (!std::isfinite(percent) || percent == 0.0) return percent / 100.0;
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), percent, std::chars_format::scientific);
  std::string_view repr(buf.data(), static_cast<std::size_t>(res.ptr - buf.data()));
  const auto e = repr.find('e');
  int exponent = 0;
  std::from_chars(repr.data() + e + 1 + (repr[e + 1] == '+' ? 1 : 0), repr.data() + repr.size(), exponent);
  std::string shifted(repr.substr(0, e));
  shifted += 'e';
  shifted += std::to_string(exponent - 2);
  double out = 0.0;
  std::from_chars(shifted.data(), shifted.data() + shifted.size(), out);
  return out;
}

enum class digit_rounding { nearest, truncate };

/// Formats `x` with `significant` significant digits and strips trailing
/// zeros ("25.0" -> "25"). Truncation first snaps to 10 significant digits so
/// that 14.999999999999998 truncates to "15", not "14.9".
inline std::string format_significant(double x, int significant, digit_rounding mode) {
  if (x == 0.0) return "0";
  const int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(x))));
  const int decimals = std::max(0, significant - 1 - magnitude);
  std::array<char, 128> buf{};
  if (mode == digit_rounding::nearest) {
    std::snprintf(buf.data(), buf.size(), "%.*f", decimals, x);
  } else {
    std::snprintf(buf.data(), buf.size(), "%.9e", x);
    const double snapped = std::strtod(buf.data(), nullptr);
    std::snprintf(buf.data(), buf.size(), "%.*f", decimals + 3, snapped);
    std::string s(buf.data());
    const auto dot = s.find('.');
    s = decimals == 0 ? s.substr(0, dot) : s.substr(0, dot + 1 + static_cast<std::size_t>(decimals));
    std::snprintf(buf.data(), buf.size(), "%s", s.c_str());
  }
  std::string s(buf.data());
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

}  // namespace clmetrics::detail

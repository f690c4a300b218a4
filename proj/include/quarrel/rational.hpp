// Copyright 2026 The Quarrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include <boost/rational.hpp>

namespace quarrel {

/// Exact value type for weights, quotas and power values. Power denominators
/// are 2^n or n!, both of which fit in 64 bits for n <= 20.
using Rational = boost::rational<std::int64_t>;

/// "p/q" with q > 0, always including the denominator.
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

/// Decimal rendering rounded to 12 significant digits.
inline std::string to_decimal_string(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", to_double(r));
  return buf;
}

}  // namespace quarrel

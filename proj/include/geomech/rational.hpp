// Copyright 2026 The geomech Authors
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

// Exact rational arithmetic for selection probabilities and ratios.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace geomech {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) {
  return r.convert_to<double>();
}

/// 1 / 2^exponent.
inline Rational inverse_power_of_two(unsigned exponent) {
  BigInt denominator = 1;
  denominator <<= exponent;
  return Rational(BigInt(1), denominator);
}

/// Parses "p/q" or "p". Throws std::runtime_error on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace geomech

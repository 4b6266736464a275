// Copyright 2026 The Authors.
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

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mirauct {

// All welfare, bid and payment arithmetic is exact. Truthfulness and
// monotonicity checks compare utilities for equality/ordering, so no
// floating point is allowed anywhere on the welfare path.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p", "p/q" or "-p/q" (ASCII, no whitespace inside the token).
/// Throws InvalidInputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form with positive denominator, e.g. "3/8", "17/1",
/// "-5/2". Inverse of parse_rational.
std::string to_fraction(const Rational& value);

}  // namespace mirauct

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

#ifndef UMV_RATIONAL_HPP_
#define UMV_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace umv {

/// Exact rational number. Weights, costs and interval endpoints all use it so
/// that rule predicates like `w_e == U_e` are decided without rounding.
using Rational = mpq_class;

/// Parses an integer ("-3"), a fraction ("7/4") or a finite decimal ("0.125").
/// Throws std::invalid_argument on anything else (including "inf", "nan",
/// exponents and zero denominators).
Rational parse_rational(std::string_view text);

/// Canonical form: "p" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& value);

/// (a + b) / 2, exact.
Rational midpoint(const Rational& a, const Rational& b);

}  // namespace umv

#endif  // UMV_RATIONAL_HPP_

// Copyright 2026 The moebius Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License").
// You may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing,
// software distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions
// and limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace moebius {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DivisionByZero when den == 0.
Rational make_rational(long num, long den = 1);

/// Accepts "7", "-3/4", "0.125", "1e-12" and "2.5e3". Decimal forms are
/// converted exactly (1e-12 is the rational 1/10^12, not a double).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Exact value of a finite double.
Rational rational_from_double(double x);

inline int sign(const Rational& q) { return sgn(q); }

/// Writes q = s^2 * m with s >= 0 rational and m a nonnegative integer that
/// has no square factor below the trial-division bound. q must be >= 0.
std::pair<Rational, Integer> extract_square(const Rational& q);

/// Exact square root when q is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace moebius

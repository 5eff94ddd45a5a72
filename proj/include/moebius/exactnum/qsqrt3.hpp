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

#include <optional>
#include <string>

#include "moebius/exactnum/rational.hpp"

namespace moebius {

/// An element a + b*sqrt(3) of the quadratic field Q(sqrt 3).
///
/// All arithmetic is exact. Signs and comparisons are decided by comparing
/// a^2 against 3 b^2, which never ties unless both parts vanish.
class QSqrt3 {
 public:
  QSqrt3() = default;
  QSqrt3(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QSqrt3(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt3 sqrt3() { return QSqrt3(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  int sign() const;

  QSqrt3 conjugate() const { return QSqrt3(a_, -b_); }
  /// a^2 - 3 b^2, the field norm down to Q.
  Rational norm() const { return a_ * a_ - 3 * b_ * b_; }

  /// Nonnegative square root when this element is a square in Q(sqrt 3).
  std::optional<QSqrt3> exact_sqrt() const;

  double to_double() const;
  /// "a", "b*sqrt3" or "a + b*sqrt3" with rationals in lowest terms.
  std::string to_string() const;

  QSqrt3& operator+=(const QSqrt3& o);
  QSqrt3& operator-=(const QSqrt3& o);
  QSqrt3& operator*=(const QSqrt3& o);
  QSqrt3& operator/=(const QSqrt3& o);

  friend QSqrt3 operator+(QSqrt3 x, const QSqrt3& y) { return x += y; }
  friend QSqrt3 operator-(QSqrt3 x, const QSqrt3& y) { return x -= y; }
  friend QSqrt3 operator*(QSqrt3 x, const QSqrt3& y) { return x *= y; }
  friend QSqrt3 operator/(QSqrt3 x, const QSqrt3& y) { return x /= y; }
  friend QSqrt3 operator-(const QSqrt3& x) { return QSqrt3(-x.a_, -x.b_); }

  friend bool operator==(const QSqrt3& x, const QSqrt3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QSqrt3& x, const QSqrt3& y) { return !(x == y); }
  friend bool operator<(const QSqrt3& x, const QSqrt3& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QSqrt3& x, const QSqrt3& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const QSqrt3& x, const QSqrt3& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const QSqrt3& x, const QSqrt3& y) { return (x - y).sign() >= 0; }

 private:
  Rational a_;
  Rational b_;
};

int compare(const QSqrt3& x, const QSqrt3& y);
QSqrt3 abs(const QSqrt3& x);
/// A rational r with |x| <= r (cheap, not tight).
Rational abs_upper_bound(const QSqrt3& x);

/// Parses "a", "a+b*sqrt3", "b*sqrt3", as produced by to_string().
QSqrt3 parse_qsqrt3(const std::string& text);

}  // namespace moebius

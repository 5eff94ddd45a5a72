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

#include <mpfr.h>

#include <optional>
#include <string>

#include "moebius/exactnum/qsqrt3.hpp"
#include "moebius/exactnum/rational.hpp"

namespace moebius {

/// Owning wrapper around an mpfr_t. Values are binary floating point
/// numbers, i.e. dyadic rationals, at a fixed precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  /// Exact conversion to a rational.
  Rational to_rational() const;
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

 private:
  mpfr_t value_;
};

/// A closed interval [lo, hi] with dyadic endpoints. Every operation rounds
/// outward, so the result encloses every value reachable from the operands.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  explicit Interval(mpfr_prec_t precision = kDefaultPrecision);
  Interval(const Rational& x, mpfr_prec_t precision);
  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t precision);
  Interval(const QSqrt3& x, mpfr_prec_t precision);

  /// Certified enclosure of pi.
  static Interval pi(mpfr_prec_t precision);

  mpfr_prec_t precision() const { return lo_.precision(); }
  Rational lower() const { return lo_.to_rational(); }
  Rational upper() const { return hi_.to_rational(); }
  double lower_double() const { return lo_.to_double(MPFR_RNDD); }
  double upper_double() const { return hi_.to_double(MPFR_RNDU); }
  double midpoint_double() const;
  Rational width() const { return upper() - lower(); }
  double width_double() const { return mpfr_get_d(width_float().get(), MPFR_RNDU); }

  bool contains(const Rational& x) const;
  bool contains(const Interval& other) const;
  bool contains_zero() const;
  bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool is_nonnegative() const { return mpfr_sgn(lo_.get()) >= 0; }
  /// +1 / -1 when the interval excludes zero.
  std::optional<int> certain_sign() const;

  /// Intersects with [0, inf); used once a quantity is known to be >= 0.
  Interval clamp_nonnegative() const;

  /// Decimal rendering "[lo, hi]" with the given number of significant digits.
  std::string to_string(int digits = 17) const;

  friend Interval operator+(const Interval& x, const Interval& y);
  friend Interval operator-(const Interval& x, const Interval& y);
  friend Interval operator*(const Interval& x, const Interval& y);
  /// Throws DivisionByZero when y contains 0.
  friend Interval operator/(const Interval& x, const Interval& y);
  friend Interval operator-(const Interval& x);
  /// Requires x >= 0 (throws NegativeRadicand when x is certainly negative,
  /// and a domain error when x merely straddles zero).
  friend Interval sqrt(const Interval& x);
  friend Interval atan(const Interval& x);
  friend Interval hull(const Interval& x, const Interval& y);

 private:
  BigFloat width_float() const;

  BigFloat lo_;
  BigFloat hi_;
};

Interval sqrt(const Interval& x);
Interval atan(const Interval& x);
Interval hull(const Interval& x, const Interval& y);

}  // namespace moebius

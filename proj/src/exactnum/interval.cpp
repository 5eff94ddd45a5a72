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

#include "moebius/exactnum/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <utility>

#include "moebius/errors.hpp"

namespace moebius {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Rational BigFloat::to_rational() const {
  if (!mpfr_number_p(value_)) throw NonConvergence("non-finite interval endpoint");
  if (mpfr_zero_p(value_)) return Rational(0);
  Integer mantissa;
  mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  Rational q(mantissa);
  if (exponent > 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else if (exponent < 0) {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return q;
}

Interval::Interval(mpfr_prec_t precision) : lo_(precision), hi_(precision) {}

Interval::Interval(const Rational& x, mpfr_prec_t precision) : lo_(precision), hi_(precision) {
  mpfr_set_q(lo_.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), x.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t precision)
    : lo_(precision), hi_(precision) {
  if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
  mpfr_set_q(lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const QSqrt3& x, mpfr_prec_t precision) : Interval(precision) {
  Interval a(x.rational_part(), precision);
  if (x.is_rational()) {
    *this = a;
    return;
  }
  Interval b(x.sqrt3_part(), precision);
  *this = a + b * sqrt(Interval(Rational(3), precision));
}

Interval Interval::pi(mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

double Interval::midpoint_double() const {
  return 0.5 * (lo_.to_double(MPFR_RNDN) + hi_.to_double(MPFR_RNDN));
}

BigFloat Interval::width_float() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

bool Interval::contains(const Rational& x) const {
  return mpfr_cmp_q(lo_.get(), x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), x.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& other) const {
  return mpfr_lessequal_p(lo_.get(), other.lo_.get()) && mpfr_greaterequal_p(hi_.get(), other.hi_.get());
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

std::optional<int> Interval::certain_sign() const {
  if (is_positive()) return 1;
  if (is_negative()) return -1;
  return std::nullopt;
}

Interval Interval::clamp_nonnegative() const {
  Interval r = *this;
  if (mpfr_sgn(r.lo_.get()) < 0) mpfr_set_zero(r.lo_.get(), 1);
  if (mpfr_sgn(r.hi_.get()) < 0) mpfr_set_zero(r.hi_.get(), 1);
  return r;
}

namespace {

std::string format_endpoint(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "R" + (rnd == MPFR_RNDD ? "D" : "U") + "g";
  mpfr_asprintf(&buf, fmt.c_str(), x);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

mpfr_prec_t joint_precision(const Interval& x, const Interval& y) {
  return std::max(x.precision(), y.precision());
}

}  // namespace

std::string Interval::to_string(int digits) const {
  return "[" + format_endpoint(lo_.get(), digits, MPFR_RNDD) + ", " +
         format_endpoint(hi_.get(), digits, MPFR_RNDU) + "]";
}

Interval operator+(const Interval& x, const Interval& y) {
  Interval r(joint_precision(x, y));
  mpfr_add(r.lo_.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& x, const Interval& y) {
  Interval r(joint_precision(x, y));
  mpfr_sub(r.lo_.get(), x.lo_.get(), y.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), x.hi_.get(), y.lo_.get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& x) {
  Interval r(x.precision());
  mpfr_neg(r.lo_.get(), x.hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), x.lo_.get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& x, const Interval& y) {
  mpfr_prec_t p = joint_precision(x, y);
  Interval r(p);
  BigFloat t(p);
  bool first = true;
  for (mpfr_srcptr a : {x.lo_.get(), x.hi_.get()}) {
    for (mpfr_srcptr b : {y.lo_.get(), y.hi_.get()}) {
      mpfr_mul(t.get(), a, b, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains_zero()) throw DivisionByZero("interval division by an interval containing 0");
  mpfr_prec_t p = joint_precision(x, y);
  Interval r(p);
  BigFloat t(p);
  bool first = true;
  for (mpfr_srcptr a : {x.lo_.get(), x.hi_.get()}) {
    for (mpfr_srcptr b : {y.lo_.get(), y.hi_.get()}) {
      mpfr_div(t.get(), a, b, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval sqrt(const Interval& x) {
  if (x.is_negative()) throw NegativeRadicand("square root of a negative interval");
  if (mpfr_sgn(x.lo_.get()) < 0) throw std::domain_error("square root of an interval straddling 0");
  Interval r(x.precision());
  mpfr_sqrt(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

Interval atan(const Interval& x) {
  Interval r(x.precision());
  mpfr_atan(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_atan(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

Interval hull(const Interval& x, const Interval& y) {
  Interval r(joint_precision(x, y));
  mpfr_min(r.lo_.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
  return r;
}

}  // namespace moebius

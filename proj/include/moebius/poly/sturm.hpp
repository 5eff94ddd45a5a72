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
#include <vector>

#include "moebius/exactnum/qsqrt3.hpp"
#include "moebius/exactnum/rational.hpp"
#include "moebius/poly/poly.hpp"

namespace moebius {

/// An interval endpoint: a Q(sqrt 3) number or one of the infinities.
class Bound {
 public:
  Bound(const QSqrt3& value) : kind_(Kind::kFinite), value_(value) {}  // NOLINT(google-explicit-constructor)
  Bound(long value) : Bound(QSqrt3(value)) {}  // NOLINT(google-explicit-constructor)
  Bound(const Rational& value) : Bound(QSqrt3(value)) {}  // NOLINT(google-explicit-constructor)

  static Bound negative_infinity() { return Bound(Kind::kNegInf); }
  static Bound positive_infinity() { return Bound(Kind::kPosInf); }

  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_negative_infinity() const { return kind_ == Kind::kNegInf; }
  bool is_positive_infinity() const { return kind_ == Kind::kPosInf; }
  const QSqrt3& value() const { return value_; }
  std::string to_string() const;

  /// Sign of p at this bound (limit sign at the infinities).
  int sign_of(const Poly& p) const;

  friend bool operator<(const Bound& x, const Bound& y);

 private:
  enum class Kind { kNegInf, kFinite, kPosInf };
  explicit Bound(Kind kind) : kind_(kind) {}

  Kind kind_;
  QSqrt3 value_;
};

/// Sturm chain of the squarefree part of a polynomial.
class SturmChain {
 public:
  /// Throws ZeroPolynomial for p == 0.
  explicit SturmChain(const Poly& p);

  const std::vector<Poly>& polynomials() const { return chain_; }
  std::size_t length() const { return chain_.size(); }
  /// The squarefree polynomial the chain starts from.
  const Poly& base() const { return chain_.front(); }

  /// Sign variations of the chain at x, zeros skipped.
  int variations(const Bound& x) const;
  /// Distinct real roots in the half-open interval (lo, hi]. Requires lo < hi.
  int count_roots(const Bound& lo, const Bound& hi) const;
  int count_all_roots() const {
    return count_roots(Bound::negative_infinity(), Bound::positive_infinity());
  }

 private:
  std::vector<Poly> chain_;
};

/// Closed interval [lo, hi] with Q(sqrt 3) endpoints holding exactly one root.
struct RootInterval {
  QSqrt3 lo;
  QSqrt3 hi;

  bool is_exact() const { return lo == hi; }
  double midpoint() const { return (lo.to_double() + hi.to_double()) / 2; }
  std::string to_string() const;
};

/// Rational bound exceeding the absolute value of every root of p.
Rational root_bound(const Poly& p);

/// Isolates the distinct real roots of p in the closed interval [lo, hi]
/// into disjoint intervals of width <= width, in increasing order.
std::vector<RootInterval> isolate_roots(const Poly& p, const Bound& lo, const Bound& hi, const Rational& width);

/// Trace of a positivity check of p on an open segment.
struct PositivityCertificate {
  bool verified = false;
  Poly polynomial;
  QSqrt3 lo;
  QSqrt3 hi;
  QSqrt3 sample;
  int sample_sign = 0;
  int lo_sign = 0;
  int hi_sign = 0;
  std::size_t chain_length = 0;
  /// Distinct roots of p strictly inside (lo, hi).
  int interior_roots = 0;
  std::optional<RootInterval> witness;
  std::string reason;
};

/// p > 0 on (lo, hi): exact sign at the midpoint and no interior Sturm roots.
/// Never throws on failure; see positive_on_segment for the throwing form.
PositivityCertificate check_positive_on_segment(const Poly& p, const QSqrt3& lo, const QSqrt3& hi);

/// As above but throws CertFailed (with the witness) when p is not positive.
PositivityCertificate positive_on_segment(const Poly& p, const QSqrt3& lo, const QSqrt3& hi);

}  // namespace moebius

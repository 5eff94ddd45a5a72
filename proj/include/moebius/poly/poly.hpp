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

#include <string>
#include <utility>
#include <vector>

#include "moebius/exactnum/interval.hpp"
#include "moebius/exactnum/qsqrt3.hpp"

namespace moebius {

/// Dense univariate polynomial with coefficients in Q(sqrt 3).
/// coefficient(i) multiplies x^i. Trailing zero coefficients are trimmed,
/// so the zero polynomial has an empty coefficient list and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<QSqrt3> coefficients, std::string variable = "b");

  static Poly constant(const QSqrt3& c, std::string variable = "b");
  static Poly monomial(const QSqrt3& c, int degree, std::string variable = "b");
  /// The polynomial x itself.
  static Poly identity(std::string variable = "b");

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  QSqrt3 coefficient(int i) const;
  const std::vector<QSqrt3>& coefficients() const { return coeffs_; }
  QSqrt3 leading() const;
  const std::string& variable() const { return var_; }
  Poly with_variable(std::string variable) const;

  QSqrt3 evaluate(const QSqrt3& x) const;
  int sign_at(const QSqrt3& x) const { return evaluate(x).sign(); }
  Interval evaluate(const Interval& x, mpfr_prec_t precision) const;
  double evaluate(double x) const;

  Poly derivative() const;
  /// p(q(x)).
  Poly compose(const Poly& q) const;
  /// Divides by the leading coefficient; the zero polynomial stays zero.
  Poly monic() const;

  /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  /// p / gcd(p, p'), made monic. Same distinct roots, all simple.
  Poly squarefree() const;

  /// Human-readable form such as "4*b^6 - 8*b^5 + (1 + 2*sqrt3)*b - 1".
  std::string to_string() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const QSqrt3& k);

  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(Poly x, const Poly& y) { return x *= y; }
  friend Poly operator*(Poly x, const QSqrt3& k) { return x *= k; }
  friend Poly operator*(const QSqrt3& k, Poly x) { return x *= k; }
  friend Poly operator-(const Poly& x) { return x * QSqrt3(-1); }
  /// Coefficient-wise comparison; the variable name is ignored.
  friend bool operator==(const Poly& x, const Poly& y) { return x.coeffs_ == y.coeffs_; }
  friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

 private:
  void trim();

  std::vector<QSqrt3> coeffs_;
  std::string var_ = "b";
};

Poly gcd(const Poly& x, const Poly& y);

/// Formats one Q(sqrt 3) coefficient for polynomial printing.
std::string coefficient_string(const QSqrt3& c);

}  // namespace moebius

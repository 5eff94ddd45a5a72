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
#include <string_view>
#include <tuple>
#include <vector>

#include "moebius/exactnum/qsqrt3.hpp"
#include "moebius/poly/poly.hpp"

namespace moebius {

/// Dense polynomial in (b, t) with Q(sqrt 3) coefficients.
/// coefficient(i, j) multiplies b^i t^j.
class BivarPoly {
 public:
  BivarPoly() = default;
  BivarPoly(long c);  // NOLINT(google-explicit-constructor)
  BivarPoly(const QSqrt3& c);  // NOLINT(google-explicit-constructor)

  static BivarPoly b();
  static BivarPoly t();
  static BivarPoly monomial(const QSqrt3& c, int deg_b, int deg_t);
  /// Embeds a univariate polynomial as a polynomial in b (or t).
  static BivarPoly from_poly_in_b(const Poly& p);
  static BivarPoly from_poly_in_t(const Poly& p);

  bool is_zero() const { return grid_.empty(); }
  bool is_constant() const;
  int degree_b() const { return static_cast<int>(grid_.size()) - 1; }
  int degree_t() const;
  QSqrt3 coefficient(int i, int j) const;
  /// Nonzero terms as (deg_b, deg_t, coefficient), b-degree major.
  std::vector<std::tuple<int, int, QSqrt3>> terms() const;

  QSqrt3 evaluate(const QSqrt3& b, const QSqrt3& t) const;
  double evaluate(double b, double t) const;

  BivarPoly partial_b() const;
  BivarPoly partial_t() const;

  /// Substitutes t := m*b + c, giving a polynomial in b.
  Poly restrict_to_line(const QSqrt3& m, const QSqrt3& c) const;
  /// Substitutes b := value, giving a polynomial in t.
  Poly at_b(const QSqrt3& value) const;
  /// Substitutes t := value, giving a polynomial in b.
  Poly at_t(const QSqrt3& value) const;
  /// Polynomial in b when t does not occur, in t when b does not occur.
  Poly to_univariate() const;

  std::string to_string() const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BivarPoly& o);

  friend BivarPoly operator+(BivarPoly x, const BivarPoly& y) { return x += y; }
  friend BivarPoly operator-(BivarPoly x, const BivarPoly& y) { return x -= y; }
  friend BivarPoly operator*(BivarPoly x, const BivarPoly& y) { return x *= y; }
  friend BivarPoly operator-(const BivarPoly& x) { return x * BivarPoly(-1); }
  friend bool operator==(const BivarPoly& x, const BivarPoly& y) { return x.grid_ == y.grid_; }
  friend bool operator!=(const BivarPoly& x, const BivarPoly& y) { return !(x == y); }

 private:
  void trim();
  QSqrt3& at(int i, int j);

  // grid_[i][j] multiplies b^i t^j; rows and the outer list are trimmed.
  std::vector<std::vector<QSqrt3>> grid_;
};

}  // namespace moebius

namespace moebius {

/// Parses an expanded polynomial such as "4*b^6 - 8*b^5*t + 12*sqrt3*b^4 + 9".
/// Terms are products of rationals, sqrt3, b and t with optional ^exponents;
/// juxtaposition with spaces also multiplies ("12 sqrt3 b^4").
BivarPoly parse_bivar_poly(std::string_view text);

/// Same grammar, for polynomials in one variable.
Poly parse_poly(std::string_view text, std::string variable = "b");

}  // namespace moebius

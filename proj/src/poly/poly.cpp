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

#include "moebius/poly/poly.hpp"

#include <algorithm>
#include <sstream>

#include "moebius/errors.hpp"

namespace moebius {

Poly::Poly(std::vector<QSqrt3> coefficients, std::string variable)
    : coeffs_(std::move(coefficients)), var_(std::move(variable)) {
  trim();
}

Poly Poly::constant(const QSqrt3& c, std::string variable) { return Poly({c}, std::move(variable)); }

Poly Poly::monomial(const QSqrt3& c, int degree, std::string variable) {
  std::vector<QSqrt3> cs(static_cast<std::size_t>(degree) + 1);
  cs.back() = c;
  return Poly(std::move(cs), std::move(variable));
}

Poly Poly::identity(std::string variable) { return monomial(QSqrt3(1), 1, std::move(variable)); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QSqrt3 Poly::coefficient(int i) const {
  if (i < 0 || i > degree()) return QSqrt3(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

QSqrt3 Poly::leading() const { return coeffs_.empty() ? QSqrt3(0) : coeffs_.back(); }

Poly Poly::with_variable(std::string variable) const {
  Poly r = *this;
  r.var_ = std::move(variable);
  return r;
}

QSqrt3 Poly::evaluate(const QSqrt3& x) const {
  QSqrt3 acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval Poly::evaluate(const Interval& x, mpfr_prec_t precision) const {
  Interval acc(Rational(0), precision);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Interval(*it, precision);
  return acc;
}

double Poly::evaluate(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Poly Poly::derivative() const {
  std::vector<QSqrt3> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * QSqrt3(static_cast<long>(i)));
  return Poly(std::move(d), var_);
}

Poly Poly::compose(const Poly& q) const {
  Poly acc({}, q.var_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Poly::constant(*it, q.var_);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (QSqrt3(1) / leading());
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<QSqrt3> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const QSqrt3& k) {
  for (auto& c : coeffs_) c *= k;
  trim();
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly rem = *this;
  std::vector<QSqrt3> quot(std::max(0, degree() - divisor.degree() + 1));
  const QSqrt3 inv_lead = QSqrt3(1) / divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    int shift = rem.degree() - divisor.degree();
    QSqrt3 q = rem.leading() * inv_lead;
    quot[static_cast<std::size_t>(shift)] = q;
    for (int i = 0; i <= divisor.degree(); ++i)
      rem.coeffs_[static_cast<std::size_t>(i + shift)] -= q * divisor.coeffs_[static_cast<std::size_t>(i)];
    // The leading term cancels exactly; drop it even if trim would not.
    rem.coeffs_.pop_back();
    rem.trim();
  }
  return {Poly(std::move(quot), var_), rem};
}

Poly gcd(const Poly& x, const Poly& y) {
  Poly a = x, b = y;
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly Poly::squarefree() const {
  if (is_zero()) return *this;
  if (is_constant()) return monic();
  Poly g = gcd(*this, derivative());
  return divmod(g).first.monic().with_variable(var_);
}

std::string coefficient_string(const QSqrt3& c) {
  if (c.is_rational()) return c.rational_part().get_str();
  if (c.rational_part() == 0) {
    const Rational& b = c.sqrt3_part();
    if (b == 1) return "sqrt3";
    if (b == -1) return "-sqrt3";
    return b.get_str() + "*sqrt3";
  }
  return "(" + c.to_string() + ")";
}

namespace {

// Appends "± |c|*x^k" style terms; shared by Poly and BivarPoly printing.
void append_term(std::ostringstream& out, const QSqrt3& c, const std::string& monomial, bool first) {
  bool negative = c.is_rational() ? c.rational_part() < 0 : (c.rational_part() == 0 && c.sqrt3_part() < 0);
  QSqrt3 shown = negative ? -c : c;
  if (!first) out << (negative ? " - " : " + ");
  else if (negative) out << "-";
  std::string cs = coefficient_string(shown);
  if (monomial.empty()) {
    out << cs;
  } else if (shown == QSqrt3(1)) {
    out << monomial;
  } else {
    out << cs << "*" << monomial;
  }
}

}  // namespace

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const QSqrt3& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? var_ : var_ + "^" + std::to_string(i));
    append_term(out, c, mono, first);
    first = false;
  }
  return out.str();
}

namespace detail {
void append_poly_term(std::ostringstream& out, const QSqrt3& c, const std::string& monomial, bool first) {
  append_term(out, c, monomial, first);
}
}  // namespace detail

}  // namespace moebius

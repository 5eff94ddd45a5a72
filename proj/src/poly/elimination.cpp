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

#include "moebius/poly/elimination.hpp"

#include <unordered_map>

#include "moebius/errors.hpp"
#include "moebius/exactnum/radical_tower.hpp"

namespace moebius {

namespace {

using Tower = RadicalTower<BivarPoly>;
using Element = Tower::Element;

struct Fraction {
  Element num;
  Element den;
};

// Lowers a radical expression to N/D over a radical tower with polynomial
// coefficients. Square roots of non-constant quantities become new radicals
// sqrt(N*D)/D; the sign of D is deliberately ignored because every
// elimination step is symmetric in the sign of each radical.
class Lowering {
 public:
  Fraction lower(const RadicalExpr& e) {
    auto it = memo_.find(e.node_id());
    if (it != memo_.end()) return it->second;
    Fraction r = lower_uncached(e);
    memo_.emplace(e.node_id(), r);
    return r;
  }

  Tower& tower() { return tower_; }
  int radicals() const { return static_cast<int>(tower_.radical_count()); }

 private:
  static Element one() { return Tower::constant(BivarPoly(1)); }

  Fraction lower_uncached(const RadicalExpr& e) {
    const auto& c = e.children();
    switch (e.kind()) {
      case RadicalExpr::Kind::kConstant:
        return {Tower::constant(BivarPoly(QSqrt3(e.constant_value()))), one()};
      case RadicalExpr::Kind::kVariable:
        return {Tower::constant(e.variable_id() == Variable::kB ? BivarPoly::b() : BivarPoly::t()), one()};
      case RadicalExpr::Kind::kNeg: {
        Fraction x = lower(c[0]);
        return {Tower::neg(x.num), x.den};
      }
      case RadicalExpr::Kind::kAdd:
      case RadicalExpr::Kind::kSub: {
        Fraction x = lower(c[0]);
        Fraction y = lower(c[1]);
        bool add = e.kind() == RadicalExpr::Kind::kAdd;
        if (x.den == y.den) return {add ? Tower::add(x.num, y.num) : Tower::sub(x.num, y.num), x.den};
        Element l = tower_.multiply(x.num, y.den);
        Element r = tower_.multiply(y.num, x.den);
        return {add ? Tower::add(l, r) : Tower::sub(l, r), tower_.multiply(x.den, y.den)};
      }
      case RadicalExpr::Kind::kMul: {
        Fraction x = lower(c[0]);
        Fraction y = lower(c[1]);
        return {tower_.multiply(x.num, y.num), tower_.multiply(x.den, y.den)};
      }
      case RadicalExpr::Kind::kDiv: {
        Fraction x = lower(c[0]);
        Fraction y = lower(c[1]);
        if (y.num.empty()) throw DivisionByZero("division by an identically zero expression: " + c[1].to_string());
        if (auto k = constant_of(y.num)) {
          // Dividing by a nonzero constant keeps the denominator unchanged.
          return {Tower::scale(x.num, BivarPoly(QSqrt3(1) / *k)), x.den};
        }
        return {tower_.multiply(x.num, y.den), tower_.multiply(x.den, y.num)};
      }
      case RadicalExpr::Kind::kSqrt:
        return lower_sqrt(lower(c[0]));
    }
    throw UnsupportedExpression("unknown expression node");
  }

  static std::optional<QSqrt3> constant_of(const Element& e) {
    auto c = Tower::as_coefficient(e);
    if (!c || !c->is_constant()) return std::nullopt;
    return c->coefficient(0, 0);
  }

  Fraction lower_sqrt(const Fraction& x) {
    if (x.num.empty()) return {Element{}, one()};
    if (auto dc = constant_of(x.den)) {
      Element radicand = Tower::scale(x.num, BivarPoly(QSqrt3(1) / *dc));
      if (auto q = constant_of(radicand)) return {constant_sqrt(*q), one()};
      return {tower_.radical(tower_.intern_radical(radicand)), one()};
    }
    Element radicand = tower_.multiply(x.num, x.den);
    return {tower_.radical(tower_.intern_radical(radicand)), x.den};
  }

  // sqrt of a constant: exact roots and multiples of sqrt3 stay coefficients.
  Element constant_sqrt(const QSqrt3& q) {
    if (auto root = q.exact_sqrt()) return Tower::constant(BivarPoly(*root));
    if (q.is_rational()) {
      auto [s, m] = extract_square(q.rational_part());
      if (m == 3) return Tower::constant(BivarPoly(QSqrt3(Rational(0), s)));
      Element r = tower_.radical(tower_.intern_radical(Tower::constant(BivarPoly(QSqrt3(Rational(m))))));
      return Tower::scale(r, BivarPoly(QSqrt3(s)));
    }
    return tower_.radical(tower_.intern_radical(Tower::constant(BivarPoly(q))));
  }

  Tower tower_;
  std::unordered_map<const void*, Fraction> memo_;
};

}  // namespace

BivarElimination eliminate_radicals_bivariate(const RadicalExpr& expr) {
  Lowering lowering;
  Element n = lowering.lower(expr).num;
  BivarElimination out;
  out.radicals = lowering.radicals();
  while (auto top = Tower::top_radical(n)) {
    n = lowering.tower().eliminate(n, *top);
    ++out.eliminations;
  }
  out.polynomial = *Tower::as_coefficient(n);
  return out;
}

Elimination eliminate_radicals(const RadicalExpr& expr) {
  if (expr.mentions(Variable::kB) && expr.mentions(Variable::kT))
    throw UnsupportedExpression("eliminate_radicals expects a single variable; use the bivariate form");
  BivarElimination biv = eliminate_radicals_bivariate(expr);
  Elimination out;
  const char* var = expr.mentions(Variable::kT) ? "t" : "b";
  out.polynomial = biv.polynomial.to_univariate().with_variable(var);
  out.radicals = biv.radicals;
  out.eliminations = biv.eliminations;
  return out;
}

std::optional<QSqrt3> proportionality_factor(const Poly& p, const Poly& q) {
  if (p.degree() != q.degree()) return std::nullopt;
  if (q.is_zero()) return p.is_zero() ? std::optional<QSqrt3>(QSqrt3(1)) : std::nullopt;
  QSqrt3 k = p.leading() / q.leading();
  if (q * k != p) return std::nullopt;
  return k;
}

std::optional<QSqrt3> proportionality_factor(const BivarPoly& p, const BivarPoly& q) {
  auto terms = q.terms();
  if (terms.empty()) return p.is_zero() ? std::optional<QSqrt3>(QSqrt3(1)) : std::nullopt;
  const auto& [i, j, c] = terms.back();
  QSqrt3 k = p.coefficient(i, j) / c;
  if (q * BivarPoly(k) != p) return std::nullopt;
  return k;
}

}  // namespace moebius

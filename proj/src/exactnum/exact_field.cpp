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

#include "exact_field.hpp"

#include "moebius/errors.hpp"

namespace moebius::detail {

namespace {

// Precisions tried before falling back to the symbolic zero test.
constexpr mpfr_prec_t kQuickPrecision = 256;

}  // namespace

namespace {

Interval enclose_with(const ExactField::Element& e, const std::vector<Interval>& radicals, mpfr_prec_t precision) {
  Interval total(Rational(0), precision);
  for (const auto& [mask, c] : e) {
    Interval term(c, precision);
    for (std::size_t i = 0; i < radicals.size(); ++i)
      if (mask & (ExactField::Tower::Mask{1} << i)) term = term * radicals[i];
    total = total + term;
  }
  return total;
}

}  // namespace

const std::vector<Interval>& ExactField::radical_intervals(mpfr_prec_t precision) {
  auto& cached = radical_cache_[precision];
  while (cached.size() < tower_.radical_count()) {
    // Radicand i only mentions radicals below i, and those are cached already.
    // Radicands are certified positive when interned.
    Interval w = enclose_with(tower_.radicand(cached.size()), cached, precision).clamp_nonnegative();
    cached.push_back(moebius::sqrt(w));
  }
  return cached;
}

Interval ExactField::enclose(const Element& e, mpfr_prec_t precision) {
  return enclose_with(e, radical_intervals(precision), precision);
}

bool ExactField::is_zero(const Element& e) {
  if (e.empty()) return true;
  if (Tower::as_coefficient(e)) return false;  // stored coefficients are nonzero
  std::size_t i = *Tower::top_radical(e);
  if (!is_zero(tower_.eliminate(e, i))) return false;
  // e * conj(e) == 0, so e or its conjugate vanishes.
  auto [u, v] = Tower::split(e, i);
  if (is_zero(u) && is_zero(v)) return true;
  // Exactly one of e, conj vanishes; the other separates from 0 eventually.
  Element conj = Tower::conjugate(e, i);
  for (mpfr_prec_t p = options_.initial_precision; p <= options_.max_precision; p *= 2) {
    if (enclose(conj, p).certain_sign()) return true;
    if (enclose(e, p).certain_sign()) return false;
  }
  throw NonConvergence("zero test did not separate an element from its conjugate within the precision cap");
}

int ExactField::sign(const Element& e) {
  if (e.empty()) return 0;
  if (auto c = Tower::as_coefficient(e)) return c->sign();
  mpfr_prec_t p = options_.initial_precision;
  for (; p <= std::min(kQuickPrecision, options_.max_precision); p *= 2)
    if (auto s = enclose(e, p).certain_sign()) return *s;
  if (is_zero(e)) return 0;
  for (p = options_.initial_precision; p <= options_.max_precision; p *= 2)
    if (auto s = enclose(e, p).certain_sign()) return *s;
  throw NonConvergence("sign undecided within the precision cap");
}

ExactField::Element ExactField::inverse(const Element& d) {
  if (d.empty()) throw DivisionByZero("division by an exact zero");
  if (auto c = Tower::as_coefficient(d)) return Tower::constant(QSqrt3(1) / *c);
  std::size_t i = *Tower::top_radical(d);
  Element norm = tower_.eliminate(d, i);
  Element conj = Tower::conjugate(d, i);
  if (!is_zero(norm)) return tower_.multiply(conj, inverse(norm));
  if (is_zero(d)) throw DivisionByZero("division by an expression that is exactly zero");
  // conj == 0 means v r_i == u, hence d == 2u.
  auto [u, v] = Tower::split(d, i);
  return inverse(Tower::scale(u, QSqrt3(2)));
}

ExactField::Element ExactField::sqrt(const Element& x) {
  int s = sign(x);
  if (s < 0) throw NegativeRadicand("square root of a negative quantity");
  if (s == 0) return {};
  if (auto c = Tower::as_coefficient(x)) {
    if (auto root = c->exact_sqrt()) return Tower::constant(*root);
    if (c->is_rational()) {
      auto [factor, rest] = extract_square(c->rational_part());
      if (rest == 3) return Tower::constant(QSqrt3(Rational(0), factor));
      std::size_t i = tower_.intern_radical(Tower::constant(QSqrt3(Rational(rest))));
      return Tower::scale(tower_.radical(i), QSqrt3(factor));
    }
  }
  return tower_.radical(tower_.intern_radical(x));
}

ExactField::Element ExactField::lower(const RadicalExpr& expr) {
  auto it = lowered_.find(expr.node_id());
  if (it != lowered_.end()) return it->second;
  Element result;
  const auto& ch = expr.children();
  switch (expr.kind()) {
    case RadicalExpr::Kind::kConstant:
      result = Tower::constant(QSqrt3(expr.constant_value()));
      break;
    case RadicalExpr::Kind::kVariable:
      throw UnsupportedExpression(std::string("sign_of needs a constant expression; found variable ") +
                                  variable_name(expr.variable_id()));
    case RadicalExpr::Kind::kAdd:
      result = Tower::add(lower(ch[0]), lower(ch[1]));
      break;
    case RadicalExpr::Kind::kSub:
      result = Tower::sub(lower(ch[0]), lower(ch[1]));
      break;
    case RadicalExpr::Kind::kNeg:
      result = Tower::neg(lower(ch[0]));
      break;
    case RadicalExpr::Kind::kMul:
      result = tower_.multiply(lower(ch[0]), lower(ch[1]));
      break;
    case RadicalExpr::Kind::kDiv: {
      Element num = lower(ch[0]);
      result = tower_.multiply(num, inverse(lower(ch[1])));
      break;
    }
    case RadicalExpr::Kind::kSqrt:
      result = sqrt(lower(ch[0]));
      break;
  }
  lowered_.emplace(expr.node_id(), result);
  return result;
}

}  // namespace moebius::detail

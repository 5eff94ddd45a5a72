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

#include "moebius/exactnum/qsqrt3.hpp"

#include <cctype>
#include <cmath>

#include "moebius/errors.hpp"

namespace moebius {

int QSqrt3::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: whichever of |a| and |b| sqrt(3) is larger wins.
  Rational a2 = a_ * a_;
  Rational b2 = 3 * b_ * b_;
  return a2 > b2 ? sa : sb;
}

QSqrt3& QSqrt3::operator+=(const QSqrt3& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt3& QSqrt3::operator-=(const QSqrt3& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& o) {
  if (o.b_ == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + 3 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt3& QSqrt3::operator/=(const QSqrt3& o) {
  if (o.is_zero()) throw DivisionByZero("QSqrt3 division by zero");
  if (o.b_ == 0) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  Rational n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::optional<QSqrt3> QSqrt3::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return QSqrt3();
  Rational r;
  if (b_ == 0) {
    if (rational_sqrt(a_, r)) return QSqrt3(r);
    if (rational_sqrt(a_ / 3, r)) return QSqrt3(Rational(0), r);
    return std::nullopt;
  }
  // (u + v sqrt3)^2 = u^2 + 3 v^2 + 2 u v sqrt3 requires the norm to be a square.
  Rational n;
  if (!rational_sqrt(norm(), n)) return std::nullopt;
  for (const Rational& cand : {Rational((a_ + n) / 2), Rational((a_ - n) / 2)}) {
    Rational u;
    if (cand <= 0 || !rational_sqrt(cand, u)) continue;
    Rational v = b_ / (2 * u);
    QSqrt3 root(u, v);
    if (root * root == *this) return root.sign() < 0 ? -root : root;
  }
  return std::nullopt;
}

double QSqrt3::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(3.0); }

std::string QSqrt3::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string bs = b_.get_str() + "*sqrt3";
  if (a_ == 0) return bs;
  if (b_ < 0) return a_.get_str() + " - " + Rational(-b_).get_str() + "*sqrt3";
  return a_.get_str() + " + " + bs;
}

int compare(const QSqrt3& x, const QSqrt3& y) { return (x - y).sign(); }

QSqrt3 abs(const QSqrt3& x) { return x.sign() < 0 ? -x : x; }

Rational abs_upper_bound(const QSqrt3& x) {
  return ::abs(x.rational_part()) + 2 * ::abs(x.sqrt3_part());
}

QSqrt3 parse_qsqrt3(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty Q(sqrt3) literal");
  const std::string tag = "*sqrt3";
  auto pos = s.find(tag);
  if (pos == std::string::npos) return QSqrt3(parse_rational(s));
  if (pos + tag.size() != s.size()) throw ParseError("bad Q(sqrt3) literal: " + text);
  std::string head = s.substr(0, pos);
  // Split head into rational part and sqrt3 coefficient at the last +/- that
  // is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    char c = head[i];
    if ((c == '+' || c == '-') && head[i - 1] != 'e' && head[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return QSqrt3(Rational(0), parse_rational(head));
  Rational a = parse_rational(head.substr(0, split));
  Rational b = parse_rational(head.substr(split));
  return QSqrt3(a, b);
}

}  // namespace moebius

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

#include "moebius/poly/sturm.hpp"

#include <functional>

#include "moebius/errors.hpp"

namespace moebius {

std::string Bound::to_string() const {
  if (kind_ == Kind::kNegInf) return "-inf";
  if (kind_ == Kind::kPosInf) return "+inf";
  return value_.to_string();
}

int Bound::sign_of(const Poly& p) const {
  if (kind_ == Kind::kFinite) return p.sign_at(value_);
  int s = p.leading().sign();
  if (kind_ == Kind::kNegInf && p.degree() % 2 == 1) s = -s;
  return s;
}

bool operator<(const Bound& x, const Bound& y) {
  if (x.kind_ != y.kind_) return static_cast<int>(x.kind_) < static_cast<int>(y.kind_);
  return x.kind_ == Bound::Kind::kFinite && x.value_ < y.value_;
}

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
  chain_.push_back(p.squarefree());
  if (chain_.front().is_constant()) return;
  chain_.push_back(chain_.front().derivative());
  while (!chain_.back().is_constant()) {
    Poly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;  // cannot happen for squarefree input
    // Positive rescaling keeps the sign pattern and the numbers small.
    QSqrt3 lead = r.leading();
    r = r * (QSqrt3(-1) / abs(lead));
    chain_.push_back(std::move(r));
  }
}

int SturmChain::variations(const Bound& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = x.sign_of(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmChain::count_roots(const Bound& lo, const Bound& hi) const {
  if (!(lo < hi)) throw std::invalid_argument("count_roots: empty interval");
  return variations(lo) - variations(hi);
}

std::string RootInterval::to_string() const {
  if (is_exact()) return "{" + lo.to_string() + "}";
  return "[" + lo.to_string() + ", " + hi.to_string() + "]";
}

Rational root_bound(const Poly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m(0);
  const QSqrt3 lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational c = abs_upper_bound(p.coefficient(i) / lead);
    if (c > m) m = c;
  }
  return m + 1;
}

std::vector<RootInterval> isolate_roots(const Poly& p, const Bound& lo, const Bound& hi, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("isolate_roots: width must be positive");
  SturmChain chain(p);
  const Poly& q = chain.base();
  const Rational r = root_bound(q);
  QSqrt3 a = lo.is_finite() ? lo.value() : QSqrt3(Rational(-r));
  QSqrt3 b = hi.is_finite() ? hi.value() : QSqrt3(r);
  std::vector<RootInterval> out;
  if (lo.is_positive_infinity() || hi.is_negative_infinity() || b < a) return out;
  if (q.sign_at(a) == 0) out.push_back({a, a});
  if (a == b) return out;

  const QSqrt3 w(width);
  // Roots in (x, y]; each returned interval holds one root.
  std::function<void(const QSqrt3&, const QSqrt3&, int)> split = [&](const QSqrt3& x, const QSqrt3& y, int n) {
    if (n == 0) return;
    if (n == 1 && y - x <= w) {
      if (q.sign_at(y) == 0) {
        out.push_back({y, y});
      } else {
        out.push_back({x, y});
      }
      return;
    }
    QSqrt3 m = (x + y) * QSqrt3(make_rational(1, 2));
    int left = chain.count_roots(x, m);
    split(x, m, left);
    split(m, y, n - left);
  };
  split(a, b, chain.count_roots(a, b));
  return out;
}

PositivityCertificate check_positive_on_segment(const Poly& p, const QSqrt3& lo, const QSqrt3& hi) {
  PositivityCertificate cert;
  cert.polynomial = p;
  cert.lo = lo;
  cert.hi = hi;
  if (!(lo < hi)) {
    cert.reason = "empty segment";
    return cert;
  }
  cert.sample = (lo + hi) * QSqrt3(make_rational(1, 2));
  cert.lo_sign = p.sign_at(lo);
  cert.hi_sign = p.sign_at(hi);
  if (p.is_zero()) {
    cert.reason = "zero polynomial";
    return cert;
  }
  cert.sample_sign = p.sign_at(cert.sample);
  SturmChain chain(p);
  cert.chain_length = chain.length();
  cert.interior_roots = chain.count_roots(lo, hi) - (cert.hi_sign == 0 ? 1 : 0);
  if (cert.interior_roots > 0) {
    auto roots = isolate_roots(p, lo, hi, make_rational(1, 1000000));
    for (const auto& root : roots) {
      if (root.lo == lo || root.hi == hi) continue;
      cert.witness = root;
      break;
    }
    cert.reason = std::to_string(cert.interior_roots) + " root(s) inside the segment";
    return cert;
  }
  if (cert.sample_sign <= 0) {
    cert.witness = RootInterval{lo, hi};
    cert.reason = "polynomial is not positive at the sample point";
    return cert;
  }
  cert.verified = true;
  return cert;
}

PositivityCertificate positive_on_segment(const Poly& p, const QSqrt3& lo, const QSqrt3& hi) {
  PositivityCertificate cert = check_positive_on_segment(p, lo, hi);
  if (!cert.verified) {
    std::string where = cert.witness ? " witness " + cert.witness->to_string() : std::string();
    throw CertFailed("positivity of " + p.to_string() + " on (" + lo.to_string() + ", " + hi.to_string() +
                     ") fails: " + cert.reason + where);
  }
  return cert;
}

}  // namespace moebius

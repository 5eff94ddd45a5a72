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

#include "moebius/exactnum/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "moebius/errors.hpp"

namespace moebius {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view s) {
  bool negative = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  Integer mantissa = 0;
  long scale = 0;
  bool seen_digit = false;
  bool after_point = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (after_point) --scale;
      seen_digit = true;
    } else if (c == '.' && !after_point) {
      after_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParseError("not a number: '" + std::string(s) + "'");
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw ParseError("not a number: '" + std::string(s) + "'");
    std::string exponent(s.substr(i + 1));
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exponent, &used);
    } catch (const std::exception&) {
      throw ParseError("bad exponent in '" + std::string(s) + "'");
    }
    if (used != exponent.size()) throw ParseError("bad exponent in '" + std::string(s) + "'");
    scale += e;
  }
  Rational q(mantissa);
  if (scale > 0) q *= Rational(pow10(static_cast<unsigned long>(scale)));
  if (scale < 0) q /= Rational(pow10(static_cast<unsigned long>(-scale)));
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  Rational num = parse_decimal(text.substr(0, slash));
  Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw DivisionByZero("parse_rational: zero denominator");
  Rational q = num / den;
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw ParseError("rational_from_double: non-finite value");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

namespace {

// n = s^2 * m, n >= 0.
std::pair<Integer, Integer> extract_square_int(Integer n) {
  Integer s = 1;
  if (n == 0) return {0, 0};
  for (unsigned long p = 2; p < 20000; ++p) {
    Integer pp = Integer(p) * p;
    if (pp > n) break;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return {s * r, 1};
  }
  return {s, n};
}

}  // namespace

std::pair<Rational, Integer> extract_square(const Rational& q) {
  if (q < 0) throw NegativeRadicand("extract_square of a negative rational");
  // sqrt(p/d) = sqrt(p*d)/d
  Integer pd = q.get_num() * q.get_den();
  auto [s, m] = extract_square_int(pd);
  Rational root(s, q.get_den());
  root.canonicalize();
  return {root, m};
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

}  // namespace moebius

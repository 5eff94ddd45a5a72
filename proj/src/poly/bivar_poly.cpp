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

#include "moebius/poly/bivar_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "moebius/errors.hpp"

namespace moebius {

namespace detail {
void append_poly_term(std::ostringstream& out, const QSqrt3& c, const std::string& monomial, bool first);
}

BivarPoly::BivarPoly(long c) : BivarPoly(QSqrt3(c)) {}

BivarPoly::BivarPoly(const QSqrt3& c) {
  if (!c.is_zero()) grid_ = {{c}};
}

BivarPoly BivarPoly::monomial(const QSqrt3& c, int deg_b, int deg_t) {
  BivarPoly r;
  if (c.is_zero()) return r;
  r.at(deg_b, deg_t) = c;
  return r;
}

BivarPoly BivarPoly::b() { return monomial(QSqrt3(1), 1, 0); }
BivarPoly BivarPoly::t() { return monomial(QSqrt3(1), 0, 1); }

BivarPoly BivarPoly::from_poly_in_b(const Poly& p) {
  BivarPoly r;
  for (int i = 0; i <= p.degree(); ++i) r += monomial(p.coefficient(i), i, 0);
  return r;
}

BivarPoly BivarPoly::from_poly_in_t(const Poly& p) {
  BivarPoly r;
  for (int j = 0; j <= p.degree(); ++j) r += monomial(p.coefficient(j), 0, j);
  return r;
}

QSqrt3& BivarPoly::at(int i, int j) {
  if (static_cast<int>(grid_.size()) <= i) grid_.resize(static_cast<std::size_t>(i) + 1);
  auto& row = grid_[static_cast<std::size_t>(i)];
  if (static_cast<int>(row.size()) <= j) row.resize(static_cast<std::size_t>(j) + 1);
  return row[static_cast<std::size_t>(j)];
}

void BivarPoly::trim() {
  for (auto& row : grid_)
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
}

bool BivarPoly::is_constant() const { return grid_.empty() || (grid_.size() == 1 && grid_[0].size() <= 1); }

int BivarPoly::degree_t() const {
  int d = -1;
  for (const auto& row : grid_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

QSqrt3 BivarPoly::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(grid_.size())) return QSqrt3(0);
  const auto& row = grid_[static_cast<std::size_t>(i)];
  if (j >= static_cast<int>(row.size())) return QSqrt3(0);
  return row[static_cast<std::size_t>(j)];
}

std::vector<std::tuple<int, int, QSqrt3>> BivarPoly::terms() const {
  std::vector<std::tuple<int, int, QSqrt3>> out;
  for (std::size_t i = 0; i < grid_.size(); ++i)
    for (std::size_t j = 0; j < grid_[i].size(); ++j)
      if (!grid_[i][j].is_zero()) out.emplace_back(static_cast<int>(i), static_cast<int>(j), grid_[i][j]);
  return out;
}

QSqrt3 BivarPoly::evaluate(const QSqrt3& b, const QSqrt3& t) const { return at_b(b).evaluate(t); }

double BivarPoly::evaluate(double b, double t) const {
  double acc = 0;
  for (auto it = grid_.rbegin(); it != grid_.rend(); ++it) {
    double row = 0;
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * t + jt->to_double();
    acc = acc * b + row;
  }
  return acc;
}

BivarPoly BivarPoly::partial_b() const {
  BivarPoly r;
  for (const auto& [i, j, c] : terms())
    if (i > 0) r.at(i - 1, j) += c * QSqrt3(static_cast<long>(i));
  r.trim();
  return r;
}

BivarPoly BivarPoly::partial_t() const {
  BivarPoly r;
  for (const auto& [i, j, c] : terms())
    if (j > 0) r.at(i, j - 1) += c * QSqrt3(static_cast<long>(j));
  r.trim();
  return r;
}

Poly BivarPoly::restrict_to_line(const QSqrt3& m, const QSqrt3& c) const {
  const Poly line({c, m}, "b");
  const Poly bvar = Poly::identity("b");
  // Horner in b over rows that are polynomials in t composed with the line.
  Poly acc({}, "b");
  for (auto it = grid_.rbegin(); it != grid_.rend(); ++it) acc = acc * bvar + Poly(*it, "t").compose(line);
  return acc.with_variable("b");
}

Poly BivarPoly::at_b(const QSqrt3& value) const {
  std::vector<QSqrt3> cs(static_cast<std::size_t>(std::max(0, degree_t() + 1)));
  QSqrt3 power(1);
  for (const auto& row : grid_) {
    for (std::size_t j = 0; j < row.size(); ++j) cs[j] += row[j] * power;
    power *= value;
  }
  return Poly(std::move(cs), "t");
}

Poly BivarPoly::at_t(const QSqrt3& value) const {
  std::vector<QSqrt3> cs;
  for (const auto& row : grid_) cs.push_back(Poly(row, "t").evaluate(value));
  return Poly(std::move(cs), "b");
}

Poly BivarPoly::to_univariate() const {
  if (degree_t() <= 0) return at_t(QSqrt3(0));
  if (degree_b() <= 0) return at_b(QSqrt3(0));
  throw UnsupportedExpression("polynomial mentions both b and t");
}

std::string BivarPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Total degree descending, then b-degree descending.
  int max_total = degree_b() + degree_t();
  for (int total = max_total; total >= 0; --total) {
    for (int i = std::min(total, degree_b()); i >= 0; --i) {
      QSqrt3 c = coefficient(i, total - i);
      if (c.is_zero()) continue;
      int j = total - i;
      std::string mono;
      auto add = [&](const char* v, int d) {
        if (d == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (d > 1) mono += "^" + std::to_string(d);
      };
      add("b", i);
      add("t", j);
      detail::append_poly_term(out, c, mono, first);
      first = false;
    }
  }
  return out.str();
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [i, j, c] : o.terms()) at(i, j) += c;
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [i, j, c] : o.terms()) at(i, j) -= c;
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) {
  BivarPoly r;
  auto mine = terms();
  auto theirs = o.terms();
  for (const auto& [i1, j1, c1] : mine)
    for (const auto& [i2, j2, c2] : theirs) r.at(i1 + i2, j1 + j2) += c1 * c2;
  r.trim();
  *this = std::move(r);
  return *this;
}

}  // namespace moebius

namespace moebius {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  BivarPoly parse() {
    BivarPoly total;
    skip();
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected + or -");
      }
      total += term() * BivarPoly(sign);
      first = false;
      skip();
    }
    if (first) fail("empty polynomial");
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  BivarPoly term() {
    BivarPoly product(1);
    bool any = false;
    for (;;) {
      skip();
      char c = peek();
      if (c == '*') {
        if (!any) fail("'*' without a left operand");
        ++pos_;
        continue;
      }
      if (c == '\0' || c == '+' || c == '-' || c == ')') break;
      product *= factor();
      any = true;
    }
    if (!any) fail("empty term");
    return product;
  }

  BivarPoly factor() {
    skip();
    BivarPoly base;
    char c = peek();
    if (c == '(') {
      ++pos_;
      std::size_t start = pos_;
      int depth = 1;
      while (pos_ < text_.size() && depth > 0) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth != 0) fail("unbalanced parenthesis");
      base = PolyParser(text_.substr(start, pos_ - start - 1)).parse();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' || text_[pos_] == '/'))
        ++pos_;
      base = BivarPoly(QSqrt3(parse_rational(std::string(text_.substr(start, pos_ - start)))));
    } else if (text_.substr(pos_, 5) == "sqrt3") {
      pos_ += 5;
      base = BivarPoly(QSqrt3::sqrt3());
    } else if (c == 'b') {
      ++pos_;
      base = BivarPoly::b();
    } else if (c == 't') {
      ++pos_;
      base = BivarPoly::t();
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      BivarPoly r(1);
      for (int i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_bivar_poly(std::string_view text) { return PolyParser(text).parse(); }

Poly parse_poly(std::string_view text, std::string variable) {
  return parse_bivar_poly(text).to_univariate().with_variable(std::move(variable));
}

}  // namespace moebius

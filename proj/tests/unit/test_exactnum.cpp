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

#include <random>

#include "doctest.h"
#include "moebius/errors.hpp"
#include "moebius/exactnum/interval.hpp"
#include "moebius/exactnum/qsqrt3.hpp"
#include "moebius/exactnum/radical_expr.hpp"
#include "moebius/exactnum/rational.hpp"

using namespace moebius;

namespace {

RadicalExpr r(long n, long d = 1) { return RadicalExpr(make_rational(n, d)); }
RadicalExpr s3() { return sqrt3_expr(); }

RadicalExpr lambda1_closed_form() {
  RadicalExpr num = r(2) * sqrt(r(4) - r(2) * s3()) + r(4);
  RadicalExpr den = sqrt(r(2) * s3()) + r(2) * sqrt(r(2) * s3() - r(3));
  return num / den;
}

bool near(const Interval& iv, double value, double tol) {
  return iv.lower_double() > value - tol && iv.upper_double() < value + tol;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("3/4") == make_rational(3, 4));
  CHECK(parse_rational("0.125") == make_rational(1, 8));
  CHECK(parse_rational("1e-3") == make_rational(1, 1000));
  CHECK(parse_rational("-6/8") == make_rational(-3, 4));
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
}

TEST_CASE("square extraction splits off the squarefree part") {
  auto [s, m] = extract_square(make_rational(72, 25));
  CHECK(s == make_rational(6, 5));
  CHECK(m == 2);
  Rational root;
  CHECK(rational_sqrt(make_rational(49, 4), root));
  CHECK(root == make_rational(7, 2));
  CHECK_FALSE(rational_sqrt(Rational(3), root));
}

TEST_CASE("QSqrt3 difference of squares") {
  QSqrt3 x(1, 1), y(1, -1);
  CHECK(x * y == QSqrt3(-2, 0));
}

TEST_CASE("QSqrt3 sign compares 144 with 147") {
  CHECK(QSqrt3(-12, 7).sign() == 1);
  CHECK(QSqrt3(12, -7).sign() == -1);
  CHECK(QSqrt3(0, 0).sign() == 0);
  CHECK(QSqrt3(7, -4).sign() == 1);  // 49 > 48
}

TEST_CASE("QSqrt3 square of sqrt3") {
  QSqrt3 s = QSqrt3::sqrt3();
  CHECK(s * s == QSqrt3(3, 0));
}

TEST_CASE("QSqrt3 division and errors") {
  QSqrt3 x(2, 3), y(-1, 5);
  CHECK((x / y) * y == x);
  CHECK_THROWS_AS(x / QSqrt3(0, 0), DivisionByZero);
}

TEST_CASE("QSqrt3 exact square roots") {
  auto root = QSqrt3(4, -2).exact_sqrt();  // 4 - 2 sqrt3 = (sqrt3 - 1)^2
  REQUIRE(root.has_value());
  CHECK(*root == QSqrt3(-1, 1));
  CHECK_FALSE(QSqrt3(2, 0).exact_sqrt().has_value());
  CHECK(parse_qsqrt3("1/2 - 3/4*sqrt3") == QSqrt3(make_rational(1, 2), make_rational(-3, 4)));
}

TEST_CASE("lambda1 enclosure") {
  Interval iv = interval_eval(lambda1_closed_form(), make_rational(1, 1000000000000));
  CHECK(iv.width() <= make_rational(1, 1000000000000));
  CHECK(near(iv, 1.6949731712249416, 1e-12));
}

TEST_CASE("a = (sqrt27 - sqrt11)/4 enclosure") {
  Interval iv = interval_eval((sqrt(r(27)) - sqrt(r(11))) / r(4), make_rational(1, 1000000));
  CHECK(near(iv, 0.4698819, 1e-6));
}

TEST_CASE("t0 = -sqrt(2/sqrt3 - 1) enclosure") {
  Interval iv = interval_eval(-sqrt(r(2) / s3() - r(1)), make_rational(1, 1000000));
  CHECK(near(iv, -0.39332, 1e-5));
}

TEST_CASE("sign_of basic cases") {
  CHECK(sign_of(sqrt(r(27)) - sqrt(r(11))) == 1);
  CHECK(sign_of(sqrt(r(2)) - sqrt(r(2))) == 0);
  CHECK(sign_of(sqrt(r(8)) - r(2) * sqrt(r(2))) == 0);
  CHECK(sign_of(sqrt(r(4) - r(2) * s3()) - (s3() - r(1))) == 0);
  CHECK(sign_of(sqrt(r(3)) - r(2)) == -1);
}

TEST_CASE("sign_of certifies the lambda1 defining identity") {
  RadicalExpr fourth_root_3_times_sqrt2 = sqrt(sqrt(r(3)) * r(2));
  RadicalExpr identity = (r(2) * sqrt(r(4) - r(2) * s3()) + r(4)) -
                         lambda1_closed_form() * (fourth_root_3_times_sqrt2 + r(2) * sqrt(r(2) * s3() - r(3)));
  CHECK(sign_of(identity) == 0);
}

TEST_CASE("sign_of on nested radicals that vanish") {
  // sqrt(3 + 2 sqrt2) = 1 + sqrt2
  CHECK(sign_of(sqrt(r(3) + r(2) * sqrt(r(2))) - r(1) - sqrt(r(2))) == 0);
  // sqrt(5 + 2 sqrt6) = sqrt2 + sqrt3
  CHECK(sign_of(sqrt(r(5) + r(2) * sqrt(r(6))) - sqrt(r(2)) - s3()) == 0);
  CHECK(sign_of(sqrt(r(5) + r(2) * sqrt(r(6))) - sqrt(r(2)) - s3() + r(1, 1000000000)) == 1);
}

TEST_CASE("negative radicands and zero divisors") {
  CHECK_THROWS_AS(interval_eval(sqrt(r(-1)), make_rational(1, 100)), NegativeRadicand);
  CHECK_THROWS_AS(interval_eval(sqrt(sqrt(r(2)) - sqrt(r(3))), make_rational(1, 100)), NegativeRadicand);
  CHECK_THROWS_AS(interval_eval(r(1) / (sqrt(r(2)) - sqrt(r(2))), make_rational(1, 100)), DivisionByZero);
  // radicand exactly zero but hidden behind radicals
  Interval z = interval_eval(sqrt(sqrt(r(8)) - r(2) * sqrt(r(2))), make_rational(1, 100));
  CHECK(z.contains(Rational(0)));
}

TEST_CASE("pi enclosure") {
  Interval pi = Interval::pi(200);
  CHECK(pi.lower_double() <= 3.141592653589793);
  CHECK(pi.upper_double() >= 3.141592653589793);
  CHECK(pi.width_double() < 1e-50);
}

TEST_CASE("parse and print round trip") {
  RadicalExpr e = lambda1_closed_form();
  RadicalExpr back = RadicalExpr::parse(e.to_string());
  CHECK(back.to_string() == e.to_string());
  CHECK(sign_of(back - e) == 0);
  CHECK_THROWS_AS(RadicalExpr::parse("(+ 1"), ParseError);
}

TEST_CASE("differentiation and substitution") {
  RadicalExpr t = RadicalExpr::variable(Variable::kT);
  RadicalExpr f = sqrt(r(1) + t * t);
  RadicalExpr df = f.differentiate(Variable::kT).substitute(Variable::kT, r(3, 4));
  // d/dt sqrt(1+t^2) = t / sqrt(1+t^2) = (3/4)/(5/4) = 3/5
  CHECK(sign_of(df - r(3, 5)) == 0);
}

namespace {

// Random trees over small rationals whose square-root operands are kept
// positive by construction (sqrt of a square plus a positive constant).
RadicalExpr random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 5);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  switch (pick(rng)) {
    case 0:
      return r(num(rng), den(rng));
    case 1:
      return random_tree(rng, depth - 1) + random_tree(rng, depth - 1);
    case 2:
      return random_tree(rng, depth - 1) - random_tree(rng, depth - 1);
    case 3:
      return random_tree(rng, depth - 1) * random_tree(rng, depth - 1);
    case 4: {
      RadicalExpr d = random_tree(rng, depth - 1);
      return random_tree(rng, depth - 1) / (d * d + r(1, den(rng)));
    }
    default: {
      RadicalExpr x = random_tree(rng, depth - 1);
      return sqrt(x * x + r(den(rng), 3));
    }
  }
}

}  // namespace

TEST_CASE("property: enclosures nest as the width shrinks") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    RadicalExpr e = random_tree(rng, 3);
    Interval wide = interval_eval(e, make_rational(1, 1000));
    Interval tight = interval_eval(e, make_rational(1, 100000));
    CHECK(wide.contains(tight));
  }
}

TEST_CASE("property: sign_of agrees with enclosures that exclude 0") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    RadicalExpr e = random_tree(rng, 3) - random_tree(rng, 2);
    Interval iv = interval_eval(e, make_rational(1, 1000000));
    if (iv.contains_zero()) continue;
    CHECK(sign_of(e) == (iv.is_positive() ? 1 : -1));
  }
}

TEST_CASE("property: QSqrt3 arithmetic matches interval evaluation") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int i = 0; i < 200; ++i) {
    QSqrt3 x(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    QSqrt3 y(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    if (y.is_zero()) continue;
    RadicalExpr ex(x), ey(y);
    const Rational w = make_rational(1, 100000000);
    for (auto [q, e] : {std::pair{x + y, ex + ey}, {x - y, ex - ey}, {x * y, ex * ey}, {x / y, ex / ey}}) {
      CHECK(interval_eval(e, w).contains(Interval(q, 256)));
      CHECK(sign_of(e) == q.sign());
    }
  }
}

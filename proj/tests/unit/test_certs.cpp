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

#include <cmath>
#include <random>

#include "doctest.h"
#include "moebius/certs/statements.hpp"
#include "moebius/errors.hpp"
#include "moebius/poly/sturm.hpp"
#include "moebius/region/region.hpp"

using namespace moebius;

namespace {

RadicalExpr r(long n, long d = 1) { return RadicalExpr(make_rational(n, d)); }
RadicalExpr s3() { return sqrt3_expr(); }
QSqrt3 q(long n, long d = 1) { return QSqrt3(make_rational(n, d)); }

CertStep step(const CertReport& report, const std::string& anchor) {
  for (const auto& s : report.steps())
    if (s.anchor == anchor) return s;
  FAIL("no step named " << anchor);
  return {};
}

double psi_hat_double(double b, double t) {
  double T = std::sqrt(1 + t * t);
  return (2 + b * b + t * t + b * T - t * T) / (b - t + T) + b * (1 - 2 * b) / 3 - std::sqrt(3.0);
}

}  // namespace

TEST_CASE("expand_P reproduces the printed polynomial") {
  BivarPoly P = expand_P();
  CHECK(P == printed_P());
  CHECK(P.coefficient(6, 0) == q(4));
  CHECK(P.coefficient(5, 1) == q(-8));
  CHECK(P.coefficient(0, 2) == q(27));
  CHECK(P.evaluate(q(0), QSqrt3(Rational(0), make_rational(-1, 3))).is_zero());
  PolyComparison cmp = compare_P();
  CHECK(cmp.mismatches.empty());
  CHECK(cmp.factor == q(9));
}

TEST_CASE("comparison lists differing monomials") {
  BivarPoly printed = parse_bivar_poly("1 + b + b t");
  PolyComparison cmp = compare_to_printed(parse_bivar_poly("2 + 2 b + 4 b t + 2 t^2"), printed);
  CHECK(cmp.factor == q(1, 2));
  REQUIRE(cmp.mismatches.size() == 2);
  CHECK(cmp.mismatches[0].find("b^0 t^2") != std::string::npos);
  CHECK(cmp.mismatches[1].find("b^1 t^1") != std::string::npos);
}

TEST_CASE("statement 1 cascade") {
  CertReport report = statement1_certificate();
  CHECK(report.verified());
  CHECK(step(report, "P''' = 108 b").result);
  CHECK(step(report, "P'' on Z").payload["reference"] == "90*b^2 - 36*sqrt3*b + 54");
  for (const char* name : {"P'' > 0 on Z", "P' > 0 on Z", "P > 0 on Z"}) {
    CertStep s = step(report, name);
    CHECK(s.result);
    CHECK(s.payload["interior_roots"] == 0);
  }
  CHECK(step(report, "(3/4)P on Z differs from the printed bracket by 2 b^4 - 2 b^5").result);
}

TEST_CASE("statement 2: x < 1/18") {
  CertReport report = statement2_x_certificate();
  CHECK(report.verified());
  CHECK(printed_degree8().coefficient(0) == QSqrt3(Rational(379204871936L)));
  CHECK(printed_degree8().degree() == 8);
  CHECK(step(report, "no root in (0, 1/2]").payload["count"] == 0);
  double nearest = step(report, "closest root to [0, 1/2] near 0.624325").payload["nearest_root"];
  CHECK(std::abs(nearest - 0.624325) < 1e-6);
}

TEST_CASE("statement 2: |y| < 1/30 and the quartic's real roots") {
  CertReport report = statement2_y_certificate();
  CHECK(report.verified());
  CHECK(step(report, "quartic term by term").payload["factor"] == "-300");
  CHECK(step(report, "two real roots").payload["count"] == 2);
  // One negative and one positive root, near -2.44035 and 2.04222.
  CHECK(step(report, "real roots on (-inf, 0]").payload["count"] == 1);
  CHECK(step(report, "real roots on (0, +inf)").payload["count"] == 1);
  auto roots = isolate_roots(printed_quartic(), Bound::negative_infinity(), Bound::positive_infinity(),
                             make_rational(1, 1000000));
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0].midpoint() + 2.44035) < 1e-4);
  CHECK(std::abs(roots[1].midpoint() - 2.04222) < 1e-4);
}

TEST_CASE("statement 3 angle bounds") {
  CertReport report = statement3_certificate();
  CHECK(report.verified());
  CHECK(step(report, "top and bottom angles: arctan(4/3) > pi/4").result);
  CHECK(step(report, "left angle > pi/4").result);
  CHECK(step(report, "ratio at the right vertex in (1.125, 1.13)").result);
  double at_vertex = to_double(interval_eval(statement3_ratio_expr().substitute(Variable::kB, right_vertex_a()),
                                             make_rational(1, 1000000000))
                                   .lower());
  CHECK(std::abs(at_vertex - 1.12969) < 1e-5);
}

TEST_CASE("certificate lookup") {
  CHECK(certificate_ids().size() == 6);
  CHECK(certificate_by_id("statement1").id() == "statement1");
  CHECK_THROWS_AS(certificate_by_id("statement9"), std::invalid_argument);
}

TEST_CASE("const3_check examples") {
  TPatternMeasurements m;
  m.B = 1, m.T = 1, m.L1 = std::sqrt(2.0), m.R1 = 1;
  CHECK(const3_check(m, 1));
  m.L1 = 1, m.R1 = 0;
  CHECK_FALSE(const3_check(m, 1));
  m.B = 3, m.T = 4, m.L2 = 5, m.R2 = 0;
  CHECK(const3_check(m, 2));
  CHECK_THROWS_AS(const3_check(m, 3), std::invalid_argument);
}

TEST_CASE("s_bound examples") {
  CHECK(sign_of(s_lower_bound(r(0)) - s3()) == 0);
  CHECK(sign_of(s_lower_bound(r(1, 4)) - (s3() - r(1, 24))) == 0);
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1500);
  for (int i = 0; i < 40; ++i) {
    RadicalExpr b = r(num(rng), 1000);
    CHECK(sign_of(s_lower_bound(b) - (s3() - r(1, 24))) >= 0);
  }
  TPatternMeasurements m;
  m.b = 0.25, m.L1 = 1.0, m.R1 = 0.7;
  CHECK(s_bound(m, 1));  // 1.7 > sqrt3 - 1/24 = 1.6904
  m.R1 = 0.6;
  CHECK_FALSE(s_bound(m, 1));
}

TEST_CASE("hull triangle angles") {
  HullTriangle tri{1.0, 1.0, 0.0};
  CHECK(tri.is_triangle());
  CHECK(tri.top_angle() == doctest::Approx(std::atan(2.0)));
  CHECK(tri.top_angle() + tri.bottom_angle() + tri.apex_angle() == doctest::Approx(M_PI));
  HullTriangle flat{1.0, 1.0, 0.6};
  CHECK_FALSE(flat.is_triangle());
  // Worst case allowed on Omega: base 1, ratio 1.13, offset 1/8.
  HullTriangle worst{1.0, 1.13, 0.125};
  CHECK(worst.min_angle() > M_PI / 4);
}

TEST_CASE("property: every certificate replays and round-trips") {
  for (const auto& id : certificate_ids()) {
    CertReport report = certificate_by_id(id);
    CAPTURE(id);
    CHECK(report.verified());
    CHECK(replay(report));
    CertReport back = CertReport::from_json(nlohmann::json::parse(report.dump()));
    CHECK(back.dump() == report.dump());
    CHECK(certificate_by_id(id).dump() == report.dump());
  }
}

TEST_CASE("property: psi_hat = 0 forces P = 0") {
  // Bracket sign changes of psi_hat in t for fixed rational b, certify the
  // sign change exactly, then require a root of P(b, .) in the same bracket.
  const BivarPoly P = printed_P();
  int brackets = 0;
  for (long bn = -8; bn <= 12 && brackets < 20; ++bn) {
    const double b = bn / 8.0;
    const double step = 1.0 / 64;
    for (double t = -4; t < 4 && brackets < 20; t += step) {
      if (b - t + std::sqrt(1 + t * t) <= 0.05 || b - (t + step) + std::sqrt(1 + (t + step) * (t + step)) <= 0.05)
        continue;
      if ((psi_hat_double(b, t) > 0) == (psi_hat_double(b, t + step) > 0)) continue;
      const Rational lo = rational_from_double(t), hi = rational_from_double(t + step);
      SlopePoint plo = SlopePoint::rational(make_rational(bn, 8), lo);
      SlopePoint phi = SlopePoint::rational(make_rational(bn, 8), hi);
      int slo = sign_of(eval_psi_hat(plo)), shi = sign_of(eval_psi_hat(phi));
      if (slo * shi >= 0) continue;
      ++brackets;
      Poly in_t = P.at_b(q(bn, 8));
      CAPTURE(bn);
      CAPTURE(t);
      CHECK(SturmChain(in_t).count_roots(QSqrt3(lo), QSqrt3(hi)) >= 1);
    }
  }
  CHECK(brackets >= 5);
}

TEST_CASE("property: P nonzero implies psi_hat nonzero on Omega samples") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> bd(1, 469), td(-577, -180);
  const BivarPoly P = printed_P();
  int checked = 0;
  while (checked < 50) {
    Rational b = make_rational(bd(rng), 1000), t = make_rational(td(rng), 1000);
    if (omega_member(b, t) != Membership::kInside) continue;
    ++checked;
    CHECK(P.evaluate(QSqrt3(b), QSqrt3(t)).sign() > 0);
    CHECK(sign_of(eval_psi_hat(SlopePoint::rational(b, t))) != 0);
  }
}

TEST_CASE("property: psi stays above sqrt3 - 1/24 on Omega") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<long> bd(1, 469), td(-577, -180);
  int checked = 0;
  while (checked < 100) {
    Rational b = make_rational(bd(rng), 1000), t = make_rational(td(rng), 1000);
    if (omega_member(b, t) != Membership::kInside) continue;
    ++checked;
    CHECK(sign_of(eval_psi(SlopePoint::rational(b, t)) - (s3() - r(1, 24))) > 0);
  }
}

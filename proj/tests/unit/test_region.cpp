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

#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "moebius/errors.hpp"
#include "moebius/region/region.hpp"

using namespace moebius;

namespace {

RadicalExpr r(long n, long d = 1) { return RadicalExpr(make_rational(n, d)); }
RadicalExpr s3() { return sqrt3_expr(); }
SlopePoint anchor() { return SlopePoint(r(0), -r(1) / s3()); }
double approx(const RadicalExpr& e) { return interval_eval(e, make_rational(1, 1000000000)).midpoint_double(); }

}  // namespace

TEST_CASE("f at the anchor points") {
  CHECK(sign_of(eval_f(anchor()) - s3()) == 0);
  CHECK(sign_of(eval_f(SlopePoint::rational(0, 0)) - r(1)) == 0);
  CHECK(approx(eval_f(SlopePoint::rational(make_rational(1, 5), make_rational(-2, 5)))) ==
        doctest::Approx(1.67703).epsilon(1e-5));
}

TEST_CASE("g at the anchor points") {
  CHECK(sign_of(eval_g(anchor()) - s3()) == 0);
  for (long n : {0, 1, 3, -7}) {
    RadicalExpr b = r(n, 4);
    RadicalExpr gbb = eval_g(SlopePoint(b, b));
    CHECK(sign_of(gbb - sqrt(r(5)) * sqrt(r(1) + b * b)) == 0);
  }
  CHECK(approx(eval_g(SlopePoint::rational(make_rational(1, 5), make_rational(-2, 5)))) ==
        doctest::Approx(1.70651).epsilon(1e-5));
}

TEST_CASE("psi and psi-hat") {
  CHECK(sign_of(eval_psi(anchor()) - s3()) == 0);
  CHECK(sign_of(eval_psi_hat(anchor())) == 0);
  CHECK(sign_of(eval_psi(SlopePoint::rational(0, 0)) - r(2)) == 0);
  CHECK(sign_of(slack_term(r(1, 4)) - r(1, 24)) == 0);
  // b = -3/4, t = 7/24: T = 25/24 = t - b.
  CHECK_THROWS_AS(eval_psi(SlopePoint::rational(make_rational(-3, 4), make_rational(7, 24))), DenominatorZero);
}

TEST_CASE("symbolic constraint functions agree with the point forms") {
  SlopePoint p = SlopePoint::rational(make_rational(1, 7), make_rational(-3, 8));
  CHECK(sign_of(at_point(f_expr(), p) - eval_f(p)) == 0);
  CHECK(sign_of(at_point(g_expr(), p) - eval_g(p)) == 0);
  CHECK(sign_of(at_point(psi_hat_expr(), p) - eval_psi_hat(p)) == 0);
}

TEST_CASE("membership") {
  CHECK(omega_member(make_rational(1, 5), make_rational(-2, 5)) == Membership::kInside);
  CHECK(omega_member(make_rational(1, 5), make_rational(-9, 20)) == Membership::kOutside);
  CHECK(omega_member(anchor()) == Membership::kBoundary);
  RadicalExpr a = right_vertex_a();
  CHECK(omega_member(SlopePoint(a, -a / r(2))) == Membership::kBoundary);
}

TEST_CASE("boundary branches") {
  const Rational w = make_rational(1, 1000000000000);
  Interval f0 = boundary_t(r(0), Branch::kF, w);
  Interval g0 = boundary_t(r(0), Branch::kG, w);
  double anchor_t = -1 / std::sqrt(3.0);
  CHECK(f0.lower_double() <= anchor_t + 1e-15);
  CHECK(f0.upper_double() >= anchor_t - 1e-15);
  CHECK(g0.lower_double() <= anchor_t + 1e-15);
  CHECK(g0.upper_double() >= anchor_t - 1e-15);
  RadicalExpr a = right_vertex_a();
  Interval fa = boundary_t(a, Branch::kF, w);
  double half_a = -approx(a) / 2;
  CHECK(fa.lower_double() <= half_a + 1e-12);
  CHECK(fa.upper_double() >= half_a - 1e-12);
  CHECK_THROWS_AS(boundary_t(r(2), Branch::kF, w), OutOfDomain);
  // Closed forms agree with bisection.
  Interval gq = boundary_t(r(1, 3), Branch::kG, make_rational(1, 1000000));
  double closed = approx(branch_graph(Branch::kG, r(1, 3)));
  CHECK(gq.lower_double() <= closed);
  CHECK(gq.upper_double() >= closed);
}

TEST_CASE("branch intersections") {
  auto pts = branch_intersections();
  REQUIRE(pts.size() == 2);
  CHECK(sign_of(pts[0].b) == 0);
  CHECK(sign_of(pts[0].t + r(1) / s3()) == 0);
  CHECK(pts[1].b_double() == doctest::Approx(0.4698819).epsilon(1e-6));
  CHECK(sign_of(pts[1].t + pts[1].b / r(2)) == 0);
}

TEST_CASE("trapezoid certificate") {
  CertReport rep = trapezoid_certificate();
  for (const auto& s : rep.steps()) INFO(s.anchor, " ", s.payload.dump());
  CHECK(rep.verified());
  bool saw_margin = false;
  for (const auto& s : rep.steps()) {
    if (!s.result) MESSAGE("failed step: " << s.anchor << " " << s.payload.dump());
    if (s.anchor.find("minimum margin") != std::string::npos) {
      saw_margin = true;
      double v = std::stod(s.payload.at("value").get<std::string>().substr(1));
      CHECK(v > 1e-5);
      CHECK(v < 5e-5);
    }
  }
  CHECK(saw_margin);
  CHECK(replay(rep));
  CHECK(CertReport::from_json(rep.to_json()).dump() == rep.dump());
}

TEST_CASE("plot of Omega") {
  const std::string path = "omega_test.svg";
  OmegaPlot plot = plot_omega(64, path);
  CHECK(plot.samples == 64 * 64);
  CHECK_FALSE(plot.inside_points.empty());
  const double a = 0.4698819;
  for (auto [b, t] : plot.inside_points) {
    CHECK(b > 0);
    CHECK(b < a);
    CHECK(t < 0);
    CHECK(in_trapezoid(b, t));
  }
  std::ifstream in(path);
  std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  std::remove(path.c_str());
  CHECK_THROWS(plot_omega(8, path));
}

TEST_CASE("property: derivative signs of f and g in t") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> n(-300, 300);
  RadicalExpr dft = f_expr().differentiate(Variable::kT);
  RadicalExpr dgt = g_expr().differentiate(Variable::kT);
  for (int i = 0; i < 100; ++i) {
    SlopePoint p = SlopePoint::rational(make_rational(n(rng), 97), make_rational(n(rng), 89));
    CHECK(sign_of(at_point(dft, p)) == -1);
    CHECK(sign_of(at_point(dgt, p)) == 1);
    // Correct form of the g derivative: 1 + t / sqrt(5 + 4b^2 + t^2).
    RadicalExpr closed = r(1) + p.t / sqrt(r(5) + r(4) * p.b * p.b + p.t * p.t);
    CHECK(sign_of(at_point(dgt, p) - closed) == 0);
  }
}

TEST_CASE("property: inside points have b > 0, t < 0, and lie in the trapezoid") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> bn(-50, 600), tn(-700, -100);
  int inside = 0;
  for (int i = 0; i < 4000 && inside < 100; ++i) {
    Rational b = make_rational(bn(rng), 1000), t = make_rational(tn(rng), 1000);
    if (omega_member(b, t) != Membership::kInside) continue;
    ++inside;
    CHECK(b > 0);
    CHECK(t < 0);
    CHECK(in_trapezoid(to_double(b), to_double(t)));
  }
  CHECK(inside == 100);
}

TEST_CASE("property: membership changes at most twice along vertical rays") {
  for (int i = 1; i < 47; i += 3) {
    Rational b = make_rational(i, 100);
    int changes = 0;
    Membership prev = omega_member(b, make_rational(-70, 100));
    for (int j = -699; j <= -100; ++j) {
      Membership m = omega_member(b, make_rational(j, 1000));
      if (m != prev) ++changes;
      prev = m;
    }
    CHECK(changes <= 2);
  }
}

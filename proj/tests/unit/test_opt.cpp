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
#include "moebius/opt/lambda_opt.hpp"
#include "moebius/region/region.hpp"

using namespace moebius;

namespace {

RadicalExpr r(long n, long d = 1) { return RadicalExpr(make_rational(n, d)); }
RadicalExpr s3() { return sqrt3_expr(); }

constexpr double kLambda1 = 1.6949731712249416522;

}  // namespace

TEST_CASE("beta: removable singularity, hand value, domain end") {
  CHECK(sign_of(beta(-r(1) / s3())) == 0);
  CHECK(sign_of(beta(r(0)) - r(1)) == 0);
  CHECK_THROWS_AS(beta(r(1) / s3()), OutOfDomain);
  CHECK_THROWS_AS(beta(r(1)), OutOfDomain);
}

TEST_CASE("phi_star examples") {
  CHECK(sign_of(phi_star(-r(1) / s3()) - s3()) == 0);
  CHECK(sign_of(phi_star(r(0)) - r(2)) == 0);
  CHECK(sign_of(phi_star(t0_closed_form()) - lambda1_closed_form()) == 0);
  CHECK_THROWS_AS(phi_star(r(3, 5)), OutOfDomain);
}

TEST_CASE("phi_star agrees with the quotient form away from the singularity") {
  for (long n : {-7, -3, -1, 1, 2}) {
    RadicalExpr t = r(n, 5);
    RadicalExpr T = sqrt(r(1) + t * t);
    RadicalExpr quotient = r(2) * T * (t * t - t * T - r(1)) / (r(3) * t * t - r(1));
    CHECK(sign_of(phi_star(t) - quotient) == 0);
    CHECK(sign_of(phi_star(t) - eval_f(SlopePoint(beta(t), t))) == 0);
  }
}

TEST_CASE("critical point: enclosure and certificate") {
  CertReport report("critical point");
  Interval t0 = critical_point(&report);
  // The printed value -0.39332 is rounded; t0 = -0.3933198...
  CHECK(t0.lower_double() > -0.39332 - 1e-5);
  CHECK(t0.upper_double() < -0.39332 + 1e-5);
  CHECK(t0.lower_double() < -0.3933198);
  CHECK(t0.upper_double() > -0.3933199);
  CHECK(t0.width_double() < 1e-12);
  CHECK(report.verified());
  CHECK(replay(report));
  int extraneous = 0;
  for (const auto& s : report.steps())
    if (s.kind == "positive_over") ++extraneous;
  CHECK(extraneous == 1);
}

TEST_CASE("lambda1 at width 1e-12") {
  OptimizationResult res = lambda1(make_rational(1, 1000000000000));
  CHECK(res.lambda1.width() <= make_rational(1, 1000000000000));
  CHECK(res.lambda1.lower_double() > kLambda1 - 1e-12);
  CHECK(res.lambda1.upper_double() < kLambda1 + 1e-12);
  CHECK(res.lambda1.lower_double() > 1.69497);
  CHECK(res.certificate.verified());
  CHECK(replay(res.certificate));
  CHECK(abs(res.oracle_min - res.lambda1.lower()) <= oracle_error_bound(res.oracle_step));
  CHECK(sign_of(res.lambda1_closed_form - (s3() - r(1, 26))) == 1);
  CHECK(sign_of(res.lambda1_closed_form - (r(1) + sqrt(r(5))) / r(2)) == 1);
  auto back = CertReport::from_json(res.certificate.to_json());
  CHECK(back.to_json() == res.certificate.to_json());
}

TEST_CASE("grid oracle examples") {
  Rational fine = grid_min_oracle({Rational(-1), Rational(1)}, {Rational(-1), Rational(0)}, make_rational(1, 1000));
  CHECK(std::abs(to_double(fine) - kLambda1) < 1e-3);
  CHECK(to_double(fine) >= kLambda1 - 1e-12);
  Rational coarse = grid_min_oracle({Rational(-1), Rational(1)}, {Rational(-1), Rational(0)}, make_rational(1, 10));
  CHECK(coarse >= fine);
  Rational diag = diagonal_min_oracle({Rational(0), Rational(1)}, make_rational(1, 100));
  CHECK(std::abs(to_double(diag) - std::sqrt(5.0)) < 1e-12);
  CHECK_THROWS_AS(grid_min_oracle({Rational(0), Rational(1)}, {Rational(0), Rational(1)}, Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("property: grid oracle approaches lambda1 as the step shrinks") {
  double prev = 1e9;
  for (long n : {5, 10, 20, 40, 80, 160}) {
    double m = to_double(grid_min_oracle({Rational(-1), Rational(1)}, {Rational(-1), Rational(0)}, make_rational(1, n)));
    CHECK(m >= kLambda1 - 1e-12);
    CHECK(m <= prev + 1e-15);
    CHECK(m - kLambda1 <= to_double(oracle_error_bound(make_rational(1, n))));
    prev = m;
  }
}

TEST_CASE("property: f = g on the curve b = beta(t)") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<long> num(-400, 57);
  for (int i = 0; i < 50; ++i) {
    RadicalExpr t = r(num(rng), 100);
    SlopePoint p(beta(t), t);
    CHECK(sign_of(eval_f(p) - eval_g(p)) == 0);
  }
}

TEST_CASE("property: phi_star stays above lambda1 on D*") {
  std::mt19937 rng(202);
  std::uniform_int_distribution<long> num(-50000, 5773);
  const RadicalExpr lam = lambda1_closed_form();
  for (int i = 0; i < 200; ++i) {
    RadicalExpr t = r(num(rng), 10000);
    CHECK(sign_of(phi_star(t) - lam) >= 0);
  }
}

TEST_CASE("property: max(f, g) >= lambda1 on D") {
  std::mt19937 rng(303);
  std::uniform_int_distribution<long> num(-3000, 3000);
  const RadicalExpr lam = lambda1_closed_form();
  for (int i = 0; i < 500; ++i) {
    long b = num(rng), t = num(rng);
    if (b < t) std::swap(b, t);
    SlopePoint p = SlopePoint::rational(make_rational(b, 1000), make_rational(t, 1000));
    bool above = sign_of(eval_f(p) - lam) >= 0 || sign_of(eval_g(p) - lam) >= 0;
    CHECK(above);
  }
}

TEST_CASE("property: sampled points of Omega have b > 0 and t < 0") {
  // Checked empirically on a grid, not proved.
  int inside = 0;
  for (long i = -20; i <= 20; ++i)
    for (long j = -20; j <= 20; ++j) {
      Rational b = make_rational(i, 20), t = make_rational(j, 20);
      if (omega_member(b, t) != Membership::kInside) continue;
      ++inside;
      CHECK(b > 0);
      CHECK(t < 0);
    }
  CHECK(inside > 0);
}

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

// Acceptance run: one line per criterion, exit status 1 when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "moebius/band/approx.hpp"
#include "moebius/band/generate.hpp"
#include "moebius/band/locus.hpp"
#include "moebius/band/ridge.hpp"
#include "moebius/band/tpattern.hpp"
#include "moebius/certs/statements.hpp"
#include "moebius/errors.hpp"
#include "moebius/opt/lambda_opt.hpp"
#include "moebius/poly/sturm.hpp"
#include "moebius/region/region.hpp"

using namespace moebius;

namespace {

using std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

const CertStep* find_step(const CertReport& report, const std::string& anchor) {
  for (const auto& s : report.steps())
    if (s.anchor == anchor) return &s;
  return nullptr;
}

bool step_ok(const CertReport& report, const std::string& anchor) {
  const CertStep* s = find_step(report, anchor);
  return s && s->result;
}

RadicalExpr r(long n, long d = 1) { return RadicalExpr(make_rational(n, d)); }

EmbeddedBand triangle() {
  BandSpec spec = parse_band_spec(std::string(MOEBIUS_TEST_DATA) + "/triangle.json");
  return fold(spec.flat, spec.dihedrals);
}

Outcome lambda1_enclosure() {
  const Rational width = make_rational(1, 1000000000000);
  OptimizationResult res = lambda1(width);
  bool narrow = res.lambda1.width() <= width;
  bool digits = res.lambda1.lower_double() > 1.694970 && res.lambda1.upper_double() < 1.694980;
  bool exact = sign_of(phi_star(t0_closed_form()) - res.lambda1_closed_form) == 0;
  std::ostringstream d;
  d << "enclosure " << res.lambda1.to_string(16) << ", width " << res.lambda1.width_double()
    << ", phi*(t0) - lambda1 sign " << (exact ? "0" : "nonzero");
  return {narrow && digits && exact && res.certificate.verified(), d.str()};
}

Outcome critical_point_unique() {
  CertReport report("critical point");
  Interval t0 = critical_point(&report);
  bool near = t0.lower_double() > -0.39332 - 1e-5 && t0.upper_double() < -0.39332 + 1e-5;
  const CertStep* s = find_step(report, "dphi*/dt: one genuine critical point, containing -sqrt(2/sqrt3 - 1)");
  int candidates = s ? s->payload.value("candidates", -1) : -1;
  int genuine = s ? s->payload.value("genuine", -1) : -1;
  std::ostringstream d;
  d << "t0 in " << t0.to_string(12) << ", Sturm candidates " << candidates << ", roots of the derivative "
    << genuine;
  return {near && genuine == 1 && report.verified(), d.str()};
}

Outcome grid_oracle() {
  Rational m = grid_min_oracle({Rational(-1), Rational(1)}, {Rational(-1), Rational(0)}, make_rational(1, 1000));
  Interval lam = interval_eval(lambda1_closed_form(), make_rational(1, 1000000000000));
  double gap = std::abs(to_double(m) - lam.lower_double());
  std::ostringstream d;
  d << "grid minimum " << to_double(m) << ", distance to lambda1 " << gap;
  return {gap <= 1e-3, d.str()};
}

Outcome trapezoid() {
  CertReport rep = trapezoid_certificate();
  auto pts = branch_intersections();
  bool points = pts.size() == 2 && sign_of(pts[0].b) == 0 && sign_of(pts[0].t + r(1) / sqrt3_expr()) == 0 &&
                sign_of(pts[1].t + pts[1].b / r(2)) == 0 &&
                sign_of(pts[1].b - (sqrt(r(27)) - sqrt(r(11))) / r(4)) == 0;
  double a = pts.size() == 2 ? pts[1].b_double() : 0;
  double margin = -1;
  const CertStep* s = find_step(rep, "upper line: minimum margin above sqrt3 in (1e-5, 5e-5)");
  if (s) margin = std::stod(s->payload.at("value").get<std::string>().substr(1));
  bool in_range = margin > 1e-5 && margin < 5e-5;
  std::ostringstream d;
  d << "a = " << a << ", margin " << margin << ", certificate " << rep.status();
  return {points && std::abs(a - 0.4698) < 1e-4 && in_range && rep.verified(), d.str()};
}

Outcome printed_P_match() {
  PolyComparison cmp = compare_P();
  BivarPoly P = expand_P();
  bool terms = P.coefficient(6, 0) == QSqrt3(Rational(4)) && P.coefficient(0, 2) == QSqrt3(Rational(27));
  std::ostringstream d;
  d << "mismatches " << cmp.mismatches.size() << ", 4 b^6 and 27 t^2 " << (terms ? "present" : "missing");
  return {cmp.matches() && terms && P == printed_P(), d.str()};
}

Outcome statement1() {
  CertReport rep = statement1_certificate();
  bool ok = step_ok(rep, "P''' = 108 b");
  int roots = 0;
  for (const char* name : {"P'' > 0 on Z", "P' > 0 on Z", "P > 0 on Z"}) {
    const CertStep* s = find_step(rep, name);
    ok = ok && s && s->result;
    if (s) roots += s->payload.value("interior_roots", 1);
  }
  std::ostringstream d;
  d << "P''' = 108 b " << (step_ok(rep, "P''' = 108 b") ? "holds" : "fails") << ", interior roots " << roots;
  return {ok && roots == 0 && rep.verified(), d.str()};
}

Outcome statement2() {
  CertReport x = statement2_x_certificate();
  CertReport y = statement2_y_certificate();
  bool deg8 = printed_degree8().degree() == 8 &&
              printed_degree8().coefficient(0) == QSqrt3(Rational(379204871936L)) &&
              step_ok(x, "degree-8 polynomial term by term");
  const CertStep* none = find_step(x, "no root in (0, 1/2]");
  int in_half = none ? none->payload.value("count", -1) : -1;
  // The endpoint 0 is outside the half-open interval; the polynomial does not
  // vanish there either.
  bool zero_ok = printed_degree8().sign_at(QSqrt3(Rational(0))) != 0;
  const CertStep* near = find_step(x, "closest root to [0, 1/2] near 0.624325");
  double nearest = near ? near->payload.value("nearest_root", 0.0) : 0.0;

  bool quartic = step_ok(y, "quartic term by term");
  auto roots = isolate_roots(printed_quartic(), Bound::negative_infinity(), Bound::positive_infinity(),
                             make_rational(1, 1000000));
  int negative = 0;
  for (const auto& root : roots)
    if (root.hi.sign() < 0) ++negative;
  std::ostringstream d;
  d << "degree 8 " << (deg8 ? "matches" : "differs") << ", roots in [0, 1/2] " << in_half << ", nearest "
    << nearest << "; quartic " << (quartic ? "matches" : "differs") << ", real roots " << roots.size()
    << ", negative " << negative;
  for (const auto& root : roots) d << " [" << root.midpoint() << "]";
  bool ok = deg8 && in_half == 0 && zero_ok && std::abs(nearest - 0.624325) < 1e-6 && x.verified() && quartic &&
            roots.size() == 2 && negative == 2;
  return {ok, d.str()};
}

Outcome statement3() {
  CertReport rep = statement3_certificate();
  double at_vertex = to_double(
      interval_eval(statement3_ratio_expr().substitute(Variable::kB, right_vertex_a()), make_rational(1, 1000000000))
          .lower());
  bool angles = step_ok(rep, "top and bottom angles: arctan(4/3) > pi/4") && step_ok(rep, "left angle > pi/4");
  bool ratio = step_ok(rep, "ratio at the right vertex in (1.125, 1.13)");
  std::ostringstream d;
  d << "ratio at the right vertex " << at_vertex << ", arctan(4/3) - pi/4 = " << std::atan(4.0 / 3) - pi / 4;
  return {angles && ratio && at_vertex > 1.125 && at_vertex < 1.13 && rep.verified(), d.str()};
}

Outcome triangle_ridge() {
  EmbeddedBand e = triangle();
  RidgeCurve rc = ridge_curve(e);
  RidgeReport rep = ridge_invariant_report(rc, e.flat().lambda());
  double B = rc.start.norm();
  bool ends = std::abs(rc.start.x() - B) < 1e-9 && (rc.vertices.back() + rc.start).norm() < 1e-9 &&
              std::abs(rc.start.y()) < 1e-9 && std::abs(rc.start.z()) < 1e-9;
  bool length = std::abs(rc.length() - 2 * std::sqrt(3.0)) < 1e-9;
  std::ostringstream d;
  d << "length " << rc.length() << ", B " << B << ", clearance " << rep.min_vertex_norm << ", projection "
    << rep.projection_length << ", lambda > pi/2 " << (rep.half_pi_bound ? "yes" : "no");
  return {ends && length && rep.clearance_ok && rep.projection_ok && rep.half_pi_bound && rep.all_ok(), d.str()};
}

Outcome locus_parity() {
  int odd = 0, invariant = 0, total = 0;
  std::ostringstream counts;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomBand rb = random_closed_band(seed);
    if (!(rb.flat.lambda() < 7 * pi / 12)) continue;
    PerpLocus locus = perp_pair_locus(rb.band);
    ++total;
    int n = locus.essential_count();
    if (n % 2 == 1) ++odd;
    if (locus.has_iota_invariant_essential()) ++invariant;
    counts << n;
  }
  std::ostringstream d;
  d << total << " bands, odd " << odd << ", iota-invariant " << invariant << ", counts " << counts.str();
  return {total == 20 && odd == 20 && invariant == 20, d.str()};
}

Outcome tpattern_properties() {
  int measured = 0, violations = 0, in_omega = 0, fine = 0;
  auto check = [&](const EmbeddedBand& e) {
    TPatternSearch s = find_t_pattern(e);
    if (!s.found()) return;
    TPatternReport rep;
    try {
      rep = measure_t_pattern(e, *s.pattern);
    } catch (const InvalidPattern&) {
      return;
    }
    ++measured;
    bool ok = rep.constraint1 && rep.constraint2 && rep.const3[0] && rep.const3[1];
    if (rep.fine_applies) {
      ++fine;
      ok = ok && rep.s_bound_ok[0] && rep.s_bound_ok[1];
    }
    ZeroSlopeCount z = zero_slope_bends(e, *s.pattern, rep);
    if (z.applies) {
      ++in_omega;
      ok = ok && z.at_least_two;
    }
    if (!ok) ++violations;
  };
  check(triangle());
  for (std::uint64_t seed = 1; seed <= 240; ++seed) {
    try {
      check(random_closed_band(seed).band);
    } catch (const RetriesExhausted&) {
    }
  }
  std::ostringstream d;
  d << measured << " measured patterns, " << violations << " violations, " << fine
    << " with lambda <= sqrt3, " << in_omega << " with (b, t) in Omega";
  return {measured > 1 && violations == 0, d.str()};
}

Outcome cone_approximation() {
  ConePatch cone;
  std::vector<double> K;
  for (int n : {8, 16, 32}) K.push_back(approximate_smooth(cone.samples(n), cone).K);
  std::ostringstream d;
  d << "K(8) " << K[0] << ", K(16) " << K[1] << ", K(32) " << K[2];
  return {K[0] > K[1] && K[1] > K[2] && K[2] < 1.01, d.str()};
}

struct Criterion {
  int number;
  const char* title;
  double time_limit;  // seconds, 0 when none is set
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "lambda1 enclosure", 5, lambda1_enclosure},
      {2, "unique critical point t0", 5, critical_point_unique},
      {3, "grid oracle near lambda1", 60, grid_oracle},
      {4, "trapezoid certificate", 0, trapezoid},
      {5, "expand_P matches the printed P", 0, printed_P_match},
      {6, "statement 1 cascade", 0, statement1},
      {7, "statement 2 polynomials", 0, statement2},
      {8, "statement 3 angle bounds", 0, statement3},
      {9, "triangle ridge invariants", 1, triangle_ridge},
      {10, "perpendicular locus parity", 0, locus_parity},
      {11, "measured T-pattern inequalities", 0, tpattern_properties},
      {12, "cone approximation", 10, cone_approximation},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d %s: %s (%.2f s) %s\n", c.number, o.pass ? "PASS" : "FAIL", c.title, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

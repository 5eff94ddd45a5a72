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

#include "moebius/opt/lambda_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "moebius/errors.hpp"
#include "moebius/poly/bivar_poly.hpp"
#include "moebius/poly/elimination.hpp"
#include "moebius/poly/sturm.hpp"
#include "moebius/region/region.hpp"
#include "region/region_internal.hpp"

namespace moebius {

using nlohmann::json;

namespace {

RadicalExpr c(long n, long d = 1) { return RadicalExpr(make_rational(n, d)); }
RadicalExpr S3() { return sqrt3_expr(); }
RadicalExpr var_t() { return RadicalExpr::variable(Variable::kT); }

// 1/sqrt3 = sqrt3/3, the right end of D*.
QSqrt3 domain_end() { return QSqrt3(Rational(0), make_rational(1, 3)); }

void require_in_domain(const RadicalExpr& t) {
  if (detail::quick_sign(t - RadicalExpr(domain_end())) >= 0)
    throw OutOfDomain("t must lie in D* = (-inf, 1/sqrt3); got " + t.to_string());
}

RadicalExpr phi_star_of(const RadicalExpr& t) {
  RadicalExpr T = sqrt(c(1) + t * t);
  return c(2) * T / (c(1) - t * t - t * T);
}

}  // namespace

RadicalExpr beta(const RadicalExpr& t) {
  require_in_domain(t);
  RadicalExpr den = c(3) * t * t - c(1);
  // Inside D* the denominator only vanishes at t = -1/sqrt3.
  if (sign_of(den) == 0) return c(0);
  RadicalExpr T = sqrt(c(1) + t * t);
  return (t * t * t - T * T * T - c(3) * t) / den;
}

RadicalExpr phi_star(const RadicalExpr& t) {
  require_in_domain(t);
  return phi_star_of(t);
}

RadicalExpr phi_star_expr() {
  static const RadicalExpr e = phi_star_of(var_t());
  return e;
}

RadicalExpr t0_closed_form() { return -sqrt(c(2) / S3() - c(1)); }

RadicalExpr lambda1_closed_form() {
  RadicalExpr num = c(2) * sqrt(c(4) - c(2) * S3()) + c(4);
  RadicalExpr den = sqrt(c(2) * S3()) + c(2) * sqrt(c(2) * S3() - c(3));
  return num / den;
}

Interval critical_point(CertReport* report) {
  CertReport local("critical point");
  CertReport& out = report ? *report : local;
  const RadicalExpr d = phi_star_expr().differentiate(Variable::kT);
  Elimination e = eliminate_radicals(d);
  out.add("dphi*/dt: radical-free numerator", "elimination",
          {{"expr", d.to_string()},
           {"poly", BivarPoly::from_poly_in_t(e.polynomial).to_string()},
           {"eliminations", e.eliminations}},
          !e.identically_zero());
  if (e.identically_zero()) throw CertFailed("derivative of phi* eliminated to the zero polynomial");

  const QSqrt3 end = domain_end();
  SturmChain chain(e.polynomial);
  // count_roots works on (lo, hi]; D* is open at 1/sqrt3.
  int all = chain.count_roots(Bound::negative_infinity(), end);
  int candidates = all - (e.polynomial.sign_at(end) == 0 ? 1 : 0);
  out.add("dphi*/dt: candidate count in D*", "sturm_count",
          detail::sturm_payload(e.polynomial, Bound::negative_infinity(), end, all), candidates > 0);

  const Rational width = make_rational(1, 1000000000) * make_rational(1, 1000000);
  auto roots = isolate_roots(e.polynomial, Bound::negative_infinity(), end, width);
  json listed = json::array();
  for (const auto& r : roots) listed.push_back({r.lo.to_string(), r.hi.to_string()});
  out.add("dphi*/dt: isolated candidates", "isolation",
          {{"poly", e.polynomial.to_string()},
           {"variable", "t"},
           {"lo", "-inf"},
           {"hi", end.to_string()},
           {"width", to_string(width)},
           {"roots", listed}},
          true);

  // Squaring away T introduces the conjugate branch; its roots show up as
  // candidates where the derivative itself is bounded away from zero.
  const RadicalExpr t0 = t0_closed_form();
  const Interval t0_iv = interval_eval(t0, width / 16);
  std::vector<RootInterval> genuine;
  for (const auto& r : roots) {
    if (r.hi == end) continue;
    Interval dv = enclose_over(d, Variable::kT, r.lo, r.hi);
    if (auto s = dv.certain_sign()) {
      out.add("dphi*/dt: extraneous candidate near " + std::to_string(r.midpoint()), "positive_over",
              {{"expr", d.to_string()},
               {"variable", "t"},
               {"sign", *s},
               {"lo", r.lo.to_string()},
               {"hi", r.hi.to_string()},
               {"value", dv.to_string(12)}},
              true);
      continue;
    }
    genuine.push_back(r);
  }
  bool located = genuine.size() == 1 && hull(Interval(genuine[0].lo, 256), Interval(genuine[0].hi, 256)).contains(t0_iv);
  out.add("dphi*/dt: one genuine critical point, containing -sqrt(2/sqrt3 - 1)", "note",
          {{"candidates", candidates}, {"genuine", static_cast<int>(genuine.size())}, {"t0", t0_iv.to_string(15)}},
          located);
  detail::add_sign_step(out, "dphi*/dt vanishes at -sqrt(2/sqrt3 - 1)", d.substitute(Variable::kT, t0), 0);
  if (!located) throw CertFailed("could not isolate a unique critical point of phi* in D*");
  return hull(Interval(genuine[0].lo, 256), Interval(genuine[0].hi, 256));
}

OptimizationResult lambda1(const Rational& width) {
  if (width <= 0) throw std::invalid_argument("lambda1: width must be positive");
  CertReport report("lambda1");
  const RadicalExpr t0 = t0_closed_form();
  const RadicalExpr closed = lambda1_closed_form();
  const RadicalExpr d = phi_star_expr().differentiate(Variable::kT);

  Interval t0_iv = critical_point(&report);
  // One sign change of the derivative: decreasing before t0, increasing after.
  detail::add_sign_step(report, "phi* decreasing at t = -1", d.substitute(Variable::kT, c(-1)), -1);
  detail::add_sign_step(report, "phi* increasing at t = 1/2", d.substitute(Variable::kT, c(1, 2)), 1);
  detail::add_sign_step(report, "phi* blows up at 1/sqrt3: denominator vanishes",
                        (c(1) - var_t() * var_t() - var_t() * sqrt(c(1) + var_t() * var_t()))
                            .substitute(Variable::kT, c(1) / S3()),
                        0);
  detail::add_sign_step(report, "phi*(t0) equals the closed form", phi_star_of(t0) - closed, 0);
  detail::add_sign_step(report, "f = g on the curve b = beta(t) at t0",
                        at_point(f_expr() - g_expr(), SlopePoint(beta(t0), t0)), 0);
  detail::add_sign_step(report, "phi*(-1/sqrt3) = sqrt3", phi_star_of(-c(1) / S3()) - S3(), 0);
  detail::add_sign_step(report, "lambda1 > sqrt3 - 1/26", closed - (S3() - c(1, 26)), 1);
  detail::add_sign_step(report, "lambda1 > golden ratio", closed - (c(1) + sqrt(c(5))) / c(2), 1);

  Interval lam = interval_eval(closed, width);
  report.add("lambda1 enclosure", "enclosure",
             {{"expr", closed.to_string()},
              {"width", to_string(width)},
              {"lower", to_string(lam.lower() - width)},
              {"upper", to_string(lam.upper() + width)},
              {"value", lam.to_string(20)}},
             true);

  const Rational step = make_rational(1, 1000);
  Rational oracle = grid_min_oracle({Rational(-1), Rational(1)}, {Rational(-1), Rational(0)}, step);
  const Rational slack = oracle_error_bound(step);
  bool consistent = oracle >= lam.lower() - make_rational(1, 1000000000) && oracle <= lam.upper() + slack;
  report.add("grid oracle agrees with lambda1", "note",
             {{"oracle_min", to_string(oracle)}, {"step", to_string(step)}, {"error_bound", to_string(slack)}},
             consistent);

  return {t0_iv, lam, closed, oracle, step, report};
}

namespace {

std::vector<double> axis(const Range& r, const Rational& step) {
  if (step <= 0) throw std::invalid_argument("grid oracle: step must be positive");
  std::vector<double> out;
  for (Rational x = r.first; x <= r.second; x += step) out.push_back(to_double(x));
  return out;
}

double phi(double b, double t) {
  double f = b - t + std::sqrt(1 + t * t);
  double g = -b + t + std::sqrt(5 + 4 * b * b + t * t);
  return std::max(f, g);
}

}  // namespace

Rational grid_min_oracle(const Range& b_range, const Range& t_range, const Rational& step) {
  const std::vector<double> bs = axis(b_range, step);
  const std::vector<double> ts = axis(t_range, step);
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  std::vector<double> best(workers, std::numeric_limits<double>::infinity());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < bs.size(); i += workers)
        for (double t : ts)
          if (bs[i] >= t) best[w] = std::min(best[w], phi(bs[i], t));
    });
  for (auto& th : pool) th.join();
  double m = *std::min_element(best.begin(), best.end());
  if (!std::isfinite(m)) throw OutOfDomain("grid oracle: the box has no grid point with b >= t");
  return rational_from_double(m);
}

Rational diagonal_min_oracle(const Range& b_range, const Rational& step) {
  double m = std::numeric_limits<double>::infinity();
  for (double b : axis(b_range, step)) m = std::min(m, phi(b, b));
  return rational_from_double(m);
}

Rational oracle_error_bound(const Rational& step) { return make_rational(5, 2) * step; }

}  // namespace moebius

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

#include "moebius/region/region.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "moebius/errors.hpp"
#include "moebius/poly/elimination.hpp"
#include "moebius/poly/sturm.hpp"
#include "region_internal.hpp"

namespace moebius {

using nlohmann::json;

namespace {

RadicalExpr c(long n, long d = 1) { return RadicalExpr(make_rational(n, d)); }
RadicalExpr var_b() { return RadicalExpr::variable(Variable::kB); }
RadicalExpr var_t() { return RadicalExpr::variable(Variable::kT); }
RadicalExpr S3() { return sqrt3_expr(); }

}  // namespace

double SlopePoint::b_double() const { return interval_eval(b, make_rational(1, 1000000000)).midpoint_double(); }
double SlopePoint::t_double() const { return interval_eval(t, make_rational(1, 1000000000)).midpoint_double(); }

RadicalExpr f_expr() {
  static const RadicalExpr e = var_b() - var_t() + sqrt(c(1) + var_t() * var_t());
  return e;
}

RadicalExpr g_expr() {
  // 4B^2 + T^2 = 5 + 4b^2 + t^2.
  static const RadicalExpr e = -var_b() + var_t() + sqrt(c(5) + c(4) * var_b() * var_b() + var_t() * var_t());
  return e;
}

RadicalExpr psi_expr() {
  static const RadicalExpr e = [] {
    RadicalExpr T = sqrt(c(1) + var_t() * var_t());
    RadicalExpr b = var_b(), t = var_t();
    return (c(2) + b * b + t * t + b * T - t * T) / (b - t + T);
  }();
  return e;
}

RadicalExpr slack_term(const RadicalExpr& b) { return b * (c(1) - c(2) * b) / c(3); }

RadicalExpr psi_hat_expr() {
  static const RadicalExpr e = psi_expr() + slack_term(var_b()) - S3();
  return e;
}

RadicalExpr at_point(const RadicalExpr& expr, const SlopePoint& p) {
  return expr.substitute(Variable::kB, p.b).substitute(Variable::kT, p.t);
}

RadicalExpr eval_f(const SlopePoint& p) { return p.b - p.t + p.T(); }

RadicalExpr eval_g(const SlopePoint& p) {
  return -p.b + p.t + sqrt(c(5) + c(4) * p.b * p.b + p.t * p.t);
}

RadicalExpr eval_psi(const SlopePoint& p) {
  RadicalExpr T = p.T();
  RadicalExpr den = p.b - p.t + T;
  if (sign_of(den) == 0) throw DenominatorZero("b - t + T vanishes at the given slopes");
  return (c(2) + p.b * p.b + p.t * p.t + p.b * T - p.t * T) / den;
}

RadicalExpr eval_psi_hat(const SlopePoint& p) { return eval_psi(p) + slack_term(p.b) - S3(); }

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::kInside:
      return "inside";
    case Membership::kOutside:
      return "outside";
    case Membership::kBoundary:
      return "boundary";
  }
  return "?";
}

namespace detail {

int quick_sign(const RadicalExpr& e) {
  try {
    Interval iv = interval_eval_at(e, 128);
    if (auto s = iv.certain_sign()) return *s;
  } catch (const DivisionByZero&) {
  }
  return sign_of(e);
}

}  // namespace detail

Membership omega_member(const SlopePoint& p) {
  int sf = detail::quick_sign(S3() - eval_f(p));
  int sg = detail::quick_sign(S3() - eval_g(p));
  if (sf < 0 || sg < 0) return Membership::kOutside;
  if (sf > 0 && sg > 0) return Membership::kInside;
  return Membership::kBoundary;
}

Membership omega_member(const Rational& b, const Rational& t) {
  const mpfr_prec_t p = 64;
  Interval bi(b, p), ti(t, p), one(Rational(1), p);
  Interval f = bi - ti + sqrt(one + ti * ti);
  Interval g = ti - bi + sqrt(Interval(Rational(5), p) + Interval(Rational(4), p) * bi * bi + ti * ti);
  Interval s3 = sqrt(Interval(Rational(3), p));
  if (f.upper() < s3.lower() && g.upper() < s3.lower()) return Membership::kInside;
  if (f.lower() > s3.upper() || g.lower() > s3.upper()) return Membership::kOutside;
  return omega_member(SlopePoint::rational(b, t));
}

RadicalExpr right_vertex_a() {
  static const RadicalExpr a = (sqrt(c(27)) - sqrt(c(11))) / c(4);
  return a;
}

std::vector<TrapezoidLine> trapezoid_lines() {
  return {
      {"upper_g_line", c(2, 3), c(-1, 2)},
      {"lower_f_line", c(2, 3), -c(1) / S3()},
      {"upper_slope_4_3_line", c(4, 3), -c(1) / S3()},
  };
}

bool in_trapezoid(double b, double t, double slack) {
  const double a = (std::sqrt(27.0) - std::sqrt(11.0)) / 4;
  const double inv_s3 = 1 / std::sqrt(3.0);
  return b >= -slack && b <= a + slack && t >= (2.0 / 3) * b - inv_s3 - slack && t <= (2.0 / 3) * b - 0.5 + slack &&
         t <= (4.0 / 3) * b - inv_s3 + slack;
}

RadicalExpr branch_graph(Branch branch, const RadicalExpr& b) {
  if (branch == Branch::kF) {
    // b - t + sqrt(1 + t^2) = sqrt3 with k = sqrt3 - b > 0 gives t = (1 - k^2)/(2k).
    RadicalExpr k = S3() - b;
    return (c(1) - k * k) / (c(2) * k);
  }
  // -b + t + sqrt(5 + 4b^2 + t^2) = sqrt3 gives t = -(2 + 3b^2 - 2 sqrt3 b)/(2(sqrt3 + b)).
  return -(c(2) + c(3) * b * b - c(2) * S3() * b) / (c(2) * (S3() + b));
}

Interval boundary_t(const RadicalExpr& b, Branch branch, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("boundary_t: width must be positive");
  int dom = sign_of(branch == Branch::kF ? S3() - b : S3() + b);
  if (dom <= 0)
    throw OutOfDomain(std::string("the ") + (branch == Branch::kF ? "f" : "g") +
                      " branch has no boundary point at this b");
  const RadicalExpr h_base = (branch == Branch::kF ? f_expr() : g_expr()) - S3();
  const RadicalExpr h_b = h_base.substitute(Variable::kB, b);
  // f decreases in t and g increases in t.
  const int dir = branch == Branch::kF ? -1 : 1;
  auto h_sign = [&](const Rational& t) { return detail::quick_sign(h_b.substitute(Variable::kT, RadicalExpr(t))); };

  double bd = interval_eval(b, make_rational(1, 1000000)).midpoint_double();
  Rational lo = rational_from_double(std::floor((2.0 / 3) * bd - 1));
  Rational hi = rational_from_double(std::ceil((4.0 / 3) * bd + 1));
  Rational step(1);
  int tries = 0;
  while (h_sign(lo) * dir > 0) {
    lo -= step;
    step *= 2;
    if (++tries > 60) throw NoSolution("boundary_t: no lower bracket found");
  }
  step = 1;
  while (h_sign(hi) * dir < 0) {
    hi += step;
    step *= 2;
    if (++tries > 120) throw NoSolution("boundary_t: no upper bracket found");
  }
  if (h_sign(lo) == 0) return Interval(lo, lo, 128);
  if (h_sign(hi) == 0) return Interval(hi, hi, 128);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int s = h_sign(mid);
    if (s == 0) return Interval(mid, mid, 128);
    if (s * dir < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Interval(lo, hi, std::max<mpfr_prec_t>(128, static_cast<mpfr_prec_t>(mpz_sizeinbase(hi.get_den_mpz_t(), 2) + 64)));
}

std::vector<SlopePoint> branch_intersections() {
  CertReport report("branch_intersections");
  detail::certify_branch_strip(report);
  if (!report.verified()) throw CertFailed("branch intersection certificate failed:\n" + report.dump());
  const RadicalExpr a = right_vertex_a();
  return {SlopePoint(c(0), -c(1) / S3()), SlopePoint(a, -a / c(2))};
}

// ---------------------------------------------------------------------------
// Certificates

namespace detail {

std::string poly_string(const Poly& p) { return p.to_string(); }

json sturm_payload(const Poly& p, const Bound& lo, const Bound& hi, int count) {
  return {{"poly", p.to_string()}, {"variable", p.variable()}, {"lo", lo.to_string()}, {"hi", hi.to_string()},
          {"count", count}};
}

bool add_sign_step(CertReport& report, const std::string& anchor, const RadicalExpr& expr, int expected) {
  int s = sign_of(expr);
  return report.add(anchor, "sign", {{"expr", expr.to_string()}, {"expected", expected}, {"observed", s}},
                    s == expected);
}

bool add_enclosure_step(CertReport& report, const std::string& anchor, const RadicalExpr& expr,
                        const Rational& lower, const Rational& upper, Interval* out) {
  const Rational width = make_rational(1, 1000000000) * make_rational(1, 1000000000);
  Interval iv = interval_eval(expr, width);
  if (out) *out = iv;
  bool ok = iv.lower() > lower && iv.upper() < upper;
  report.add(anchor, "enclosure",
             {{"expr", expr.to_string()},
              {"width", to_string(width)},
              {"lower", to_string(lower)},
              {"upper", to_string(upper)},
              {"value", iv.to_string(20)}},
             ok);
  return ok;
}

bool certify_positive_by_elimination(CertReport& report, const std::string& anchor, const RadicalExpr& expr,
                                     const QSqrt3& lo, const QSqrt3& hi) {
  Elimination e = eliminate_radicals(expr);
  report.add(anchor + ": elimination", "elimination",
             {{"expr", expr.to_string()},
              {"poly", BivarPoly::from_poly_in_b(e.polynomial).to_string()},
              {"eliminations", e.eliminations}},
             !e.identically_zero());
  if (e.identically_zero()) return false;
  SturmChain chain(e.polynomial);
  int n = chain.count_roots(lo, hi);
  report.add(anchor + ": no zero on (lo, hi]", "sturm_count", sturm_payload(e.polynomial, lo, hi, 0), n == 0);
  QSqrt3 mid = (lo + hi) * QSqrt3(make_rational(1, 2));
  RadicalExpr sample = expr.substitute(Variable::kB, RadicalExpr(mid));
  bool pos = add_sign_step(report, anchor + ": positive at the midpoint", sample, 1);
  return n == 0 && pos;
}

bool certify_min_positive(CertReport& report, const std::string& anchor, const RadicalExpr& expr, const QSqrt3& lo,
                          const QSqrt3& hi, std::vector<RootInterval>* critical) {
  bool ok = add_sign_step(report, anchor + ": positive at left end", expr.substitute(Variable::kB, RadicalExpr(lo)), 1);
  ok = add_sign_step(report, anchor + ": positive at right end", expr.substitute(Variable::kB, RadicalExpr(hi)), 1) &&
       ok;
  RadicalExpr d = expr.differentiate(Variable::kB);
  Elimination e = eliminate_radicals(d);
  ok = report.add(anchor + ": derivative elimination", "elimination",
                  {{"expr", d.to_string()},
                   {"poly", BivarPoly::from_poly_in_b(e.polynomial).to_string()},
                   {"eliminations", e.eliminations}},
                  !e.identically_zero()) &&
       ok;
  if (e.identically_zero()) return false;
  const Rational width = make_rational(1, 1000000000000);
  auto roots = isolate_roots(e.polynomial, lo, hi, width);
  json listed = json::array();
  for (const auto& r : roots) listed.push_back({r.lo.to_string(), r.hi.to_string()});
  report.add(anchor + ": candidate critical points", "isolation",
             {{"poly", e.polynomial.to_string()},
              {"variable", "b"},
              {"lo", lo.to_string()},
              {"hi", hi.to_string()},
              {"width", to_string(width)},
              {"roots", listed}},
             true);
  // The minimum over [lo, hi] is at an end or at a critical point, and every
  // critical point lies in one of the isolating intervals.
  for (const auto& r : roots) {
    Interval v = enclose_over(expr, r.lo, r.hi);
    ok = report.add(anchor + ": positive on candidate interval", "positive_over",
                    {{"expr", expr.to_string()}, {"lo", r.lo.to_string()}, {"hi", r.hi.to_string()},
                     {"value", v.to_string(12)}},
                    v.is_positive()) &&
         ok;
  }
  if (critical) *critical = roots;
  return ok;
}

void certify_branch_strip(CertReport& report) {
  const RadicalExpr b = var_b();
  // The closed forms really are the level sets, checked exactly at samples.
  for (long num : {-1, 0, 1, 2, 5}) {
    RadicalExpr bv = c(num, 5);
    SlopePoint pf(bv, branch_graph(Branch::kF, bv));
    SlopePoint pg(bv, branch_graph(Branch::kG, bv));
    add_sign_step(report, "strip: t_f solves f = sqrt3 at b = " + std::to_string(num) + "/5", eval_f(pf) - S3(), 0);
    add_sign_step(report, "strip: t_g solves g = sqrt3 at b = " + std::to_string(num) + "/5", eval_g(pg) - S3(), 0);
  }
  RadicalExpr diff = branch_graph(Branch::kG, b) - branch_graph(Branch::kF, b);
  Elimination e = eliminate_radicals(diff);
  report.add("strip: t_g - t_f numerator", "elimination",
             {{"expr", diff.to_string()}, {"poly", BivarPoly::from_poly_in_b(e.polynomial).to_string()}},
             !e.identically_zero());
  const QSqrt3 s3 = QSqrt3::sqrt3();
  SturmChain chain(e.polynomial);
  // Open interval (-sqrt3, sqrt3): drop a root at sqrt3 itself if present.
  int n = chain.count_roots(-s3, s3) - (e.polynomial.sign_at(s3) == 0 ? 1 : 0);
  report.add("strip: exactly two crossings for |b| < sqrt3", "sturm_count",
             sturm_payload(e.polynomial, Bound(-s3), Bound(s3), chain.count_roots(-s3, s3)), n == 2);
  const RadicalExpr a = right_vertex_a();
  add_sign_step(report, "strip: crossing at b = 0", diff.substitute(Variable::kB, c(0)), 0);
  add_sign_step(report, "strip: crossing at b = a", diff.substitute(Variable::kB, a), 0);
  add_sign_step(report, "strip: a < sqrt3", S3() - a, 1);
  add_sign_step(report, "strip: a > 0", a, 1);
  add_sign_step(report, "strip: f-branch point (0, -1/sqrt3)", branch_graph(Branch::kF, c(0)) + c(1) / S3(), 0);
  add_sign_step(report, "strip: f-branch point (a, -a/2)", branch_graph(Branch::kF, a) + a / c(2), 0);
  add_sign_step(report, "strip: g below f at b = -1", diff.substitute(Variable::kB, c(-1)), -1);
  add_sign_step(report, "strip: g below f at b = 1", diff.substitute(Variable::kB, c(1)), -1);
  add_sign_step(report, "strip: g above f at b = 1/5", diff.substitute(Variable::kB, c(1, 5)), 1);
  report.add("strip: outside |b| < sqrt3 one constraint exceeds sqrt3", "note",
             {{"argument", "f = b + (T - t) > b since T > t, and g > -b + (t + T) > -b since sqrt(4B^2 + T^2) > T "
                           "> -t; so f > sqrt3 when b >= sqrt3 and g > sqrt3 when b <= -sqrt3"}},
             true);
}

}  // namespace detail

CertReport trapezoid_certificate() {
  CertReport report("trapezoid");
  const RadicalExpr b = var_b();

  // (i) the vertical strip.
  detail::certify_branch_strip(report);

  // (ii) g on t = (2/3)b - 1/2 stays above sqrt3.
  RadicalExpr g_line = g_expr().substitute(Variable::kT, c(2, 3) * b - c(1, 2)) - S3();
  std::vector<RootInterval> critical;
  detail::certify_min_positive(report, "upper line t = (2/3)b - 1/2", g_line, QSqrt3(0), QSqrt3(make_rational(1, 2)),
                               &critical);
  const RadicalExpr b_star = (c(39) + sqrt(c(8151))) / c(520);
  detail::add_sign_step(report, "upper line: derivative vanishes at b = (39 + sqrt8151)/520",
                        g_line.differentiate(Variable::kB).substitute(Variable::kB, b_star), 0);
  bool located = false;
  Interval bs = interval_eval(b_star, make_rational(1, 1000000000000));
  for (const auto& r : critical)
    if (Interval(r.lo, 128).lower() <= bs.lower() && Interval(r.hi, 128).upper() >= bs.upper()) located = true;
  report.add("upper line: (39 + sqrt8151)/520 is the isolated critical point", "note",
             {{"b_star", bs.to_string(15)}, {"critical_points", static_cast<int>(critical.size())}},
             located && critical.size() == 1);
  detail::add_enclosure_step(report, "upper line: minimum margin above sqrt3 in (1e-5, 5e-5)",
                             g_line.substitute(Variable::kB, b_star), make_rational(1, 100000),
                             make_rational(5, 100000), nullptr);

  // (iii) f on t = (2/3)b - 1/sqrt3 stays above sqrt3 for b > 0.
  RadicalExpr f_line = f_expr().substitute(Variable::kT, c(2, 3) * b - c(1) / S3()) - S3();
  detail::certify_positive_by_elimination(report, "lower line t = (2/3)b - 1/sqrt3", f_line, QSqrt3(0),
                                          QSqrt3(make_rational(1, 2)));
  detail::add_sign_step(report, "lower line: infimum sqrt3 attained at b = 0", f_line.substitute(Variable::kB, c(0)),
                        0);

  // (iv) g on t = (4/3)b - 1/sqrt3 stays above sqrt3 for b > 0.
  RadicalExpr g_steep = g_expr().substitute(Variable::kT, c(4, 3) * b - c(1) / S3()) - S3();
  detail::certify_positive_by_elimination(report, "upper line t = (4/3)b - 1/sqrt3", g_steep, QSqrt3(0),
                                          QSqrt3(make_rational(1, 2)));
  detail::add_sign_step(report, "upper steep line: touches at b = 0", g_steep.substitute(Variable::kB, c(0)), 0);
  detail::add_sign_step(report, "strip bound a < 1/2 used for the line segments", c(1, 2) - right_vertex_a(), 1);
  return report;
}

// ---------------------------------------------------------------------------
// Plot

OmegaPlot plot_omega(int resolution, const std::string& path) {
  if (resolution < 16) throw std::invalid_argument("plot_omega: resolution must be at least 16");
  const double b0 = -0.05, b1 = 0.55, t0 = -0.65, t1 = -0.15;
  const double size = 600;
  auto X = [&](double b) { return (b - b0) / (b1 - b0) * size; };
  auto Y = [&](double t) { return (t1 - t) / (t1 - t0) * size * (t1 - t0) / (b1 - b0); };
  const double height = Y(t0);

  OmegaPlot plot;
  std::ostringstream cells;
  const double cw = size / resolution, ch = height / resolution;
  for (int i = 0; i < resolution; ++i) {
    // Exact rational cell centres.
    Rational b = make_rational(-1, 20) + make_rational(3 * (2 * i + 1), 10 * resolution);
    for (int j = 0; j < resolution; ++j) {
      Rational t = make_rational(-13, 20) + make_rational(2 * j + 1, 4 * resolution);
      ++plot.samples;
      if (omega_member(b, t) != Membership::kInside) continue;
      double bd = to_double(b), td = to_double(t);
      plot.inside_points.emplace_back(bd, td);
      cells << "<rect x=\"" << X(bd) - cw / 2 << "\" y=\"" << Y(td) - ch / 2 << "\" width=\"" << cw
            << "\" height=\"" << ch << "\"/>\n";
    }
  }

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << size << " " << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g fill=\"#7fa7d9\" stroke=\"none\">\n" << cells.str() << "</g>\n";
  const double a = (std::sqrt(27.0) - std::sqrt(11.0)) / 4, inv_s3 = 1 / std::sqrt(3.0);
  auto line = [&](double ba, double ta, double bb, double tb, const char* colour) {
    out << "<line x1=\"" << X(ba) << "\" y1=\"" << Y(ta) << "\" x2=\"" << X(bb) << "\" y2=\"" << Y(tb)
        << "\" stroke=\"" << colour << "\" stroke-width=\"1.5\"/>\n";
  };
  line(0, t0, 0, t1, "black");
  line(a, t0, a, t1, "black");
  line(b0, (2.0 / 3) * b0 - 0.5, b1, (2.0 / 3) * b1 - 0.5, "red");
  line(b0, (2.0 / 3) * b0 - inv_s3, b1, (2.0 / 3) * b1 - inv_s3, "green");
  line(b0, (4.0 / 3) * b0 - inv_s3, b1, (4.0 / 3) * b1 - inv_s3, "purple");
  for (auto [pb, pt] : {std::pair{0.0, -inv_s3}, std::pair{a, -a / 2}})
    out << "<circle cx=\"" << X(pb) << "\" cy=\"" << Y(pt) << "\" r=\"4\" fill=\"black\"/>\n";
  out << "</svg>\n";
  if (!out) throw std::runtime_error("failed writing " + path);
  return plot;
}

}  // namespace moebius

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

#include "moebius/certs/statements.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "moebius/errors.hpp"
#include "moebius/poly/elimination.hpp"
#include "moebius/poly/sturm.hpp"
#include "moebius/region/region.hpp"
#include "region/region_internal.hpp"

namespace moebius {

using nlohmann::json;

namespace {

const char* const kPrintedP =
    "4 b^6-8 b^5 t-16 b^5+20 b^4 t+12 sqrt3 b^4+12 b^4-24 sqrt3 b^3 t-8 b^3 t-24 sqrt3 b^3- 8 b^3"
    "+9 b^2 t^2+12 b^2 t+30 sqrt3 b^2 t-12 sqrt3 b^2+59 b^2+18 b t^3-42 b t-12 sqrt3 b+27 t^2+18 sqrt3 t+9";

const char* const kPrintedDegree8 =
    "379204871936 - 2821217402880 b - 3788174241792 b^2 + 59974706921472 b^3"
    " - 81516306161664 b^4 - 11284439629824 b^5 + 30126667530240 b^6 - 2821109907456 b^8";

const char* const kPrintedQuartic = "-300 b^4-40 sqrt3 b^2+1600 b^2-600 b+80 sqrt3-79";

// Restrictions of P's t-derivatives to Z, as printed.
const char* const kPrintedP2OnZ = "54 - 36 sqrt3 b + 90 b^2";
const char* const kPrintedP1OnZ = "b(12 + 12 b + 28 b^2 - 24 sqrt3 b^2) + b^4 (20 - 8 b)";
const char* const kPrintedThreeQuartersP =
    "b^2(21 - 12 sqrt3 + 18 b - 10 sqrt3 b + 12 b^2 - 8 sqrt3 b^2 - 2 b^2) + b^5 (2 sqrt3 - b)";

RadicalExpr c(long n, long d = 1) { return RadicalExpr(make_rational(n, d)); }
RadicalExpr S3() { return sqrt3_expr(); }
RadicalExpr var_b() { return RadicalExpr::variable(Variable::kB); }
RadicalExpr var_t() { return RadicalExpr::variable(Variable::kT); }

QSqrt3 q(long n, long d = 1) { return QSqrt3(make_rational(n, d)); }

// Z for statement 1: t = (2/3) b - 1/sqrt3, i.e. offset -sqrt3/3.
const QSqrt3 kZSlope = q(2, 3);
const QSqrt3 kZOffset = QSqrt3(Rational(0), make_rational(-1, 3));

std::string bstr(const Poly& p) { return BivarPoly::from_poly_in_b(p).to_string(); }

bool add_identity_step(CertReport& report, const std::string& anchor, const BivarPoly& computed,
                       const BivarPoly& reference, const QSqrt3& factor) {
  return report.add(anchor, "poly_identity",
                    {{"computed", computed.to_string()}, {"reference", reference.to_string()},
                     {"factor", factor.to_string()}},
                    computed == reference * BivarPoly(factor));
}

bool add_positivity_step(CertReport& report, const std::string& anchor, const Poly& p, const QSqrt3& lo,
                         const QSqrt3& hi) {
  PositivityCertificate cert = check_positive_on_segment(p, lo, hi);
  return report.add(anchor, "positivity",
                    {{"poly", p.to_string()},
                     {"lo", lo.to_string()},
                     {"hi", hi.to_string()},
                     {"interior_roots", cert.interior_roots},
                     {"chain_length", cert.chain_length}},
                    cert.verified);
}

bool add_count_step(CertReport& report, const std::string& anchor, const Poly& p, const Bound& lo, const Bound& hi,
                    int expected) {
  int n = SturmChain(p).count_roots(lo, hi);
  return report.add(anchor, "sturm_count", detail::sturm_payload(p, lo, hi, n), n == expected);
}

bool add_atan_step(CertReport& report, const std::string& anchor,
                   const std::vector<std::pair<Rational, RadicalExpr>>& terms, const Rational& pi_coef,
                   const Rational& constant) {
  const mpfr_prec_t prec = 256;
  json listed = json::array();
  Interval total = Interval::pi(prec) * Interval(pi_coef, prec) + Interval(constant, prec);
  for (const auto& [coef, arg] : terms) {
    listed.push_back({{"coef", to_string(coef)}, {"arg", arg.to_string()}});
    Interval a = interval_eval(arg, Rational(1, 1) / (Rational(1) << 200));
    total = total + Interval(coef, prec) * atan(a);
  }
  return report.add(anchor, "atan_sum",
                    {{"terms", listed},
                     {"pi_coef", to_string(pi_coef)},
                     {"constant", to_string(constant)},
                     {"precision", prec},
                     {"value", total.to_string(15)}},
                    total.is_positive());
}

// The trapezoid certificate is expensive enough to compute once per process.
const CertReport& cached_trapezoid() {
  static const CertReport report = trapezoid_certificate();
  return report;
}

bool add_trapezoid_dependency(CertReport& report, const std::string& anchor) {
  const CertReport& trap = cached_trapezoid();
  return report.add(anchor, "note", {{"depends_on", trap.id()}, {"status", trap.status()}}, trap.verified());
}

// Lines used by statements 2 and 3: t = (2/3) b - 1/2.
RadicalExpr upper_line_t(const RadicalExpr& b) { return c(2, 3) * b - c(1, 2); }

}  // namespace

BivarPoly printed_P() { return parse_bivar_poly(kPrintedP); }
Poly printed_degree8() { return parse_poly(kPrintedDegree8); }
Poly printed_quartic() { return parse_poly(kPrintedQuartic); }

PolyComparison compare_to_printed(const BivarPoly& computed, const BivarPoly& reference) {
  PolyComparison cmp;
  cmp.computed = computed;
  cmp.reference = reference;
  cmp.factor = QSqrt3(1);
  auto ref_terms = reference.terms();
  if (!ref_terms.empty()) {
    auto [i, j, rc] = ref_terms.front();
    for (const auto& [ti, tj, tc] : ref_terms)
      if (std::make_pair(ti, tj) < std::make_pair(i, j)) std::tie(i, j, rc) = std::tie(ti, tj, tc);
    QSqrt3 cc = computed.coefficient(i, j);
    if (!cc.is_zero()) cmp.factor = rc / cc;
  }
  BivarPoly scaled = computed * BivarPoly(cmp.factor);
  std::map<std::pair<int, int>, bool> seen;
  for (const auto& [i, j, v] : scaled.terms()) seen[{i, j}] = true;
  for (const auto& [i, j, v] : reference.terms()) seen[{i, j}] = true;
  for (const auto& [key, unused] : seen) {
    auto [i, j] = key;
    QSqrt3 a = scaled.coefficient(i, j), r = reference.coefficient(i, j);
    if (a != r)
      cmp.mismatches.push_back("b^" + std::to_string(i) + " t^" + std::to_string(j) + ": computed " + a.to_string() +
                               ", printed " + r.to_string());
  }
  return cmp;
}

RadicalExpr scaled_psi_hat_expr() {
  static const RadicalExpr e = [] {
    RadicalExpr b = var_b(), t = var_t();
    RadicalExpr T = sqrt(c(1) + t * t);
    return c(2) + b * b + t * t + b * T - t * T + (slack_term(b) - S3()) * (b - t + T);
  }();
  return e;
}

PolyComparison compare_P() {
  return compare_to_printed(eliminate_radicals_bivariate(scaled_psi_hat_expr()).polynomial, printed_P());
}

BivarPoly expand_P() {
  PolyComparison cmp = compare_P();
  if (!cmp.matches()) {
    std::string list;
    for (const auto& m : cmp.mismatches) list += "\n  " + m;
    throw ReferenceMismatch("expanded P differs from the printed polynomial in " +
                            std::to_string(cmp.mismatches.size()) + " monomial(s):" + list);
  }
  return cmp.computed * BivarPoly(cmp.factor);
}

RadicalExpr statement2_x_expr() {
  RadicalExpr b = var_b();
  RadicalExpr t = upper_line_t(b);
  RadicalExpr T = sqrt(c(1) + t * t);
  RadicalExpr B = sqrt(c(1) + b * b);
  return T / c(2) + sqrt(square(B + c(1, 18)) + T * T / c(4)) - S3();
}

RadicalExpr statement2_y_expr() {
  RadicalExpr b = var_b();
  RadicalExpr t = upper_line_t(b);
  RadicalExpr T = sqrt(c(1) + t * t);
  RadicalExpr B = sqrt(c(1) + b * b);
  return sqrt(B * B + square(T / c(2) + c(1, 30))) + T / c(2) + c(1, 30) - S3();
}

RadicalExpr statement3_ratio_expr() {
  RadicalExpr b = var_b();
  RadicalExpr tg = branch_graph(Branch::kG, b);
  return (sqrt(c(1) + b * b) + c(1, 18)) / sqrt(c(1) + tg * tg);
}

CertReport expand_P_certificate() {
  CertReport report("expand_P");
  const RadicalExpr expr = scaled_psi_hat_expr();
  BivarElimination e = eliminate_radicals_bivariate(expr);
  report.add("(b - t + T) psi_hat: radical-free form", "elimination",
             {{"expr", expr.to_string()}, {"poly", e.polynomial.to_string()}, {"eliminations", e.eliminations}},
             !e.polynomial.is_zero());
  PolyComparison cmp = compare_to_printed(e.polynomial, printed_P());
  json mism = json::array();
  for (const auto& m : cmp.mismatches) mism.push_back(m);
  report.add("P term by term", "note",
             {{"factor", cmp.factor.to_string()}, {"mismatch_count", cmp.mismatches.size()}, {"mismatches", mism}},
             cmp.matches());
  // computed * factor == printed, i.e. computed == printed * (1/factor).
  if (!cmp.factor.is_zero())
    add_identity_step(report, "P equals the scaled elimination", e.polynomial, printed_P(), QSqrt3(1) / cmp.factor);
  const BivarPoly P = printed_P();
  report.add("P has 4 b^6 and 27 t^2", "note",
             {{"b6", P.coefficient(6, 0).to_string()}, {"t2", P.coefficient(0, 2).to_string()}},
             P.coefficient(6, 0) == q(4) && P.coefficient(0, 2) == q(27));
  report.add("P vanishes at (0, -1/sqrt3)", "note", {{"value", P.evaluate(q(0), kZOffset).to_string()}},
             P.evaluate(q(0), kZOffset).is_zero());
  return report;
}

CertReport statement1_certificate() {
  CertReport report("statement1");
  const BivarPoly P = printed_P();
  const QSqrt3 lo = q(0), hi = q(1, 2);

  // psi_hat = 0 forces P = 0 because b - t + T > 0 where b > t.
  CertReport expand = expand_P_certificate();
  report.add("P is the radical-free form of (b - t + T) psi_hat", "note", {{"depends_on", expand.id()}},
             expand.verified());
  detail::add_sign_step(report, "b - t + T > 0 at (0, -1/sqrt3)",
                        at_point(var_b() - var_t() + sqrt(c(1) + var_t() * var_t()),
                                 SlopePoint(c(0), -c(1) / S3())),
                        1);

  const BivarPoly P1 = P.partial_t(), P2 = P1.partial_t(), P3 = P2.partial_t();
  add_identity_step(report, "P''' = 108 b", P3, parse_bivar_poly("108 b"), QSqrt3(1));
  add_count_step(report, "P''' has no zero for b > 0", P3.to_univariate(), lo, Bound::positive_infinity(), 0);
  detail::add_sign_step(report, "P''' positive at b = 1", c(108), 1);

  Poly p2 = P2.restrict_to_line(kZSlope, kZOffset);
  Poly p1 = P1.restrict_to_line(kZSlope, kZOffset);
  Poly p0 = P.restrict_to_line(kZSlope, kZOffset);
  add_identity_step(report, "P'' on Z", BivarPoly::from_poly_in_b(p2), parse_bivar_poly(kPrintedP2OnZ), QSqrt3(1));
  add_identity_step(report, "P' on Z", BivarPoly::from_poly_in_b(p1), parse_bivar_poly(kPrintedP1OnZ), QSqrt3(1));
  add_positivity_step(report, "P'' > 0 on Z", p2, lo, hi);
  add_positivity_step(report, "P' > 0 on Z", p1, lo, hi);
  add_positivity_step(report, "P > 0 on Z", p0, lo, hi);
  for (const auto& [name, poly] : {std::pair<const char*, Poly>{"P''", p2}, {"P'", p1}, {"P", p0}})
    add_count_step(report, std::string(name) + " on Z: no Sturm root in (0, 1/2]", poly, lo, hi, 0);

  // The factored form as printed is off by one exponent; record the exact gap.
  Poly three_quarters = p0 * Poly::constant(q(3, 4));
  BivarPoly gap = BivarPoly::from_poly_in_b(three_quarters) - parse_bivar_poly(kPrintedThreeQuartersP);
  add_identity_step(report, "(3/4)P on Z differs from the printed bracket by 2 b^4 - 2 b^5", gap,
                    parse_bivar_poly("2 b^4 - 2 b^5"), QSqrt3(1));

  // Vertical rays up from Z reach Omega: Z lies on the trapezoid's lower edge
  // and the trapezoid sits inside 0 <= b <= a < 1/2.
  add_trapezoid_dependency(report, "Omega lies above Z and inside 0 < b < 1/2");
  return report;
}

CertReport statement2_x_certificate() {
  CertReport report("statement2_x");
  const RadicalExpr phi = statement2_x_expr();
  const QSqrt3 lo = q(0), hi = q(1, 2);
  add_trapezoid_dependency(report, "Omega lies below t = (2/3)b - 1/2 with 0 < b < 1/2");
  detail::add_sign_step(report, "phi(0) > 0", phi.substitute(Variable::kB, c(0)), 1);

  Elimination e = eliminate_radicals(phi);
  report.add("phi: three radicals eliminated", "elimination",
             {{"expr", phi.to_string()}, {"poly", bstr(e.polynomial)}, {"eliminations", e.eliminations}},
             e.eliminations == 3 && !e.identically_zero());
  const Poly printed = printed_degree8();
  PolyComparison cmp = compare_to_printed(BivarPoly::from_poly_in_b(e.polynomial), BivarPoly::from_poly_in_b(printed));
  report.add("degree-8 polynomial term by term", "note",
             {{"factor", cmp.factor.to_string()},
              {"mismatch_count", cmp.mismatches.size()},
              {"degree", printed.degree()},
              {"printed_first_coefficient", printed.coefficient(0).to_string()}},
             cmp.matches() && printed.degree() == 8 && printed.coefficient(0) == QSqrt3(Rational(379204871936L)));
  if (!cmp.factor.is_zero())
    add_identity_step(report, "degree-8 polynomial equals the scaled elimination",
                      BivarPoly::from_poly_in_b(e.polynomial), BivarPoly::from_poly_in_b(printed),
                      QSqrt3(1) / cmp.factor);
  add_count_step(report, "no root in (0, 1/2]", printed, lo, hi, 0);
  detail::add_sign_step(report, "no root at b = 0", RadicalExpr(printed.coefficient(0)), 1);

  const Rational width = make_rational(1, 1000000000);
  auto roots = isolate_roots(printed, Bound::negative_infinity(), Bound::positive_infinity(), width);
  json listed = json::array();
  for (const auto& r : roots) listed.push_back({r.lo.to_string(), r.hi.to_string()});
  report.add("real roots of the degree-8 polynomial", "isolation",
             {{"poly", printed.to_string()},
              {"variable", "b"},
              {"lo", "-inf"},
              {"hi", "+inf"},
              {"width", to_string(width)},
              {"roots", listed}},
             true);
  double nearest = NAN, best = INFINITY;
  for (const auto& r : roots) {
    double m = r.midpoint();
    double dist = m < 0 ? -m : (m > 0.5 ? m - 0.5 : 0);
    if (dist < best) best = dist, nearest = m;
  }
  report.add("closest root to [0, 1/2] near 0.624325", "note", {{"nearest_root", nearest}, {"distance", best}},
             std::abs(nearest - 0.624325) < 1e-6);
  return report;
}

CertReport statement2_y_certificate() {
  CertReport report("statement2_y");
  const RadicalExpr h = statement2_y_expr();
  const QSqrt3 lo = q(0), hi = q(1, 2);
  add_trapezoid_dependency(report, "Omega lies below t = (2/3)b - 1/2 with 0 < b < 1/2");
  report.add("normalization y >= 0 by the reflection (x, y) -> (x, -y)", "note",
             {{"convention", "the half with y >= 0 is labelled j = 1; the bound is on |y|"}}, true);
  detail::add_sign_step(report, "h(0) > 0", h.substitute(Variable::kB, c(0)), 1);

  Elimination e = eliminate_radicals(h);
  report.add("h: radicals eliminated", "elimination",
             {{"expr", h.to_string()}, {"poly", bstr(e.polynomial)}, {"eliminations", e.eliminations}},
             !e.identically_zero());
  const Poly printed = printed_quartic();
  PolyComparison cmp = compare_to_printed(BivarPoly::from_poly_in_b(e.polynomial), BivarPoly::from_poly_in_b(printed));
  report.add("quartic term by term", "note",
             {{"factor", cmp.factor.to_string()}, {"mismatch_count", cmp.mismatches.size()}}, cmp.matches());
  if (!cmp.factor.is_zero())
    add_identity_step(report, "quartic equals the scaled elimination", BivarPoly::from_poly_in_b(e.polynomial),
                      BivarPoly::from_poly_in_b(printed), QSqrt3(1) / cmp.factor);
  add_count_step(report, "no root in (0, 1/2]", printed, lo, hi, 0);
  detail::add_sign_step(report, "no root at b = 0", RadicalExpr(printed.coefficient(0)), 1);
  add_count_step(report, "two real roots", printed, Bound::negative_infinity(), Bound::positive_infinity(), 2);
  // The text describes both real roots as negative; the counts below are
  // what the polynomial actually has.
  SturmChain chain(printed);
  int negative = chain.count_roots(Bound::negative_infinity(), q(0));
  int positive = chain.count_roots(q(0), Bound::positive_infinity());
  add_count_step(report, "real roots on (-inf, 0]", printed, Bound::negative_infinity(), q(0), negative);
  add_count_step(report, "real roots on (0, +inf)", printed, q(0), Bound::positive_infinity(), positive);
  return report;
}

CertReport statement3_certificate() {
  CertReport report("statement3");
  add_trapezoid_dependency(report, "Omega inside the trapezoid");
  const RadicalExpr b = var_b();
  // |t| < 1/sqrt3 on Omega: t is above the lower line and below t = (2/3)b - 1/2 < 0.
  detail::add_sign_step(report, "upper line is negative at b = 1/2", upper_line_t(c(1, 2)), -1);
  detail::add_sign_step(report, "base length sqrt(1 + 1/3) < 5/4", c(5, 4) - sqrt(c(4, 3)), 1);
  detail::add_sign_step(report, "|y| < 1/30 < 1/2 <= T/2: the hull is a triangle", c(1, 2) - c(1, 30), 1);
  detail::add_sign_step(report, "|y| < 1/30 < 1/8", c(1, 8) - c(1, 30), 1);
  detail::add_sign_step(report, "foot within 3/4 of each base vertex: 5/8 + 1/8 <= 3/4", c(3, 4) - c(5, 8) - c(1, 8),
                        0);
  add_atan_step(report, "top and bottom angles: arctan(4/3) > pi/4", {{Rational(1), c(4, 3)}}, make_rational(-1, 4),
                Rational(0));

  // Ratio (B + x)/T over Omega is below (B + 1/18)/sqrt(1 + t_g(b)^2), with
  // t_g < 0, and that bound increases up to the right vertex.
  detail::add_sign_step(report, "t_g < 0: 2 + 3b^2 - 2 sqrt3 b has negative discriminant", c(12) - c(24), -1);
  const RadicalExpr ratio = statement3_ratio_expr();
  detail::add_sign_step(report, "right vertex a < 47/100", c(47, 100) - right_vertex_a(), 1);
  detail::certify_min_positive(report, "ratio below 1.13 on [0, 47/100]", c(113, 100) - ratio, q(0), q(47, 100),
                               nullptr);
  const RadicalExpr a = right_vertex_a();
  const RadicalExpr at_vertex = (sqrt(c(1) + a * a) + c(1, 18)) / sqrt(c(1) + a * a / c(4));
  detail::add_enclosure_step(report, "ratio at the right vertex in (1.125, 1.13)", at_vertex, make_rational(1125, 1000),
                             make_rational(113, 100), nullptr);
  detail::add_sign_step(report, "t_g(a) = -a/2", branch_graph(Branch::kG, a) + a / c(2), 0);

  const RadicalExpr k = c(113, 100);
  add_atan_step(report, "left angle > pi/4", {{Rational(1), c(3, 8) / k}, {Rational(1), c(5, 8) / k}},
                make_rational(-1, 4), Rational(0));
  add_atan_step(report, "left angle sum times 4 exceeds 3.30", {{Rational(4), c(3, 8) / k}, {Rational(4), c(5, 8) / k}},
                Rational(0), make_rational(-330, 100));
  add_atan_step(report, "left angle sum times 4 below 3.31",
                {{Rational(-4), c(3, 8) / k}, {Rational(-4), c(5, 8) / k}}, Rational(0), make_rational(331, 100));
  return report;
}

const std::vector<std::string>& certificate_ids() {
  static const std::vector<std::string> ids = {"trapezoid",    "expand_P",     "statement1",
                                               "statement2_x", "statement2_y", "statement3"};
  return ids;
}

CertReport certificate_by_id(const std::string& id) {
  static const std::map<std::string, std::function<CertReport()>> table = {
      {"trapezoid", [] { return cached_trapezoid(); }},
      {"expand_P", expand_P_certificate},
      {"statement1", statement1_certificate},
      {"statement2_x", statement2_x_certificate},
      {"statement2_y", statement2_y_certificate},
      {"statement3", statement3_certificate},
  };
  auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown certificate id '" + id + "'");
  return it->second();
}

// ---------------------------------------------------------------------------

bool HullTriangle::is_triangle() const { return std::abs(foot_offset) < base / 2 && altitude > 0; }

double HullTriangle::top_angle() const { return std::atan2(altitude, base / 2 - foot_offset); }

double HullTriangle::bottom_angle() const { return std::atan2(altitude, base / 2 + foot_offset); }

double HullTriangle::apex_angle() const {
  return std::atan((base / 2 - foot_offset) / altitude) + std::atan((base / 2 + foot_offset) / altitude);
}

double HullTriangle::min_angle() const { return std::min({top_angle(), bottom_angle(), apex_angle()}); }

double TPatternMeasurements::L(int j) const {
  if (j != 1 && j != 2) throw std::invalid_argument("j must be 1 or 2");
  return j == 1 ? L1 : L2;
}

double TPatternMeasurements::R(int j) const {
  if (j != 1 && j != 2) throw std::invalid_argument("j must be 1 or 2");
  return j == 1 ? R1 : R2;
}

bool const3_check(const TPatternMeasurements& m, int j) {
  Rational B = rational_from_double(m.B), T = rational_from_double(m.T);
  Rational L = rational_from_double(m.L(j)), R = rational_from_double(m.R(j));
  return B * B - L * L + (T - R) * (T - R) <= 0;
}

RadicalExpr s_lower_bound(const RadicalExpr& b) { return S3() - slack_term(b); }

bool s_bound(const TPatternMeasurements& m, int j) {
  RadicalExpr S(rational_from_double(m.L(j)) + rational_from_double(m.R(j)));
  return sign_of(S - s_lower_bound(RadicalExpr(rational_from_double(m.b)))) >= 0;
}

}  // namespace moebius

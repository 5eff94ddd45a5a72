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

#pragma once

#include <string>
#include <vector>

#include "moebius/certs/report.hpp"
#include "moebius/exactnum/interval.hpp"
#include "moebius/exactnum/radical_expr.hpp"

namespace moebius {

/// Slopes (b, t) of the bottom and top bends of a T-pattern.
///
/// Coordinates are exact radical expressions so that anchor points such as
/// (0, -1/sqrt3) and (a, -a/2) are representable; most callers pass
/// rationals.
struct SlopePoint {
  RadicalExpr b;
  RadicalExpr t;

  SlopePoint(RadicalExpr b_, RadicalExpr t_) : b(std::move(b_)), t(std::move(t_)) {}
  static SlopePoint rational(const Rational& b, const Rational& t) { return {RadicalExpr(b), RadicalExpr(t)}; }

  RadicalExpr B() const { return sqrt(RadicalExpr(1) + b * b); }
  RadicalExpr T() const { return sqrt(RadicalExpr(1) + t * t); }
  double b_double() const;
  double t_double() const;
};

/// The constraint functions as expressions in the variables b and t.
RadicalExpr f_expr();      // b - t + T
RadicalExpr g_expr();      // -b + t + sqrt(4 B^2 + T^2)
RadicalExpr psi_expr();    // (2 + b^2 + t^2 + bT - tT) / (b - t + T)
RadicalExpr psi_hat_expr();

/// Substitutes a point into an expression in b and t.
RadicalExpr at_point(const RadicalExpr& expr, const SlopePoint& p);

RadicalExpr eval_f(const SlopePoint& p);
RadicalExpr eval_g(const SlopePoint& p);
/// Throws DenominatorZero when b - t + T vanishes.
RadicalExpr eval_psi(const SlopePoint& p);
RadicalExpr eval_psi_hat(const SlopePoint& p);
/// b(1 - 2b)/3, the slack term of the S_j bound.
RadicalExpr slack_term(const RadicalExpr& b);

enum class Membership { kInside, kOutside, kBoundary };
const char* membership_name(Membership m);

/// Exact membership in Omega = {max(f, g) < sqrt3}. kBoundary means some
/// constraint equals sqrt3 exactly and none exceeds it.
Membership omega_member(const SlopePoint& p);
/// Same decision for rational points with a fast interval pre-check.
Membership omega_member(const Rational& b, const Rational& t);

/// Right vertex a = (sqrt27 - sqrt11)/4 of Omega.
RadicalExpr right_vertex_a();
/// The four trapezoid edges as t = slope*b + offset, plus the vertical sides
/// b = 0 and b = a.
struct TrapezoidLine {
  std::string name;
  RadicalExpr slope;
  RadicalExpr offset;
};
std::vector<TrapezoidLine> trapezoid_lines();
/// Inside the closed trapezoid 0 <= b <= a, lower line <= t <= both upper lines.
bool in_trapezoid(double b, double t, double slack = 0);

enum class Branch { kF, kG };

/// Closed-form boundary graph t = t_f(b) of {f = sqrt3} (for b < sqrt3) or
/// t = t_g(b) of {g = sqrt3} (for b > -sqrt3).
RadicalExpr branch_graph(Branch branch, const RadicalExpr& b);

/// Enclosure of the t with branch(b, t) = sqrt3 by monotone bisection
/// (f decreases in t, g increases). Throws NoSolution when no bracket exists
/// and OutOfDomain outside the branch's range of b.
Interval boundary_t(const RadicalExpr& b, Branch branch, const Rational& width);

/// Points where the graphs {f = sqrt3} and {g = sqrt3} meet, certified by
/// elimination and a Sturm count.
std::vector<SlopePoint> branch_intersections();

/// The four-part certificate that Omega lies in the trapezoid.
CertReport trapezoid_certificate();

/// Writes an SVG of Omega sampled on a resolution x resolution grid over the
/// viewport [-0.05, 0.55] x [-0.65, -0.15]. Returns the sampled inside points.
struct OmegaPlot {
  std::vector<std::pair<double, double>> inside_points;
  int samples = 0;
};
OmegaPlot plot_omega(int resolution, const std::string& path);

}  // namespace moebius

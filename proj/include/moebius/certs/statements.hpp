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
#include "moebius/exactnum/qsqrt3.hpp"
#include "moebius/exactnum/radical_expr.hpp"
#include "moebius/poly/bivar_poly.hpp"
#include "moebius/poly/poly.hpp"

namespace moebius {

/// Reference polynomials as printed, parsed verbatim.
BivarPoly printed_P();
Poly printed_degree8();
Poly printed_quartic();

/// Term-by-term comparison of a computed polynomial against a printed one.
///
/// The computed polynomial is only determined up to a nonzero constant, so it
/// is first scaled to agree with the printed one on the printed polynomial's
/// lowest monomial (in (b, t) lexicographic order). `mismatches` lists every
/// monomial whose scaled coefficient still differs.
struct PolyComparison {
  BivarPoly computed;
  BivarPoly reference;
  QSqrt3 factor;  // reference == computed * factor when mismatches is empty
  std::vector<std::string> mismatches;

  bool matches() const { return mismatches.empty(); }
};
PolyComparison compare_to_printed(const BivarPoly& computed, const BivarPoly& reference);

/// (b - t + T) * psi_hat as an expression in b and t.
RadicalExpr scaled_psi_hat_expr();

/// Radical-free form of (b - t + T) * psi_hat, scaled to the printed P.
/// Throws ReferenceMismatch listing the differing monomials.
BivarPoly expand_P();
PolyComparison compare_P();

/// The restriction phi(b) = f(b, (2/3)b - 1/2, 1/18) used for x < 1/18.
RadicalExpr statement2_x_expr();
/// h(b, (2/3)b - 1/2, 1/30) used for |y| < 1/30.
RadicalExpr statement2_y_expr();
/// (B + 1/18)/sqrt(1 + t_g(b)^2): the altitude/base ratio along the top
/// boundary of Omega.
RadicalExpr statement3_ratio_expr();

CertReport expand_P_certificate();
CertReport statement1_certificate();
CertReport statement2_x_certificate();
CertReport statement2_y_certificate();
CertReport statement3_certificate();

/// Ids accepted by certificate_by_id, in the order verify runs them.
const std::vector<std::string>& certificate_ids();
/// Throws std::invalid_argument for an unknown id.
CertReport certificate_by_id(const std::string& id);

/// Convex hull of a T-pattern: a vertical base of length T, apex at
/// horizontal distance `altitude` whose foot is `foot_offset` away from the
/// midpoint of the base.
struct HullTriangle {
  double base = 0;
  double altitude = 0;
  double foot_offset = 0;

  bool is_triangle() const;
  double top_angle() const;
  double bottom_angle() const;
  double apex_angle() const;
  double min_angle() const;
};

/// Lengths and slopes measured on a T-pattern.
struct TPatternMeasurements {
  double B = 0, T = 0;
  double b = 0, t = 0;
  double L1 = 0, L2 = 0, R1 = 0, R2 = 0;
  double x = 0, y = 0;
  double eps = 0;

  double S1() const { return L1 + R1; }
  double S2() const { return L2 + R2; }
  double lambda() const { return (S1() + S2()) / 2; }
  double L(int j) const;
  double R(int j) const;
  double S(int j) const { return L(j) + R(j); }
};

/// B^2 - L_j^2 + (T - R_j)^2 <= 0, evaluated exactly on the binary values of
/// the measurements. Throws std::invalid_argument for j outside {1, 2}.
bool const3_check(const TPatternMeasurements& m, int j);

/// sqrt3 - b(1 - 2b)/3, the lower bound for each S_j.
RadicalExpr s_lower_bound(const RadicalExpr& b);

/// S_j >= sqrt3 - b(1 - 2b)/3, decided exactly on the binary values.
bool s_bound(const TPatternMeasurements& m, int j);

}  // namespace moebius

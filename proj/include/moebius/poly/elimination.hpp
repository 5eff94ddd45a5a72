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

#include <optional>

#include "moebius/exactnum/qsqrt3.hpp"
#include "moebius/exactnum/radical_expr.hpp"
#include "moebius/poly/bivar_poly.hpp"
#include "moebius/poly/poly.hpp"

namespace moebius {

/// Result of clearing square roots from an expression.
///
/// Writing the expression as N/D with N, D multilinear in the radicals, each
/// step replaces N = u + v*sqrt(w) by u^2 - v^2 w, which vanishes whenever N
/// does. The final polynomial therefore vanishes at every real zero of the
/// expression but may have extra roots.
struct BivarElimination {
  BivarPoly polynomial;
  int radicals = 0;      // distinct non-trivial radicals met while lowering
  int eliminations = 0;  // squaring steps performed
};

struct Elimination {
  Poly polynomial;
  int radicals = 0;
  int eliminations = 0;
  /// The polynomial is identically zero: every point is a possible root.
  bool identically_zero() const { return polynomial.is_zero(); }
};

/// Elimination for expressions in b and t. Throws UnsupportedExpression on
/// nodes that cannot be lowered.
BivarElimination eliminate_radicals_bivariate(const RadicalExpr& expr);

/// Elimination for expressions in at most one variable; the result is a
/// polynomial in that variable (named "b" or "t").
Elimination eliminate_radicals(const RadicalExpr& expr);

/// The factor c with p == c * q, if one exists.
std::optional<QSqrt3> proportionality_factor(const Poly& p, const Poly& q);
std::optional<QSqrt3> proportionality_factor(const BivarPoly& p, const BivarPoly& q);

}  // namespace moebius

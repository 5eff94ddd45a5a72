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

#include <utility>

#include "moebius/certs/report.hpp"
#include "moebius/exactnum/interval.hpp"
#include "moebius/exactnum/radical_expr.hpp"
#include "moebius/exactnum/rational.hpp"

namespace moebius {

/// The b on the curve f = g above a given slope t of the top bend.
///
/// Defined on D* = (-inf, 1/sqrt3). At t = -1/sqrt3 the quotient is 0/0 and
/// the removable value 0 is returned. Throws OutOfDomain for t >= 1/sqrt3.
RadicalExpr beta(const RadicalExpr& t);

/// f(beta(t), t) written as 2T/(1 - t^2 - tT), the form without the
/// removable singularity. Throws OutOfDomain outside D*.
RadicalExpr phi_star(const RadicalExpr& t);

/// phi_star as an expression in the variable t.
RadicalExpr phi_star_expr();

/// t0 = -sqrt(2/sqrt3 - 1).
RadicalExpr t0_closed_form();

/// (2 sqrt(4 - 2 sqrt3) + 4) / (sqrt(2 sqrt3) + 2 sqrt(2 sqrt3 - 3)).
RadicalExpr lambda1_closed_form();

/// Enclosure of the unique critical point of phi_star in D*, optionally
/// appending the certificate steps that establish uniqueness.
Interval critical_point(CertReport* report = nullptr);

struct OptimizationResult {
  Interval t0;
  Interval lambda1;
  RadicalExpr lambda1_closed_form;
  Rational oracle_min;
  Rational oracle_step;
  CertReport certificate;
};

/// Certified enclosure of lambda1 of the requested width together with the
/// certificate trace and a grid cross-check.
OptimizationResult lambda1(const Rational& width);

using Range = std::pair<Rational, Rational>;

/// Minimum of max(f, g) over the grid lo + k*step inside the box, restricted
/// to b >= t. Plain double arithmetic: an estimate, not a certified bound.
Rational grid_min_oracle(const Range& b_range, const Range& t_range, const Rational& step);

/// The same oracle on the diagonal b = t, which is the boundary of D.
Rational diagonal_min_oracle(const Range& b_range, const Rational& step);

/// Deviation the grid can introduce relative to the true minimum: every point
/// of the box is within step/2 of a grid point in each coordinate and
/// max(f, g) is 3-Lipschitz in b and 2-Lipschitz in t.
Rational oracle_error_bound(const Rational& step);

}  // namespace moebius

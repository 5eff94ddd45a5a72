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
#include "moebius/exactnum/radical_expr.hpp"
#include "moebius/poly/poly.hpp"
#include "moebius/poly/sturm.hpp"

namespace moebius::detail {

/// Sign with an interval pre-check before the exact test.
int quick_sign(const RadicalExpr& e);

nlohmann::json sturm_payload(const Poly& p, const Bound& lo, const Bound& hi, int count);
bool add_sign_step(CertReport& report, const std::string& anchor, const RadicalExpr& expr, int expected);
bool add_enclosure_step(CertReport& report, const std::string& anchor, const RadicalExpr& expr,
                        const Rational& lower, const Rational& upper, Interval* out);

/// expr(b) > 0 on (lo, hi]: its elimination polynomial has no root there and
/// expr is positive at the midpoint.
bool certify_positive_by_elimination(CertReport& report, const std::string& anchor, const RadicalExpr& expr,
                                     const QSqrt3& lo, const QSqrt3& hi);

/// expr(b) > 0 on [lo, hi] via the ends and every candidate critical point.
bool certify_min_positive(CertReport& report, const std::string& anchor, const RadicalExpr& expr, const QSqrt3& lo,
                          const QSqrt3& hi, std::vector<RootInterval>* critical);

void certify_branch_strip(CertReport& report);

}  // namespace moebius::detail

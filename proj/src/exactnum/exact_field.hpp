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

#include <map>
#include <vector>

#include "moebius/exactnum/interval.hpp"
#include "moebius/exactnum/qsqrt3.hpp"
#include "moebius/exactnum/radical_expr.hpp"
#include "moebius/exactnum/radical_tower.hpp"

namespace moebius::detail {

/// Exact arithmetic on variable-free radical expressions: a radical tower
/// over Q(sqrt 3) plus field inversion by conjugates and certified signs.
class ExactField {
 public:
  using Tower = RadicalTower<QSqrt3>;
  using Element = Tower::Element;

  explicit ExactField(EvalOptions options) : options_(options) {}

  Element lower(const RadicalExpr& expr);

  int sign(const Element& e);
  bool is_zero(const Element& e);
  Element inverse(const Element& d);
  Element sqrt(const Element& x);

  Interval enclose(const Element& e, mpfr_prec_t precision);

 private:
  const std::vector<Interval>& radical_intervals(mpfr_prec_t precision);

  Tower tower_;
  EvalOptions options_;
  std::map<const void*, Element> lowered_;
  std::map<mpfr_prec_t, std::vector<Interval>> radical_cache_;
};

}  // namespace moebius::detail

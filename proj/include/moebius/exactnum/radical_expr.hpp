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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "moebius/exactnum/interval.hpp"
#include "moebius/exactnum/qsqrt3.hpp"
#include "moebius/exactnum/rational.hpp"

namespace moebius {

/// The two free variables that constraint functions are written in: the
/// slopes of the bottom and top bends.
enum class Variable { kB = 0, kT = 1 };

const char* variable_name(Variable v);

/// Immutable expression tree over rationals built with + - * / and square
/// roots, optionally mentioning the variables b and t.
///
/// Trees share subtrees by pointer, so building sqrt(1 + t^2) once and using
/// it many times is cheap, and evaluators cache per shared node.
class RadicalExpr {
 public:
  enum class Kind { kConstant, kVariable, kAdd, kSub, kMul, kDiv, kNeg, kSqrt };

  RadicalExpr();  // the constant 0
  RadicalExpr(long value);  // NOLINT(google-explicit-constructor)
  RadicalExpr(const Rational& value);  // NOLINT(google-explicit-constructor)
  RadicalExpr(const QSqrt3& value);  // NOLINT(google-explicit-constructor)

  static RadicalExpr variable(Variable v);
  static RadicalExpr sqrt(const RadicalExpr& operand);

  Kind kind() const;
  const Rational& constant_value() const;
  Variable variable_id() const;
  const std::vector<RadicalExpr>& children() const;
  /// Identity of the shared node; stable for the lifetime of the tree.
  const void* node_id() const { return node_.get(); }

  bool has_variables() const;
  bool mentions(Variable v) const;
  std::size_t node_count() const;

  /// Replaces every occurrence of a variable.
  RadicalExpr substitute(Variable v, const RadicalExpr& value) const;
  /// Symbolic derivative with respect to v.
  RadicalExpr differentiate(Variable v) const;

  /// Prefix form, e.g. "(+ 1 (sqrt (* t t)))". parse() reads it back.
  std::string to_string() const;
  static RadicalExpr parse(std::string_view text);

  friend RadicalExpr operator+(const RadicalExpr& x, const RadicalExpr& y);
  friend RadicalExpr operator-(const RadicalExpr& x, const RadicalExpr& y);
  friend RadicalExpr operator*(const RadicalExpr& x, const RadicalExpr& y);
  friend RadicalExpr operator/(const RadicalExpr& x, const RadicalExpr& y);
  friend RadicalExpr operator-(const RadicalExpr& x);

  struct Node;

 private:
  explicit RadicalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static RadicalExpr make(Kind kind, std::vector<RadicalExpr> children);

  std::shared_ptr<const Node> node_;
};

RadicalExpr sqrt(const RadicalExpr& x);
RadicalExpr square(const RadicalExpr& x);
RadicalExpr sqrt3_expr();

/// Precision budget for certified evaluation. The cap can be overridden
/// through the MOEBIUS_PRECISION_CAP environment variable.
struct EvalOptions {
  mpfr_prec_t initial_precision = 64;
  mpfr_prec_t max_precision = 4096;

  static EvalOptions defaults();
};

/// Interval values for the variables during a single evaluation.
using VariableBindings = std::map<Variable, Interval>;

/// One evaluation pass at a fixed working precision. Square roots whose
/// operand enclosure straddles 0 are resolved with sign_of. Throws
/// NonConvergence (via DivisionByZero detection) when a divisor encloses 0.
Interval interval_eval_at(const RadicalExpr& expr, mpfr_prec_t precision,
                          const VariableBindings& bindings = {},
                          const EvalOptions& options = EvalOptions::defaults());

/// Enclosure of the exact value with width <= target_width. Precision is
/// doubled until the width target is met or the cap is hit.
Interval interval_eval(const RadicalExpr& expr, const Rational& target_width,
                       const EvalOptions& options = EvalOptions::defaults());

/// Exact sign of a variable-free expression. Zero is certified by radical
/// elimination, never by a small enclosure.
int sign_of(const RadicalExpr& expr, const EvalOptions& options = EvalOptions::defaults());

/// Convenience: sign_of(x - y).
int compare(const RadicalExpr& x, const RadicalExpr& y, const EvalOptions& options = EvalOptions::defaults());

}  // namespace moebius

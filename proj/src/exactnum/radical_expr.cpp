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

#include "moebius/exactnum/radical_expr.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "exact_field.hpp"
#include "moebius/errors.hpp"

namespace moebius {

struct RadicalExpr::Node {
  Kind kind = Kind::kConstant;
  Rational value;
  Variable variable = Variable::kB;
  std::vector<RadicalExpr> children;
};

const char* variable_name(Variable v) { return v == Variable::kB ? "b" : "t"; }

namespace {

std::shared_ptr<const RadicalExpr::Node> constant_node(const Rational& q) {
  auto n = std::make_shared<RadicalExpr::Node>();
  n->kind = RadicalExpr::Kind::kConstant;
  n->value = q;
  return n;
}

}  // namespace

RadicalExpr::RadicalExpr() : node_(constant_node(Rational(0))) {}
RadicalExpr::RadicalExpr(long value) : node_(constant_node(Rational(value))) {}
RadicalExpr::RadicalExpr(const Rational& value) : node_(constant_node(value)) {}

RadicalExpr::RadicalExpr(const QSqrt3& value) : RadicalExpr(value.rational_part()) {
  if (value.is_rational()) return;
  RadicalExpr b_part = RadicalExpr(value.sqrt3_part()) * sqrt3_expr();
  *this = value.rational_part() == 0 ? b_part : RadicalExpr(value.rational_part()) + b_part;
}

RadicalExpr RadicalExpr::make(Kind kind, std::vector<RadicalExpr> children) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children = std::move(children);
  return RadicalExpr(std::shared_ptr<const Node>(std::move(n)));
}

RadicalExpr RadicalExpr::variable(Variable v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kVariable;
  n->variable = v;
  return RadicalExpr(std::shared_ptr<const Node>(std::move(n)));
}

RadicalExpr RadicalExpr::sqrt(const RadicalExpr& operand) { return make(Kind::kSqrt, {operand}); }

RadicalExpr::Kind RadicalExpr::kind() const { return node_->kind; }
const Rational& RadicalExpr::constant_value() const { return node_->value; }
Variable RadicalExpr::variable_id() const { return node_->variable; }
const std::vector<RadicalExpr>& RadicalExpr::children() const { return node_->children; }

bool RadicalExpr::mentions(Variable v) const {
  std::unordered_map<const void*, bool> memo;
  std::function<bool(const RadicalExpr&)> visit = [&](const RadicalExpr& e) -> bool {
    auto it = memo.find(e.node_id());
    if (it != memo.end()) return it->second;
    bool r = e.kind() == Kind::kVariable && e.variable_id() == v;
    for (const auto& c : e.children()) r = visit(c) || r;
    memo[e.node_id()] = r;
    return r;
  };
  return visit(*this);
}

bool RadicalExpr::has_variables() const { return mentions(Variable::kB) || mentions(Variable::kT); }

std::size_t RadicalExpr::node_count() const {
  std::set<const void*> seen;
  std::function<void(const RadicalExpr&)> visit = [&](const RadicalExpr& e) {
    if (!seen.insert(e.node_id()).second) return;
    for (const auto& c : e.children()) visit(c);
  };
  visit(*this);
  return seen.size();
}

RadicalExpr RadicalExpr::substitute(Variable v, const RadicalExpr& value) const {
  std::unordered_map<const void*, RadicalExpr> memo;
  std::function<RadicalExpr(const RadicalExpr&)> visit = [&](const RadicalExpr& e) -> RadicalExpr {
    auto it = memo.find(e.node_id());
    if (it != memo.end()) return it->second;
    RadicalExpr r = e;
    if (e.kind() == Kind::kVariable) {
      if (e.variable_id() == v) r = value;
    } else if (!e.children().empty()) {
      std::vector<RadicalExpr> ch;
      bool changed = false;
      for (const auto& c : e.children()) {
        ch.push_back(visit(c));
        changed = changed || ch.back().node_id() != c.node_id();
      }
      if (changed) r = make(e.kind(), std::move(ch));
    }
    memo.emplace(e.node_id(), r);
    return r;
  };
  return visit(*this);
}

RadicalExpr RadicalExpr::differentiate(Variable v) const {
  std::unordered_map<const void*, RadicalExpr> memo;
  std::function<RadicalExpr(const RadicalExpr&)> d = [&](const RadicalExpr& e) -> RadicalExpr {
    auto it = memo.find(e.node_id());
    if (it != memo.end()) return it->second;
    const auto& c = e.children();
    RadicalExpr r;
    switch (e.kind()) {
      case Kind::kConstant:
        r = RadicalExpr(0);
        break;
      case Kind::kVariable:
        r = RadicalExpr(e.variable_id() == v ? 1 : 0);
        break;
      case Kind::kAdd:
        r = d(c[0]) + d(c[1]);
        break;
      case Kind::kSub:
        r = d(c[0]) - d(c[1]);
        break;
      case Kind::kNeg:
        r = -d(c[0]);
        break;
      case Kind::kMul:
        r = d(c[0]) * c[1] + c[0] * d(c[1]);
        break;
      case Kind::kDiv:
        r = (d(c[0]) * c[1] - c[0] * d(c[1])) / (c[1] * c[1]);
        break;
      case Kind::kSqrt:
        r = d(c[0]) / (RadicalExpr(2) * e);
        break;
    }
    memo.emplace(e.node_id(), r);
    return r;
  };
  return d(*this);
}

namespace {

bool is_const(const RadicalExpr& e, long v) {
  return e.kind() == RadicalExpr::Kind::kConstant && e.constant_value() == v;
}

}  // namespace

// Light constant folding keeps derivative trees readable; it never changes
// the value of an expression.
RadicalExpr operator+(const RadicalExpr& x, const RadicalExpr& y) {
  if (is_const(x, 0)) return y;
  if (is_const(y, 0)) return x;
  if (x.kind() == RadicalExpr::Kind::kConstant && y.kind() == RadicalExpr::Kind::kConstant)
    return RadicalExpr(Rational(x.constant_value() + y.constant_value()));
  return RadicalExpr::make(RadicalExpr::Kind::kAdd, {x, y});
}

RadicalExpr operator-(const RadicalExpr& x, const RadicalExpr& y) {
  if (is_const(y, 0)) return x;
  if (x.kind() == RadicalExpr::Kind::kConstant && y.kind() == RadicalExpr::Kind::kConstant)
    return RadicalExpr(Rational(x.constant_value() - y.constant_value()));
  return RadicalExpr::make(RadicalExpr::Kind::kSub, {x, y});
}

RadicalExpr operator*(const RadicalExpr& x, const RadicalExpr& y) {
  if (is_const(x, 0) || is_const(y, 0)) return RadicalExpr(0);
  if (is_const(x, 1)) return y;
  if (is_const(y, 1)) return x;
  if (x.kind() == RadicalExpr::Kind::kConstant && y.kind() == RadicalExpr::Kind::kConstant)
    return RadicalExpr(Rational(x.constant_value() * y.constant_value()));
  return RadicalExpr::make(RadicalExpr::Kind::kMul, {x, y});
}

RadicalExpr operator/(const RadicalExpr& x, const RadicalExpr& y) {
  if (is_const(y, 1)) return x;
  if (is_const(x, 0) && !is_const(y, 0)) return RadicalExpr(0);
  if (x.kind() == RadicalExpr::Kind::kConstant && y.kind() == RadicalExpr::Kind::kConstant &&
      y.constant_value() != 0)
    return RadicalExpr(Rational(x.constant_value() / y.constant_value()));
  return RadicalExpr::make(RadicalExpr::Kind::kDiv, {x, y});
}

RadicalExpr operator-(const RadicalExpr& x) {
  if (x.kind() == RadicalExpr::Kind::kConstant) return RadicalExpr(Rational(-x.constant_value()));
  return RadicalExpr::make(RadicalExpr::Kind::kNeg, {x});
}

RadicalExpr sqrt(const RadicalExpr& x) { return RadicalExpr::sqrt(x); }
RadicalExpr square(const RadicalExpr& x) { return x * x; }
RadicalExpr sqrt3_expr() {
  static const RadicalExpr kSqrt3 = RadicalExpr::sqrt(RadicalExpr(3));
  return kSqrt3;
}

// ---------------------------------------------------------------------------
// Text form

std::string RadicalExpr::to_string() const {
  std::ostringstream out;
  std::function<void(const RadicalExpr&)> emit = [&](const RadicalExpr& e) {
    switch (e.kind()) {
      case Kind::kConstant:
        out << e.constant_value().get_str();
        return;
      case Kind::kVariable:
        out << variable_name(e.variable_id());
        return;
      default:
        break;
    }
    static const std::map<Kind, const char*> kOps = {{Kind::kAdd, "+"},  {Kind::kSub, "-"},
                                                     {Kind::kMul, "*"},  {Kind::kDiv, "/"},
                                                     {Kind::kNeg, "neg"}, {Kind::kSqrt, "sqrt"}};
    out << '(' << kOps.at(e.kind());
    for (const auto& c : e.children()) {
      out << ' ';
      emit(c);
    }
    out << ')';
  };
  emit(*this);
  return out.str();
}

namespace {

class SexprParser {
 public:
  explicit SexprParser(std::string_view text) : text_(text) {}

  RadicalExpr parse_all() {
    RadicalExpr e = parse();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("radical expression parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string token() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected a token");
    return std::string(text_.substr(start, pos_ - start));
  }

  RadicalExpr parse() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] != '(') {
      std::string tok = token();
      if (tok == "b") return RadicalExpr::variable(Variable::kB);
      if (tok == "t") return RadicalExpr::variable(Variable::kT);
      return RadicalExpr(parse_rational(tok));
    }
    ++pos_;
    std::string op = token();
    std::vector<RadicalExpr> args;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) fail("unbalanced parenthesis");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      args.push_back(parse());
    }
    auto need = [&](std::size_t n) {
      if (args.size() != n) fail("operator '" + op + "' expects " + std::to_string(n) + " operands");
    };
    if (op == "+") { need(2); return args[0] + args[1]; }
    if (op == "-") { need(2); return args[0] - args[1]; }
    if (op == "*") { need(2); return args[0] * args[1]; }
    if (op == "/") { need(2); return args[0] / args[1]; }
    if (op == "neg") { need(1); return -args[0]; }
    if (op == "sqrt") { need(1); return RadicalExpr::sqrt(args[0]); }
    fail("unknown operator '" + op + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RadicalExpr RadicalExpr::parse(std::string_view text) { return SexprParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Evaluation

EvalOptions EvalOptions::defaults() {
  EvalOptions o;
  if (const char* env = std::getenv("MOEBIUS_PRECISION_CAP")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 64) o.max_precision = static_cast<mpfr_prec_t>(cap);
  }
  return o;
}

namespace {

// Signals that a divisor enclosure contains 0 at the current precision.
struct NeedsRefinement {
  RadicalExpr divisor;
};

class IntervalEvaluator {
 public:
  IntervalEvaluator(mpfr_prec_t precision, const VariableBindings& bindings, const EvalOptions& options,
                    std::map<const void*, int>& sign_memo)
      : precision_(precision), bindings_(bindings), options_(options), sign_memo_(sign_memo) {}

  Interval eval(const RadicalExpr& e) {
    auto it = cache_.find(e.node_id());
    if (it != cache_.end()) return it->second;
    const auto& c = e.children();
    Interval r(precision_);
    switch (e.kind()) {
      case RadicalExpr::Kind::kConstant:
        r = Interval(e.constant_value(), precision_);
        break;
      case RadicalExpr::Kind::kVariable: {
        auto b = bindings_.find(e.variable_id());
        if (b == bindings_.end())
          throw UnsupportedExpression(std::string("unbound variable ") + variable_name(e.variable_id()));
        r = b->second;
        break;
      }
      case RadicalExpr::Kind::kAdd:
        r = eval(c[0]) + eval(c[1]);
        break;
      case RadicalExpr::Kind::kSub:
        r = eval(c[0]) - eval(c[1]);
        break;
      case RadicalExpr::Kind::kNeg:
        r = -eval(c[0]);
        break;
      case RadicalExpr::Kind::kMul:
        r = eval(c[0]) * eval(c[1]);
        break;
      case RadicalExpr::Kind::kDiv: {
        Interval num = eval(c[0]);
        Interval den = eval(c[1]);
        if (den.contains_zero()) throw NeedsRefinement{c[1]};
        r = num / den;
        break;
      }
      case RadicalExpr::Kind::kSqrt: {
        Interval x = eval(c[0]);
        if (x.is_negative()) throw NegativeRadicand("square root of a negative quantity: " + c[0].to_string());
        if (!x.is_nonnegative()) {
          if (c[0].has_variables())
            throw NonConvergence("radicand enclosure straddles 0 over the variable bindings");
          int s = exact_sign(c[0]);
          if (s < 0) throw NegativeRadicand("square root of a negative quantity: " + c[0].to_string());
          x = x.clamp_nonnegative();
        }
        r = sqrt(x);
        break;
      }
    }
    cache_.emplace(e.node_id(), r);
    return r;
  }

 private:
  int exact_sign(const RadicalExpr& e) {
    auto it = sign_memo_.find(e.node_id());
    if (it != sign_memo_.end()) return it->second;
    int s = sign_of(e, options_);
    sign_memo_.emplace(e.node_id(), s);
    return s;
  }

  mpfr_prec_t precision_;
  const VariableBindings& bindings_;
  const EvalOptions& options_;
  std::map<const void*, int>& sign_memo_;
  std::map<const void*, Interval> cache_;
};

}  // namespace

Interval interval_eval_at(const RadicalExpr& expr, mpfr_prec_t precision, const VariableBindings& bindings,
                          const EvalOptions& options) {
  std::map<const void*, int> memo;
  try {
    return IntervalEvaluator(precision, bindings, options, memo).eval(expr);
  } catch (const NeedsRefinement& r) {
    throw DivisionByZero("divisor enclosure contains 0 at precision " + std::to_string(precision) + ": " +
                         r.divisor.to_string());
  }
}

Interval interval_eval(const RadicalExpr& expr, const Rational& target_width, const EvalOptions& options) {
  if (target_width <= 0) throw std::invalid_argument("interval_eval: target width must be positive");
  std::map<const void*, int> memo;
  const VariableBindings none;
  std::optional<RadicalExpr> stuck_divisor;
  for (mpfr_prec_t p = options.initial_precision; p <= options.max_precision; p *= 2) {
    try {
      Interval r = IntervalEvaluator(p, none, options, memo).eval(expr);
      if (r.width() <= target_width) return r;
      stuck_divisor.reset();
    } catch (const NeedsRefinement& r) {
      stuck_divisor = r.divisor;
    }
  }
  if (stuck_divisor && !stuck_divisor->has_variables() && sign_of(*stuck_divisor, options) == 0)
    throw DivisionByZero("division by an expression that is exactly zero: " + stuck_divisor->to_string());
  throw NonConvergence("interval_eval: width target not met within " + std::to_string(options.max_precision) +
                       " bits");
}

int sign_of(const RadicalExpr& expr, const EvalOptions& options) {
  if (expr.kind() == RadicalExpr::Kind::kConstant) return sign(expr.constant_value());
  detail::ExactField field(options);
  return field.sign(field.lower(expr));
}

int compare(const RadicalExpr& x, const RadicalExpr& y, const EvalOptions& options) {
  return sign_of(x - y, options);
}

}  // namespace moebius

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

#include "moebius/certs/report.hpp"

#include "moebius/errors.hpp"
#include "moebius/exactnum/interval.hpp"
#include "moebius/exactnum/radical_expr.hpp"
#include "moebius/poly/bivar_poly.hpp"
#include "moebius/poly/elimination.hpp"
#include "moebius/poly/sturm.hpp"

namespace moebius {

using nlohmann::json;

bool CertReport::verified() const {
  if (steps_.empty()) return false;
  for (const auto& s : steps_)
    if (!s.result) return false;
  return true;
}

bool CertReport::add(std::string anchor, std::string kind, json payload, bool result) {
  steps_.push_back({std::move(anchor), std::move(kind), std::move(payload), result});
  return result;
}

void CertReport::append(const CertReport& other) {
  for (const auto& s : other.steps_) steps_.push_back(s);
}

json CertReport::to_json() const {
  json steps = json::array();
  for (const auto& s : steps_)
    steps.push_back({{"anchor", s.anchor}, {"kind", s.kind}, {"payload", s.payload}, {"result", s.result}});
  return {{"id", id_}, {"status", status()}, {"steps", steps}};
}

CertReport CertReport::from_json(const json& j) {
  try {
    CertReport r(j.at("id").get<std::string>());
    for (const auto& s : j.at("steps"))
      r.steps_.push_back({s.at("anchor").get<std::string>(), s.at("kind").get<std::string>(), s.at("payload"),
                          s.at("result").get<bool>()});
    if (j.at("status").get<std::string>() != r.status())
      throw SchemaError("report status does not match its steps");
    return r;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed certificate report: ") + e.what());
  }
}

namespace {

Bound parse_bound(const std::string& s) {
  if (s == "-inf") return Bound::negative_infinity();
  if (s == "+inf") return Bound::positive_infinity();
  return Bound(parse_qsqrt3(s));
}

Poly payload_poly(const json& p, const char* key) {
  return parse_poly(p.at(key).get<std::string>(), p.value("variable", std::string("b")));
}

RadicalExpr payload_expr(const json& p, const char* key) {
  return RadicalExpr::parse(p.at(key).get<std::string>());
}

bool replay_enclosure(const json& p) {
  Interval iv = interval_eval(payload_expr(p, "expr"), parse_rational(p.at("width").get<std::string>()));
  Rational lo = parse_rational(p.at("lower").get<std::string>());
  Rational hi = parse_rational(p.at("upper").get<std::string>());
  return iv.lower() > lo && iv.upper() < hi;
}

bool replay_atan_sum(const json& p) {
  const mpfr_prec_t prec = p.value("precision", 256);
  Interval total = Interval::pi(prec) * Interval(parse_rational(p.at("pi_coef").get<std::string>()), prec) +
                   Interval(parse_rational(p.value("constant", std::string("0"))), prec);
  for (const auto& term : p.at("terms")) {
    Interval arg = interval_eval(payload_expr(term, "arg"), Rational(1, 1) / (Rational(1) << 200));
    total = total + Interval(parse_rational(term.at("coef").get<std::string>()), prec) * atan(arg);
  }
  return total.is_positive();
}

}  // namespace

Interval enclose_over(const RadicalExpr& expr, const QSqrt3& lo, const QSqrt3& hi) {
  return enclose_over(expr, Variable::kB, lo, hi);
}

Interval enclose_over(const RadicalExpr& expr, Variable v, const QSqrt3& lo, const QSqrt3& hi) {
  const mpfr_prec_t prec = 256;
  VariableBindings bind;
  bind.emplace(v, hull(Interval(lo, prec), Interval(hi, prec)));
  return interval_eval_at(expr, prec, bind);
}

bool replay_step(const CertStep& step) {
  const json& p = step.payload;
  try {
    if (step.kind == "note") return step.result;
    if (step.kind == "sign") return sign_of(payload_expr(p, "expr")) == p.at("expected").get<int>();
    if (step.kind == "enclosure") return replay_enclosure(p);
    if (step.kind == "sturm_count") {
      SturmChain chain(payload_poly(p, "poly"));
      return chain.count_roots(parse_bound(p.at("lo").get<std::string>()),
                               parse_bound(p.at("hi").get<std::string>())) == p.at("count").get<int>();
    }
    if (step.kind == "positivity")
      return check_positive_on_segment(payload_poly(p, "poly"), parse_qsqrt3(p.at("lo").get<std::string>()),
                                       parse_qsqrt3(p.at("hi").get<std::string>()))
          .verified;
    if (step.kind == "poly_identity") {
      BivarPoly computed = parse_bivar_poly(p.at("computed").get<std::string>());
      BivarPoly reference = parse_bivar_poly(p.at("reference").get<std::string>());
      return computed == reference * BivarPoly(parse_qsqrt3(p.at("factor").get<std::string>()));
    }
    if (step.kind == "elimination") {
      BivarPoly computed = eliminate_radicals_bivariate(payload_expr(p, "expr")).polynomial;
      return computed == parse_bivar_poly(p.at("poly").get<std::string>());
    }
    if (step.kind == "isolation") {
      auto roots = isolate_roots(payload_poly(p, "poly"), parse_bound(p.at("lo").get<std::string>()),
                                 parse_bound(p.at("hi").get<std::string>()),
                                 parse_rational(p.at("width").get<std::string>()));
      json listed = json::array();
      for (const auto& r : roots) listed.push_back({r.lo.to_string(), r.hi.to_string()});
      return listed == p.at("roots");
    }
    if (step.kind == "positive_over") {
      // Optional fields: "variable" (default b) and "sign" (default +1).
      const Variable v = p.value("variable", std::string("b")) == "t" ? Variable::kT : Variable::kB;
      Interval iv = enclose_over(payload_expr(p, "expr"), v, parse_qsqrt3(p.at("lo").get<std::string>()),
                                 parse_qsqrt3(p.at("hi").get<std::string>()));
      return p.value("sign", 1) > 0 ? iv.is_positive() : iv.is_negative();
    }
    if (step.kind == "atan_sum") return replay_atan_sum(p);
  } catch (const json::exception& e) {
    throw SchemaError("step '" + step.anchor + "' has a malformed payload: " + e.what());
  }
  throw SchemaError("unknown certificate step kind '" + step.kind + "'");
}

bool replay(const CertReport& report) {
  for (const auto& s : report.steps())
    if (replay_step(s) != s.result) return false;
  return !report.steps().empty();
}

}  // namespace moebius

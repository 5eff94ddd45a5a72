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

#include "json.hpp"

namespace moebius {

/// One checked fact inside a certificate.
///
/// `kind` selects how the step is replayed from `payload` alone (see
/// replay_step). `anchor` is a short human label for the claim the step
/// supports.
struct CertStep {
  std::string anchor;
  std::string kind;
  nlohmann::json payload;
  bool result = false;
};

/// A machine-checked certificate: a list of steps that all have to hold.
///
/// The serialized form is deterministic. Wall time is kept on the object for
/// display but never written into the JSON payload.
class CertReport {
 public:
  CertReport() = default;
  explicit CertReport(std::string id) : id_(std::move(id)) {}

  const std::string& id() const { return id_; }
  const std::vector<CertStep>& steps() const { return steps_; }
  bool verified() const;
  std::string status() const { return verified() ? "verified" : "failed"; }

  /// Appends a step and returns its result for chaining into local logic.
  bool add(std::string anchor, std::string kind, nlohmann::json payload, bool result);
  void append(const CertReport& other);

  double wall_time_seconds() const { return wall_time_; }
  void set_wall_time_seconds(double s) { wall_time_ = s; }

  nlohmann::json to_json() const;
  std::string dump() const { return to_json().dump(2); }
  /// Throws SchemaError on malformed input.
  static CertReport from_json(const nlohmann::json& j);

 private:
  std::string id_;
  std::vector<CertStep> steps_;
  double wall_time_ = 0;
};

/// Enclosure of an expression in one variable over that variable in [lo, hi].
class Interval;
class RadicalExpr;
class QSqrt3;
enum class Variable;
Interval enclose_over(const RadicalExpr& expr, const QSqrt3& lo, const QSqrt3& hi);
Interval enclose_over(const RadicalExpr& expr, Variable v, const QSqrt3& lo, const QSqrt3& hi);

/// Recomputes a step from its payload. Steps of kind "note" record
/// documented assumptions or sampled observations and replay to their stored
/// result. Unknown kinds throw SchemaError.
bool replay_step(const CertStep& step);

/// True when every step replays to its recorded result and the report's
/// status matches.
bool replay(const CertReport& report);

}  // namespace moebius

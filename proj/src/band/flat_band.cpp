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

#include "moebius/band/flat_band.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "moebius/errors.hpp"
#include "moebius/exactnum/qsqrt3.hpp"

namespace moebius {

namespace {

constexpr double kHeightTol = 1e-9;

}  // namespace

FlatBand::FlatBand(double lambda, std::vector<double> left, std::vector<double> right, std::vector<Bend> interior)
    : lambda_(lambda), left_(std::move(left)), right_(std::move(right)) {
  if (left_.empty() || right_.empty()) throw SchemaError("band needs at least one vertex on each ridge");
  if (left_.size() + right_.size() < 3) throw SchemaError("band has no triangles");
  bends_.reserve(interior.size() + 2);
  bends_.emplace_back(0, 0);
  for (const auto& b : interior) bends_.push_back(b);
  bends_.emplace_back(static_cast<int>(left_.size()) - 1, static_cast<int>(right_.size()) - 1);
  signs_.reserve(bends_.size() - 1);
  for (std::size_t k = 0; k + 1 < bends_.size(); ++k) {
    int dl = bends_[k + 1].first - bends_[k].first;
    int dr = bends_[k + 1].second - bends_[k].second;
    if (dl + dr != 1 || dl < 0 || dr < 0)
      throw GeometryError("bends " + std::to_string(k) + " and " + std::to_string(k + 1) +
                          " do not bound a triangle");
    signs_.push_back(dl == 1 ? -1 : +1);
  }
  validate();
}

FlatBand FlatBand::from_signs(double lambda, std::vector<double> left, std::vector<double> right,
                              const std::vector<int>& signs) {
  std::vector<Bend> interior;
  int l = 0, r = 0;
  for (std::size_t k = 0; k + 1 < signs.size(); ++k) {
    if (signs[k] < 0)
      ++l;
    else
      ++r;
    interior.emplace_back(l, r);
  }
  return FlatBand(lambda, std::move(left), std::move(right), std::move(interior));
}

void FlatBand::validate() const {
  if (!(lambda_ > 0) || !std::isfinite(lambda_)) throw GeometryError("lambda must be positive");
  auto ascending = [](const std::vector<double>& v, const char* name) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (!(v[i + 1] > v[i])) throw GeometryError(std::string(name) + " ridge heights are not ascending");
  };
  ascending(left_, "left");
  ascending(right_, "right");
  if (std::abs(right_.back() - left_.front() - lambda_) > kHeightTol ||
      std::abs(left_.back() - right_.front() - lambda_) > kHeightTol)
    throw GeometryError("top bend is not the image of the bottom bend under (x, y) ~ (1 - x, y + lambda)");
}

std::array<Vec2, 3> FlatBand::triangle(int i) const {
  auto ids = triangle_ids(i);
  std::array<Vec2, 3> out;
  for (int k = 0; k < 3; ++k) out[k] = ids[k].side == 'L' ? left_point(ids[k].index) : right_point(ids[k].index);
  return out;
}

std::array<FlatBand::VertexId, 3> FlatBand::triangle_ids(int i) const {
  const Bend& lo = bends_[i];
  const Bend& hi = bends_[i + 1];
  if (signs_[i] > 0) return {{{'L', lo.first}, {'R', lo.second}, {'R', hi.second}}};
  return {{{'R', lo.second}, {'L', lo.first}, {'L', hi.first}}};
}

double FlatBand::bend_slope(int k) const { return right_[bends_[k].second] - left_[bends_[k].first]; }

namespace {

double parse_height(const nlohmann::json& v, double edge_x, const char* side) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return parse_qsqrt3(v.get<std::string>()).to_double();
    } catch (const ParseError& e) {
      throw SchemaError(std::string(side) + " ridge entry: " + e.what());
    }
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    if (std::abs(v[0].get<double>() - edge_x) > kHeightTol)
      throw GeometryError(std::string(side) + " ridge vertex (" + std::to_string(v[0].get<double>()) + ", " +
                          std::to_string(v[1].get<double>()) + ") is not on the boundary");
    return v[1].get<double>();
  }
  throw SchemaError(std::string(side) + " ridge entries must be numbers, Q(sqrt3) strings or [x, y] points");
}

std::vector<double> parse_ridge(const nlohmann::json& j, const char* key, double edge_x) {
  if (!j.contains(key) || !j[key].is_array()) throw SchemaError(std::string("missing array \"") + key + "\"");
  std::vector<double> out;
  for (const auto& v : j[key]) out.push_back(parse_height(v, edge_x, key));
  return out;
}

}  // namespace

BandSpec parse_band_spec_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("band spec is not JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("band spec must be a JSON object");
  std::vector<double> left = parse_ridge(j, "left_ridge", 0.0);
  std::vector<double> right = parse_ridge(j, "right_ridge", 1.0);
  if (left.empty() || right.empty() || left.size() + right.size() < 3) throw SchemaError("band has no triangles");

  double lambda = 0;
  if (!j.contains("lambda")) throw SchemaError("missing \"lambda\"");
  if (j["lambda"].is_string() && j["lambda"] == "derive")
    lambda = right.back() - left.front();
  else if (j["lambda"].is_number())
    lambda = j["lambda"].get<double>();
  else
    throw SchemaError("\"lambda\" must be a number or \"derive\"");

  std::vector<FlatBand::Bend> interior;
  if (j.contains("diagonals")) {
    if (!j["diagonals"].is_array()) throw SchemaError("\"diagonals\" must be an array");
    for (const auto& d : j["diagonals"]) {
      if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
        throw SchemaError("each diagonal is a [left index, right index] pair");
      interior.emplace_back(d[0].get<int>(), d[1].get<int>());
    }
  }
  BandSpec spec{FlatBand(lambda, std::move(left), std::move(right), std::move(interior)), {}};
  if (j.contains("dihedrals")) {
    if (!j["dihedrals"].is_array()) throw SchemaError("\"dihedrals\" must be an array");
    for (const auto& d : j["dihedrals"]) {
      if (!d.is_number()) throw SchemaError("dihedrals are numbers in radians");
      spec.dihedrals.push_back(d.get<double>());
    }
  }
  return spec;
}

BandSpec parse_band_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open band spec " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_band_spec_text(buf.str());
}

}  // namespace moebius

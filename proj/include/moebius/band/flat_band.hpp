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

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace moebius {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

/// Default tolerances of the floating point band kernel.
struct BandTolerances {
  double gluing = 1e-9;
  double closure = 1e-9;
  double bisection = 1e-12;
};

/// A triangulated strip of width 1 cut open along a bend.
///
/// The strip is drawn in the plane with its left edge on x = 0 and its right
/// edge on x = 1. Ridge vertices are given by their heights on these edges.
/// The bottom bend joins left[0] to right[0]; the top bend joins left.back()
/// to right.back() and is glued to the bottom one by (x, y) ~ (1 - x, y + lambda),
/// so right.back() = left[0] + lambda and left.back() = right[0] + lambda.
///
/// Bends are stored as (left index, right index) pairs from bottom to top.
/// Triangle i lies between bends i and i + 1. Its sign is -1 when its ridge is
/// on the left edge and +1 when it is on the right edge.
class FlatBand {
 public:
  using Bend = std::pair<int, int>;

  FlatBand() = default;
  /// `interior` lists the bends strictly between the bottom and the top.
  /// Throws GeometryError when the data does not describe a triangulated band
  /// and SchemaError when there is nothing to triangulate.
  FlatBand(double lambda, std::vector<double> left, std::vector<double> right, std::vector<Bend> interior);
  /// Builds the bends from a sign sequence.
  static FlatBand from_signs(double lambda, std::vector<double> left, std::vector<double> right,
                             const std::vector<int>& signs);

  double lambda() const { return lambda_; }
  const std::vector<double>& left() const { return left_; }
  const std::vector<double>& right() const { return right_; }
  const std::vector<Bend>& bends() const { return bends_; }
  int triangle_count() const { return static_cast<int>(signs_.size()); }
  const std::vector<int>& signs() const { return signs_; }

  Vec2 left_point(int i) const { return {0.0, left_[i]}; }
  Vec2 right_point(int j) const { return {1.0, right_[j]}; }

  /// Vertices of triangle i as (apex, first ridge vertex, second ridge vertex).
  std::array<Vec2, 3> triangle(int i) const;
  /// The apex and ridge vertex ids of triangle i; ids are ('L' or 'R', index).
  struct VertexId {
    char side;
    int index;
  };
  std::array<VertexId, 3> triangle_ids(int i) const;

  /// Flat slope of bend k, i.e. right height minus left height.
  double bend_slope(int k) const;

 private:
  void validate() const;

  double lambda_ = 0;
  std::vector<double> left_;
  std::vector<double> right_;
  std::vector<Bend> bends_;
  std::vector<int> signs_;
};

/// A band-spec file: the flat band plus the fold angles it asks for.
struct BandSpec {
  FlatBand flat;
  std::vector<double> dihedrals;
};

/// Reads the JSON band-spec format:
///   {"lambda": number | "derive", "left_ridge": [...], "right_ridge": [...],
///    "diagonals": [[i, j], ...], "dihedrals": [radians, ...]}
/// Ridge entries are numbers, Q(sqrt3) strings such as "2/3*sqrt3", or
/// [x, y] points that must lie on the matching edge.
BandSpec parse_band_spec(const std::string& path);
BandSpec parse_band_spec_text(const std::string& text);

}  // namespace moebius

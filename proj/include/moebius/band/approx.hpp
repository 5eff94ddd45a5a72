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
#include <functional>
#include <vector>

#include "moebius/band/flat_band.hpp"

namespace moebius {

/// One mesh bend: flat heights of its ends on the left (x = 0) and right
/// (x = 1) edges of the strip, and the sampled images of those ends.
struct MeshBend {
  double left = 0;
  double right = 0;
  Vec3 left_image = Vec3::Zero();
  Vec3 right_image = Vec3::Zero();
};

struct ApproxResult {
  std::vector<std::array<Vec2, 3>> flat;
  std::vector<std::array<Vec3, 3>> images;
  std::vector<double> distortion;  // per triangle
  double K = 1;
  double max_proximity_error = 0;  // at triangle centroids, when a surface is given
  bool proximity_ok = true;        // max_proximity_error <= K - 1

  /// Linear part of triangle i's map (3x2).
  Eigen::Matrix<double, 3, 2> linear_part(int i) const;
};

/// Triangulates the strip between consecutive mesh bends, one diagonal per
/// trapezoid (none when the two bends share an end), and maps each triangle
/// linearly onto the sampled images. K is the largest of max(sigma_1,
/// 1/sigma_2) over the triangles. When `surface` is given, the piecewise
/// linear map is compared with it at the triangle centroids. Throws
/// DegenerateMesh when bends cross or coincide in the flat strip.
ApproxResult approximate_smooth(const std::vector<MeshBend>& bends,
                                const std::function<Vec3(const Vec2&)>& surface = {});

/// A piece of a circular cone rolled out from the flat strip: the bends are
/// rays through the flat apex (-apex_distance, height / 2), spread over
/// angles in [-half_angle, half_angle], and a point at polar coordinates
/// (r, phi) about the apex goes to r (s cos(phi/s), s sin(phi/s), c) with
/// s = sin_alpha. sin_alpha = 1 gives the flat strip itself.
struct ConePatch {
  double apex_distance = 1.0;
  double height = 1.0;
  double half_angle = 0.6;
  double sin_alpha = 0.5;

  Vec3 operator()(const Vec2& p) const;
  /// n + 1 equally spaced bends sampled exactly on the surface.
  std::vector<MeshBend> samples(int n) const;
};

}  // namespace moebius

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

#include "moebius/band/approx.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "moebius/errors.hpp"

namespace moebius {

namespace {

Eigen::Matrix<double, 3, 2> linear_map(const std::array<Vec2, 3>& p, const std::array<Vec3, 3>& q) {
  Eigen::Matrix2d E;
  E << p[1] - p[0], p[2] - p[0];
  Eigen::Matrix<double, 3, 2> F;
  F << q[1] - q[0], q[2] - q[0];
  return F * E.inverse();
}

}  // namespace

Eigen::Matrix<double, 3, 2> ApproxResult::linear_part(int i) const { return linear_map(flat[i], images[i]); }

ApproxResult approximate_smooth(const std::vector<MeshBend>& bends, const std::function<Vec3(const Vec2&)>& surface) {
  if (bends.size() < 2) throw DegenerateMesh("a mesh needs at least two bends");
  ApproxResult out;
  auto add = [&](const Vec2& a, const Vec2& b, const Vec2& c, const Vec3& A, const Vec3& B, const Vec3& C) {
    out.flat.push_back({a, b, c});
    out.images.push_back({A, B, C});
  };
  for (std::size_t k = 0; k + 1 < bends.size(); ++k) {
    const MeshBend& lo = bends[k];
    const MeshBend& hi = bends[k + 1];
    const double dl = hi.left - lo.left, dr = hi.right - lo.right;
    if (dl < 0 || dr < 0 || (dl == 0 && dr == 0))
      throw DegenerateMesh("bends " + std::to_string(k) + " and " + std::to_string(k + 1) + " cross in the strip");
    Vec2 a(0, lo.left), b(1, lo.right), c(1, hi.right), d(0, hi.left);
    if (dl == 0) {
      add(a, b, c, lo.left_image, lo.right_image, hi.right_image);
    } else if (dr == 0) {
      add(a, b, d, lo.left_image, lo.right_image, hi.left_image);
    } else {
      add(a, b, c, lo.left_image, lo.right_image, hi.right_image);
      add(a, c, d, lo.left_image, hi.right_image, hi.left_image);
    }
  }
  for (std::size_t i = 0; i < out.flat.size(); ++i) {
    Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(out.linear_part(static_cast<int>(i)));
    const auto& s = svd.singularValues();
    double k = s(1) > 0 ? std::max(s(0), 1 / s(1)) : std::numeric_limits<double>::infinity();
    out.distortion.push_back(k);
    out.K = std::max(out.K, k);
  }
  if (surface) {
    for (std::size_t i = 0; i < out.flat.size(); ++i) {
      Vec2 centroid = (out.flat[i][0] + out.flat[i][1] + out.flat[i][2]) / 3;
      Vec3 mesh = (out.images[i][0] + out.images[i][1] + out.images[i][2]) / 3;
      out.max_proximity_error = std::max(out.max_proximity_error, (mesh - surface(centroid)).norm());
    }
    out.proximity_ok = out.max_proximity_error <= out.K - 1;
  }
  return out;
}

Vec3 ConePatch::operator()(const Vec2& p) const {
  Vec2 v = p - Vec2(-apex_distance, height / 2);
  double r = v.norm(), phi = std::atan2(v.y(), v.x());
  double cos_alpha = std::sqrt(std::max(0.0, 1 - sin_alpha * sin_alpha));
  return r * Vec3(sin_alpha * std::cos(phi / sin_alpha), sin_alpha * std::sin(phi / sin_alpha), cos_alpha);
}

std::vector<MeshBend> ConePatch::samples(int n) const {
  if (n < 1) throw DegenerateMesh("a mesh needs at least one trapezoid");
  std::vector<MeshBend> out;
  for (int k = 0; k <= n; ++k) {
    double phi = -half_angle + 2 * half_angle * k / n;
    MeshBend b;
    b.left = height / 2 + apex_distance * std::tan(phi);
    b.right = height / 2 + (apex_distance + 1) * std::tan(phi);
    b.left_image = (*this)(Vec2(0, b.left));
    b.right_image = (*this)(Vec2(1, b.right));
    out.push_back(b);
  }
  return out;
}

}  // namespace moebius

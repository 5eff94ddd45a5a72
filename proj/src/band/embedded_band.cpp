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

#include "moebius/band/embedded_band.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Geometry>
#include <Eigen/SVD>

#include "moebius/errors.hpp"

namespace moebius {

EmbeddedBand::EmbeddedBand(FlatBand flat, std::vector<Vec3> left_images, std::vector<Vec3> right_images)
    : flat_(std::move(flat)), left_(std::move(left_images)), right_(std::move(right_images)) {
  if (left_.size() != flat_.left().size() || right_.size() != flat_.right().size())
    throw std::invalid_argument("one image per ridge vertex is required");
}

std::array<Vec3, 3> EmbeddedBand::facet(int i) const {
  auto ids = flat_.triangle_ids(i);
  std::array<Vec3, 3> out;
  for (int k = 0; k < 3; ++k) out[k] = ids[k].side == 'L' ? left_[ids[k].index] : right_[ids[k].index];
  return out;
}

Eigen::Matrix<double, 3, 2> EmbeddedBand::linear_part(int i) const {
  auto p = flat_.triangle(i);
  auto q = facet(i);
  Eigen::Matrix2d E;
  E.col(0) = p[1] - p[0];
  E.col(1) = p[2] - p[0];
  Eigen::Matrix<double, 3, 2> F;
  F.col(0) = q[1] - q[0];
  F.col(1) = q[2] - q[0];
  return F * E.inverse();
}

Vec3 EmbeddedBand::map(int i, const Vec2& p) const {
  auto p0 = flat_.triangle(i)[0];
  return facet(i)[0] + linear_part(i) * (p - p0);
}

double EmbeddedBand::distortion(int i) const {
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(linear_part(i));
  auto s = svd.singularValues();
  if (s(1) <= 0) return std::numeric_limits<double>::infinity();
  return std::max(s(0), 1.0 / s(1));
}

double EmbeddedBand::max_distortion() const {
  double k = 1;
  for (int i = 0; i < facet_count(); ++i) k = std::max(k, distortion(i));
  return k;
}

double EmbeddedBand::isometry_residual() const {
  double worst = 0;
  for (int i = 0; i < facet_count(); ++i) {
    auto p = flat_.triangle(i);
    auto q = facet(i);
    for (int a = 0; a < 3; ++a) {
      int b = (a + 1) % 3;
      worst = std::max(worst, std::abs((q[a] - q[b]).norm() - (p[a] - p[b]).norm()));
    }
  }
  return worst;
}

double EmbeddedBand::closure_residual() const {
  return std::max((left_.back() - right_.front()).norm(), (right_.back() - left_.front()).norm());
}

std::pair<Vec2, Vec2> EmbeddedBand::bend_flat(const BendRef& b) const {
  auto p = flat_.triangle(b.facet);
  Vec2 ridge = p[1] + b.u * (p[2] - p[1]);
  if (flat_.signs()[b.facet] > 0) return {p[0], ridge};
  return {ridge, p[0]};
}

std::pair<Vec3, Vec3> EmbeddedBand::bend_image(const BendRef& b) const {
  auto q = facet(b.facet);
  Vec3 ridge = q[1] + b.u * (q[2] - q[1]);
  if (flat_.signs()[b.facet] > 0) return {q[0], ridge};
  return {ridge, q[0]};
}

Vec3 EmbeddedBand::bend_vector(int k) const {
  const auto& bend = flat_.bends()[k];
  return right_[bend.second] - left_[bend.first];
}

Vec3 EmbeddedBand::core_point(const BendRef& b) const {
  auto [l, r] = bend_image(b);
  return (l + r) / 2;
}

EmbeddedBand EmbeddedBand::transformed(const Eigen::Matrix3d& M, const Vec3& shift) const {
  std::vector<Vec3> l, r;
  for (const auto& v : left_) l.push_back(M * v + shift);
  for (const auto& v : right_) r.push_back(M * v + shift);
  return EmbeddedBand(flat_, std::move(l), std::move(r));
}

EmbeddedBand fold(const FlatBand& flat, const std::vector<double>& dihedrals) {
  const int n = flat.triangle_count();
  if (static_cast<int>(dihedrals.size()) != n - 1)
    throw std::invalid_argument("fold needs " + std::to_string(n - 1) + " dihedral angles, got " +
                                std::to_string(dihedrals.size()));
  std::vector<Vec3> left(flat.left().size()), right(flat.right().size());

  // Triangle 0: rotate the bottom bend onto the positive X axis.
  const Vec2 l0 = flat.left_point(0);
  const Vec2 dir = flat.right_point(0) - l0;
  const double c = dir.x() / dir.norm(), s = dir.y() / dir.norm();
  auto place0 = [&](const Vec2& p) {
    Vec2 d = p - l0;
    return Vec3(c * d.x() + s * d.y(), -s * d.x() + c * d.y(), 0.0);
  };
  auto store = [&](const FlatBand::VertexId& id, const Vec3& v) {
    (id.side == 'L' ? left : right)[id.index] = v;
  };
  auto ids0 = flat.triangle_ids(0);
  auto tri0 = flat.triangle(0);
  for (int k = 0; k < 3; ++k) store(ids0[k], place0(tri0[k]));

  auto image_of = [&](const FlatBand::VertexId& id) -> const Vec3& {
    return id.side == 'L' ? left[id.index] : right[id.index];
  };
  for (int i = 1; i < n; ++i) {
    // Affine map of triangle i - 1 from its (already placed) vertices.
    auto prev_ids = flat.triangle_ids(i - 1);
    auto prev = flat.triangle(i - 1);
    Eigen::Matrix2d E;
    E.col(0) = prev[1] - prev[0];
    E.col(1) = prev[2] - prev[0];
    Eigen::Matrix<double, 3, 2> F;
    F.col(0) = image_of(prev_ids[1]) - image_of(prev_ids[0]);
    F.col(1) = image_of(prev_ids[2]) - image_of(prev_ids[0]);
    Eigen::Matrix<double, 3, 2> A = F * E.inverse();

    auto ids = flat.triangle_ids(i);
    Vec2 fresh = flat.triangle(i)[2];
    Vec3 flat_continuation = image_of(prev_ids[0]) + A * (fresh - prev[0]);

    const auto& bend = flat.bends()[i];
    Vec3 a = left[bend.first], b = right[bend.second];
    Eigen::AngleAxisd rot(dihedrals[i - 1], (b - a).normalized());
    store(ids[2], a + rot * (flat_continuation - a));
  }
  return EmbeddedBand(flat, std::move(left), std::move(right));
}

}  // namespace moebius

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
#include <utility>
#include <vector>

#include "moebius/band/flat_band.hpp"

namespace moebius {

/// A bend inside triangle `facet`: the segment from the apex to the ridge
/// point at parameter u in [0, 1] (u = 0 is bend `facet`, u = 1 is bend
/// `facet + 1`).
struct BendRef {
  int facet = 0;
  double u = 0;
};

/// Piecewise linear map of a FlatBand into space, fixed by the images of the
/// ridge vertices. Each triangle carries the affine map determined by its
/// three vertex images, so adjacent facets agree on their shared bend image by
/// construction. The top vertices have their own images; the closure residual
/// measures how far they are from the bottom vertices they are glued to.
class EmbeddedBand {
 public:
  EmbeddedBand() = default;
  EmbeddedBand(FlatBand flat, std::vector<Vec3> left_images, std::vector<Vec3> right_images);

  const FlatBand& flat() const { return flat_; }
  const std::vector<Vec3>& left_images() const { return left_; }
  const std::vector<Vec3>& right_images() const { return right_; }
  int facet_count() const { return flat_.triangle_count(); }

  /// Images of triangle i's vertices in FlatBand::triangle order.
  std::array<Vec3, 3> facet(int i) const;
  /// Linear part of facet i's affine map.
  Eigen::Matrix<double, 3, 2> linear_part(int i) const;
  /// Affine extension of facet i's map to any point of the plane.
  Vec3 map(int i, const Vec2& p) const;
  /// max(sigma_max, 1/sigma_min) of facet i's linear part; 1 for isometries.
  double distortion(int i) const;
  double max_distortion() const;
  /// Largest difference between an image edge length and its flat length.
  double isometry_residual() const;
  /// Distance between the two images of the seam bend.
  double closure_residual() const;

  /// Flat endpoints (left, right) of a bend.
  std::pair<Vec2, Vec2> bend_flat(const BendRef& b) const;
  /// Image endpoints (left end, right end) of a bend.
  std::pair<Vec3, Vec3> bend_image(const BendRef& b) const;
  /// Right end minus left end of bend k, k = 0..n (bend n is the top bend).
  Vec3 bend_vector(int k) const;
  /// Image of the midpoint of a bend; these points trace the core curve.
  Vec3 core_point(const BendRef& b) const;

  /// x -> M x + shift applied to the whole band.
  EmbeddedBand transformed(const Eigen::Matrix3d& M, const Vec3& shift) const;

 private:
  FlatBand flat_;
  std::vector<Vec3> left_;
  std::vector<Vec3> right_;
};

/// Places triangle 0 with its bottom bend from (0,0,0) to (B,0,0) in the XY
/// plane, then glues each next triangle along the shared bend. Dihedral k
/// rotates triangle k + 1 about bend k + 1 (oriented from its left end to its
/// right end) away from the flat continuation of triangle k: 0 leaves the
/// strip unfolded and pi folds it flat onto the previous triangle.
/// Throws std::invalid_argument unless there is one angle per interior bend.
EmbeddedBand fold(const FlatBand& flat, const std::vector<double>& dihedrals);

}  // namespace moebius

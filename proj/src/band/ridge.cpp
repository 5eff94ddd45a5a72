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

#include "moebius/band/ridge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Geometry>

#include "moebius/errors.hpp"

namespace moebius {

namespace {

using std::numbers::pi;

double angle_between(const Vec3& a, const Vec3& b) { return std::atan2(a.cross(b).norm(), a.dot(b)); }

RidgeCurve build_ridge(const EmbeddedBand& e) {
  auto core = core_curve(e);
  RidgeCurve r;
  r.start = e.bend_vector(0);
  r.vertices.push_back(r.start);
  for (int i = 0; i < e.facet_count(); ++i) {
    Vec3 edge = 2.0 * e.flat().signs()[i] * (core[i + 1] - core[i]);
    r.edges.push_back(edge);
    r.vertices.push_back(r.vertices.back() + edge);
  }
  return r;
}

// Largest |elevation| above the XY plane of the directions p(s) = a + s (b - a)
// for s in [0, 1]. The directions sweep a great circle arc from a to b.
double max_elevation_on_arc(const Vec3& a, const Vec3& b) {
  auto elevation = [](const Vec3& v) { return std::asin(std::min(1.0, std::abs(v.z()) / v.norm())); };
  double best = std::max(elevation(a), elevation(b));
  Vec3 m = a.cross(b);
  if (m.norm() < 1e-300) return best;
  m.normalize();
  Vec3 top = Vec3::UnitZ() - Vec3::UnitZ().dot(m) * m;
  if (top.norm() < 1e-300) return best;
  top.normalize();
  const double whole = angle_between(a, b);
  for (const Vec3& c : {top, Vec3(-top)})
    if (std::abs(angle_between(a, c) + angle_between(c, b) - whole) < 1e-12) best = std::max(best, elevation(c));
  return best;
}

}  // namespace

double RidgeCurve::length() const {
  double s = 0;
  for (const auto& e : edges) s += e.norm();
  return s;
}

RidgeCurve RidgeCurve::transformed(const Eigen::Matrix3d& M) const {
  RidgeCurve out;
  out.start = M * start;
  for (const auto& e : edges) out.edges.push_back(M * e);
  for (const auto& v : vertices) out.vertices.push_back(M * v);
  return out;
}

std::vector<Vec3> core_curve(const EmbeddedBand& e) {
  std::vector<Vec3> pts;
  for (const auto& bend : e.flat().bends())
    pts.push_back((e.left_images()[bend.first] + e.right_images()[bend.second]) / 2);
  return pts;
}

RidgeCurve ridge_curve(const EmbeddedBand& e, const BandTolerances& tol) {
  double residual = e.closure_residual();
  if (residual > tol.closure)
    throw ToleranceExceeded("band does not close: seam residual " + std::to_string(residual));
  return build_ridge(e);
}

Eigen::Matrix3d ridge_frame(const RidgeCurve& r) {
  Eigen::Matrix3d Q = Eigen::Quaterniond::FromTwoVectors(r.start, Vec3::UnitX()).toRotationMatrix();
  for (std::size_t k = 0; k + 1 < r.vertices.size(); ++k) {
    Vec3 a = Q * r.vertices[k], b = Q * r.vertices[k + 1];
    if (a.x() > 0 && b.x() <= 0) {
      Vec3 p = a + (a.x() / (a.x() - b.x())) * (b - a);
      double turn = std::atan2(p.z(), p.y());
      return Eigen::AngleAxisd(-turn, Vec3::UnitX()).toRotationMatrix() * Q;
    }
  }
  return Q;
}

EmbeddedBand normalize_band(const EmbeddedBand& e) {
  Eigen::Matrix3d Q = ridge_frame(build_ridge(e));
  return e.transformed(Q, -(Q * e.left_images().front()));
}

bool RidgeReport::all_ok() const {
  return length_ok && endpoint_ok && clearance_ok && tangency_ok && projection_ok && slab_ok && angle_ok;
}

CertReport RidgeReport::to_cert(const std::string& id) const {
  CertReport rep(id);
  rep.add("length 2 lambda", "note", {{"length", length}, {"lambda", lambda}, {"error", length_error}}, length_ok);
  rep.add("ends at minus the start", "note", {{"error", endpoint_error}}, endpoint_ok);
  rep.add("outside the open unit ball", "note", {{"min_vertex_norm", min_vertex_norm}}, clearance_ok);
  rep.add("edge lines tangent to the unit sphere", "note", {{"max_error", max_tangency_error}}, tangency_ok);
  rep.add("radial projection at least pi", "note",
          {{"projection_length", projection_length}, {"lambda_above_half_pi", half_pi_bound}}, projection_ok);
  rep.add("slab |Z| < 1/sqrt2", "note", {{"max_abs_z", max_abs_z}, {"applies", slab_applies}}, slab_ok);
  rep.add("bend directions within pi/4 of the XY plane", "note",
          {{"max_elevation", max_elevation}, {"applies", slab_applies}}, angle_ok);
  return rep;
}

RidgeReport ridge_invariant_report(const RidgeCurve& r, double lambda, double tolerance) {
  RidgeReport rep;
  rep.lambda = lambda;
  rep.length = r.length();
  rep.length_error = std::abs(rep.length - 2 * lambda);
  rep.length_ok = rep.length_error <= tolerance;
  rep.endpoint_error = (r.vertices.back() + r.start).norm();
  rep.endpoint_ok = rep.endpoint_error <= tolerance;

  rep.min_vertex_norm = std::numeric_limits<double>::infinity();
  for (const auto& v : r.vertices) rep.min_vertex_norm = std::min(rep.min_vertex_norm, v.norm());
  rep.clearance_ok = rep.min_vertex_norm >= 1 - tolerance;

  for (std::size_t k = 0; k < r.edges.size(); ++k) {
    const Vec3& d = r.edges[k];
    if (d.norm() == 0) continue;
    double dist = r.vertices[k].cross(d).norm() / d.norm();
    rep.max_tangency_error = std::max(rep.max_tangency_error, std::abs(dist - 1));
  }
  rep.tangency_ok = rep.max_tangency_error <= tolerance;

  for (std::size_t k = 0; k + 1 < r.vertices.size(); ++k)
    rep.projection_length += angle_between(r.vertices[k], r.vertices[k + 1]);
  rep.projection_ok = rep.projection_length >= pi - tolerance;
  rep.half_pi_bound = rep.projection_ok && lambda > pi / 2;

  RidgeCurve framed = r.transformed(ridge_frame(r));
  for (const auto& v : framed.vertices) rep.max_abs_z = std::max(rep.max_abs_z, std::abs(v.z()));
  for (std::size_t k = 0; k + 1 < framed.vertices.size(); ++k)
    rep.max_elevation = std::max(rep.max_elevation, max_elevation_on_arc(framed.vertices[k], framed.vertices[k + 1]));
  rep.slab_applies = lambda < 7 * pi / 12;
  rep.slab_ok = !rep.slab_applies || rep.max_abs_z < 1 / std::sqrt(2.0);
  rep.angle_ok = !rep.slab_applies || rep.max_elevation < pi / 4;
  return rep;
}

}  // namespace moebius

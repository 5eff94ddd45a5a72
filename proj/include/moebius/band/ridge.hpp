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

#include <vector>

#include "moebius/band/embedded_band.hpp"
#include "moebius/certs/report.hpp"

namespace moebius {

/// Ridge curve Gamma: starts at the bottom bend vector ((B,0,0) once the band
/// is normalized) and has edges 2 mu_i E_i, where E_i are the core curve
/// edges and mu_i the sign sequence. Its vertices are the bend vectors of the
/// special bends.
struct RidgeCurve {
  Vec3 start = Vec3::Zero();
  std::vector<Vec3> edges;
  std::vector<Vec3> vertices;  // start, then one per edge

  double length() const;
  /// The same curve under a linear map.
  RidgeCurve transformed(const Eigen::Matrix3d& M) const;
};

/// Images of the bend midpoints, bottom to top (n + 1 points).
std::vector<Vec3> core_curve(const EmbeddedBand& e);

/// Throws ToleranceExceeded when the band does not close up within
/// `tol.closure`.
RidgeCurve ridge_curve(const EmbeddedBand& e, const BandTolerances& tol = {});

/// Rotation that puts the ridge curve's start on the positive X axis and the
/// first point where it crosses the plane X = 0 on the positive Y axis.
Eigen::Matrix3d ridge_frame(const RidgeCurve& r);

/// The band moved so that the bottom bend runs from (0,0,0) along +X and the
/// ridge curve is in the frame of ridge_frame.
EmbeddedBand normalize_band(const EmbeddedBand& e);

struct RidgeReport {
  double lambda = 0;
  double length = 0;
  double length_error = 0;
  double endpoint_error = 0;       // |end + start|
  double min_vertex_norm = 0;      // clearance from the open unit ball
  double max_tangency_error = 0;   // | distance(edge line, origin) - 1 |
  double projection_length = 0;    // length of the radial projection to S^2
  double max_abs_z = 0;            // after ridge_frame
  double max_elevation = 0;        // largest angle of a vertex with the XY plane
  bool length_ok = false;
  bool endpoint_ok = false;
  bool clearance_ok = false;
  bool tangency_ok = false;
  bool projection_ok = false;      // projection_length >= pi
  bool half_pi_bound = false;      // lambda > pi/2 follows
  bool slab_applies = false;       // lambda < 7 pi / 12
  bool slab_ok = true;             // |Z| < 1/sqrt2 everywhere, checked when it applies
  bool angle_ok = true;            // every bend direction within pi/4 of the XY plane

  bool all_ok() const;
  CertReport to_cert(const std::string& id = "ridge") const;
};

/// Checks the ridge curve invariants. `tolerance` bounds the length, endpoint
/// and tangency errors (default 1e-9).
RidgeReport ridge_invariant_report(const RidgeCurve& r, double lambda, double tolerance = 1e-9);

}  // namespace moebius

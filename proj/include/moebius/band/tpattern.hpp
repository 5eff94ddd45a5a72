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

#include <optional>
#include <string>

#include "moebius/band/locus.hpp"
#include "moebius/certs/report.hpp"
#include "moebius/certs/statements.hpp"

namespace moebius {

/// Two disjoint, perpendicular, coplanar bend images. `bottom` is the bend
/// the band is cut along; the line extending `top` misses it.
struct TPattern {
  BendRef bottom;
  BendRef top;
  double intercept_gap = 0;  // |difference of the Z-intercepts| at the solution
  double cosine = 0;         // |cos| of the angle between the two bend images
  double separation = 0;     // distance between the two segments
  bool degenerate = false;   // the segments touch at an endpoint
};

struct TPatternSearch {
  std::optional<TPattern> pattern;
  std::string reason;                 // why nothing was found
  bool precondition_warning = false;  // lambda >= 7 pi / 12
  int candidates = 0;                 // coplanar pairs examined

  bool found() const { return pattern.has_value(); }
};

/// Looks for a T-pattern. Exactly perpendicular coplanar pairs of special
/// bends are tried first. Otherwise the band is normalized, the locus is built
/// and each iota-invariant essential component is walked from a node to its
/// swap while tracking the difference of the Z-intercepts of the two parallel
/// planes through the pair; the difference changes sign along the walk and
/// is bisected to `tol.bisection`. Sign changes whose pair fails the
/// disjointness test are skipped. A band that does not close, is not generic
/// or has no usable sign change gives a result without a pattern and a
/// reason.
TPatternSearch find_t_pattern(const EmbeddedBand& e, const BandTolerances& tol = {}, int samples_per_arc = 16);

/// Signed sums of ridge curve pieces between the two bends of a T-pattern,
/// split by the sign of the triangle, in the T-pattern frame.
struct RidgeSplit {
  Vec3 L_str = Vec3::Zero();
  Vec3 R_str = Vec3::Zero();
  Vec3 p = Vec3::Zero();
  Vec3 theta = Vec3::Zero();  // (B/2 + x, y, 0)

  double sum_error(double B, double T) const;  // |R_str + L_str - (-B, T, 0)|
  double difference_error() const;             // |R_str - L_str - 2 theta|
};

struct TPatternReport {
  TPatternMeasurements m;
  RidgeSplit split;
  double lambda = 0;
  bool reflected = false;     // L and R swapped to get L1 >= R1
  bool used_deck = false;     // the top bend was taken one period up
  bool l1_ge_r1 = false;
  bool l2_ge_r2 = false;
  double z_extent = 0;        // largest |Z| of the four endpoints in the frame
  double lambda_error = 0;    // |lambda - (S1 + S2)/2|
  bool constraint1 = false;   // R1 + R2 >= T
  bool constraint2 = false;   // L1 + L2 >= 2 sqrt(B^2 + T^2/4)
  bool const3[2] = {false, false};        // within the tolerance
  bool const3_exact[2] = {false, false};  // on the binary values
  bool fine_applies = false;  // lambda <= sqrt3, where the S_j bounds are claimed
  bool s_bound_ok[2] = {false, false};
  bool split_norms_ok = false;  // |L_str| <= L1 and |R_str| <= R1
  bool in_omega = false;

  /// Everything that is claimed for this band holds.
  bool all_ok() const;
  CertReport to_cert(const std::string& id = "t-pattern") const;
};

/// Measures a T-pattern. Throws InvalidPattern when the two segments cross
/// or coincide.
TPatternReport measure_t_pattern(const EmbeddedBand& e, const TPattern& tp, double tolerance = 1e-9);

struct ZeroSlopeCount {
  int count = 0;         // bends of slope 0 over one period
  bool applies = false;  // (b, t) lies in Omega
  bool at_least_two = false;
};

/// Counts the bends perpendicular to the boundary, one full turn around the
/// core starting at the bottom bend of the pattern.
ZeroSlopeCount zero_slope_bends(const EmbeddedBand& e, const TPattern& tp, const TPatternReport& report);

}  // namespace moebius

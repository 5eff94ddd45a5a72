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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moebius/band/embedded_band.hpp"

namespace moebius {

/// Where the locus crosses the grid of special bends on the torus of bend
/// pairs. A vertical node has its first bend special (bend `special`) and its
/// second bend inside facet `facet` at parameter `param`; a horizontal node
/// is the same with the roles swapped. The involution (s1, s2) -> (s2, s1)
/// exchanges the two kinds.
struct LocusNode {
  bool vertical = true;
  int special = 0;
  int facet = 0;
  double param = 0;

  /// The two bends, in order.
  BendRef first() const { return vertical ? BendRef{special, 0.0} : BendRef{facet, param}; }
  BendRef second() const { return vertical ? BendRef{facet, param} : BendRef{special, 0.0}; }
};

/// The piece of the locus inside the cell facet_i x facet_j: a single branch
/// of the hyperbola (P_i + u D_i) . (P_j + v D_j) = 0 between two nodes.
struct LocusArc {
  int facet1 = 0;
  int facet2 = 0;
  int node_a = 0;
  int node_b = 0;
};

struct LocusComponent {
  std::vector<int> nodes;  // cyclic order
  std::vector<int> arcs;   // arcs[k] joins nodes[k] and nodes[k + 1]
  int winding = 0;         // signed number of turns in the first coordinate
  bool essential = false;
  bool iota_invariant = false;
};

/// Perpendicular pairs of bend images, as a 1-manifold in the annulus of
/// ordered pairs of distinct bends.
struct PerpLocus {
  int facets = 0;
  std::vector<Vec3> bend_vectors;  // special bends 0..n, with bend n = -bend 0
  std::vector<LocusNode> nodes;
  std::vector<LocusArc> arcs;
  std::vector<LocusComponent> components;
  std::vector<int> iota;           // node index of the swapped pair
  int transverse_crossings = 0;    // crossings of the line s1 = bend 0

  int essential_count() const;
  bool has_iota_invariant_essential() const;
  /// (u, v) coordinates of a point on arc `arc` at t in [0, 1], running from
  /// node_a to node_b.
  std::pair<BendRef, BendRef> arc_point(int arc, double t) const;
};

/// Genericity: no two facet planes perpendicular and no two special bend
/// images perpendicular, both up to the relative tolerance `tol`. Returns a
/// description of the first violation.
std::optional<std::string> genericity_violation(const EmbeddedBand& e, double tol = 1e-9);

/// Builds the locus. Throws GenericityViolation (naming the offending pair)
/// on non-generic input and ToleranceExceeded when the band does not close.
/// Arcs of different cells are computed in parallel.
PerpLocus perp_pair_locus(const EmbeddedBand& e, const BandTolerances& tol = {});

/// Postcomposes the band with I + E, E random with operator norm at most
/// magnitude / (1 + magnitude), so that K <= 1 + magnitude. Redraws E until
/// the result is generic. Throws std::invalid_argument for magnitude <= 0 and
/// RetriesExhausted after `retries` failed draws.
EmbeddedBand perturb_to_generic(const EmbeddedBand& e, double magnitude, std::uint64_t seed = 1,
                                int retries = 32);

}  // namespace moebius

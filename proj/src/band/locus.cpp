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

#include "moebius/band/locus.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include <Eigen/SVD>

#include "moebius/errors.hpp"

namespace moebius {

namespace {

struct CellCoefficients {
  double a, b, c, d;  // F(u, v) = a + b u + c v + d u v
};

CellCoefficients coefficients(const std::vector<Vec3>& V, int i, int j) {
  Vec3 Pi = V[i], Di = V[i + 1] - V[i];
  Vec3 Pj = V[j], Dj = V[j + 1] - V[j];
  return {Pi.dot(Pj), Di.dot(Pj), Pi.dot(Dj), Di.dot(Dj)};
}

// Root in (0, 1) of v -> V[k] . (V[j] + v (V[j+1] - V[j])), if the endpoint
// values have strictly opposite signs.
std::optional<double> edge_root(const std::vector<Vec3>& V, int k, int j) {
  double g0 = V[k].dot(V[j]), g1 = V[k].dot(V[j + 1]);
  if ((g0 > 0 && g1 < 0) || (g0 < 0 && g1 > 0)) return g0 / (g0 - g1);
  return std::nullopt;
}

Vec2 node_uv(const LocusNode& node, int n, int i, int j) {
  if (node.vertical) return {node.special == i ? 0.0 : 1.0, node.param};
  (void)n;
  return {node.param, node.special == j ? 0.0 : 1.0};
}

}  // namespace

std::optional<std::string> genericity_violation(const EmbeddedBand& e, double tol) {
  const int n = e.facet_count();
  std::vector<Vec3> V;
  for (int k = 0; k < n; ++k) V.push_back(e.bend_vector(k));
  V.push_back(-V[0]);
  std::vector<Vec3> normals;
  for (int i = 0; i < n; ++i) {
    Vec3 m = V[i].cross(V[i + 1]);
    if (m.norm() <= tol * V[i].norm() * V[i + 1].norm()) return "facet " + std::to_string(i) + " is degenerate";
    normals.push_back(m.normalized());
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(normals[i].dot(normals[j])) <= tol)
        return "facets " + std::to_string(i) + " and " + std::to_string(j) + " lie in perpendicular planes";
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      if (std::abs(V[k].dot(V[l])) <= tol * V[k].norm() * V[l].norm())
        return "special bends " + std::to_string(k) + " and " + std::to_string(l) + " are perpendicular";
  return std::nullopt;
}

int PerpLocus::essential_count() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(),
                                        [](const LocusComponent& c) { return c.essential; }));
}

bool PerpLocus::has_iota_invariant_essential() const {
  return std::any_of(components.begin(), components.end(),
                     [](const LocusComponent& c) { return c.essential && c.iota_invariant; });
}

std::pair<BendRef, BendRef> PerpLocus::arc_point(int arc, double t) const {
  const LocusArc& A = arcs[arc];
  const int i = A.facet1, j = A.facet2;
  Vec2 pa = node_uv(nodes[A.node_a], facets, i, j);
  Vec2 pb = node_uv(nodes[A.node_b], facets, i, j);
  CellCoefficients k = coefficients(bend_vectors, i, j);
  double u, v;
  if (std::abs(pb.x() - pa.x()) >= std::abs(pb.y() - pa.y())) {
    u = pa.x() + t * (pb.x() - pa.x());
    v = -(k.a + k.b * u) / (k.c + k.d * u);
  } else {
    v = pa.y() + t * (pb.y() - pa.y());
    u = -(k.a + k.c * v) / (k.b + k.d * v);
  }
  if (t == 0) u = pa.x(), v = pa.y();
  if (t == 1) u = pb.x(), v = pb.y();
  return {BendRef{i, std::clamp(u, 0.0, 1.0)}, BendRef{j, std::clamp(v, 0.0, 1.0)}};
}

PerpLocus perp_pair_locus(const EmbeddedBand& e, const BandTolerances& tol) {
  const int n = e.facet_count();
  if (n < 2) throw GeometryError("the locus needs at least two facets");
  if (e.closure_residual() > tol.closure)
    throw ToleranceExceeded("band does not close: seam residual " + std::to_string(e.closure_residual()));
  if (auto why = genericity_violation(e, tol.gluing)) throw GenericityViolation(*why);

  PerpLocus L;
  L.facets = n;
  for (int k = 0; k < n; ++k) L.bend_vectors.push_back(e.bend_vector(k));
  L.bend_vectors.push_back(-L.bend_vectors[0]);
  const auto& V = L.bend_vectors;

  // Nodes on the grid lines. vert[k * n + j] and horiz[k * n + j] hold the
  // node with special bend k and the other bend in facet j.
  std::vector<int> vert(n * n, -1), horiz(n * n, -1);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      if (auto r = edge_root(V, k, j)) {
        vert[k * n + j] = static_cast<int>(L.nodes.size());
        L.nodes.push_back({true, k, j, *r});
        horiz[k * n + j] = static_cast<int>(L.nodes.size());
        L.nodes.push_back({false, k, j, *r});
      }
  L.iota.resize(L.nodes.size());
  for (int idx = 0; idx < n * n; ++idx)
    if (vert[idx] >= 0) {
      L.iota[vert[idx]] = horiz[idx];
      L.iota[horiz[idx]] = vert[idx];
    }
  for (int j = 0; j < n; ++j)
    if (vert[j] >= 0) ++L.transverse_crossings;

  // Pair the nodes on each cell's boundary by hyperbola branch.
  std::vector<std::vector<LocusArc>> per_row(n);
  std::vector<std::string> failures(n);
  auto do_row = [&](int i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> ids;
      for (int id : {vert[i * n + j], vert[((i + 1) % n) * n + j], horiz[j * n + i], horiz[((j + 1) % n) * n + i]})
        if (id >= 0) ids.push_back(id);
      if (ids.empty()) continue;
      if (ids.size() == 2) {
        per_row[i].push_back({i, j, ids[0], ids[1]});
        continue;
      }
      CellCoefficients k = coefficients(V, i, j);
      std::vector<int> plus, minus;
      for (int id : ids) {
        double w = k.c + k.d * node_uv(L.nodes[id], n, i, j).x();
        (w > 0 ? plus : minus).push_back(id);
      }
      if (ids.size() != 4 || plus.size() != 2 || minus.size() != 2) {
        failures[i] = "cell (" + std::to_string(i) + ", " + std::to_string(j) + ") has a degenerate saddle";
        return;
      }
      per_row[i].push_back({i, j, plus[0], plus[1]});
      per_row[i].push_back({i, j, minus[0], minus[1]});
    }
  };
  {
    const int workers = std::max(1, std::min<int>(n, static_cast<int>(std::thread::hardware_concurrency())));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int i = w; i < n; i += workers) do_row(i);
      });
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures)
    if (!f.empty()) throw GenericityViolation(f);
  for (const auto& row : per_row) L.arcs.insert(L.arcs.end(), row.begin(), row.end());

  // Each node lies on exactly two arcs.
  std::vector<std::vector<int>> incident(L.nodes.size());
  for (int a = 0; a < static_cast<int>(L.arcs.size()); ++a) {
    incident[L.arcs[a].node_a].push_back(a);
    incident[L.arcs[a].node_b].push_back(a);
  }
  for (std::size_t id = 0; id < incident.size(); ++id)
    if (incident[id].size() != 2) throw GenericityViolation("locus node " + std::to_string(id) + " is not on two arcs");

  std::vector<int> component_of(L.nodes.size(), -1);
  for (int start = 0; start < static_cast<int>(L.nodes.size()); ++start) {
    if (component_of[start] >= 0) continue;
    LocusComponent comp;
    const int cid = static_cast<int>(L.components.size());
    int node = start, arc = incident[start][0];
    do {
      component_of[node] = cid;
      comp.nodes.push_back(node);
      comp.arcs.push_back(arc);
      const LocusArc& A = L.arcs[arc];
      int next = A.node_a == node ? A.node_b : A.node_a;
      int next_arc = incident[next][0] == arc ? incident[next][1] : incident[next][0];
      const LocusNode& N = L.nodes[next];
      if (N.vertical && N.special == 0) {
        int from = A.facet1, to = L.arcs[next_arc].facet1;
        if (from == n - 1 && to == 0) ++comp.winding;
        if (from == 0 && to == n - 1) --comp.winding;
      }
      node = next;
      arc = next_arc;
    } while (node != start);
    comp.essential = comp.winding != 0;
    L.components.push_back(std::move(comp));
  }
  for (int id = 0; id < static_cast<int>(L.nodes.size()); ++id)
    if (component_of[id] == component_of[L.iota[id]]) L.components[component_of[id]].iota_invariant = true;
  return L;
}

EmbeddedBand perturb_to_generic(const EmbeddedBand& e, double magnitude, std::uint64_t seed, int retries) {
  if (!(magnitude > 0)) throw std::invalid_argument("perturbation magnitude must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double bound = magnitude / (1 + magnitude);
  for (int attempt = 0; attempt < retries; ++attempt) {
    Eigen::Matrix3d E;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) E(r, c) = unit(rng);
    double norm = Eigen::JacobiSVD<Eigen::Matrix3d>(E).singularValues()(0);
    if (norm == 0) continue;
    E *= bound / norm;
    EmbeddedBand out = e.transformed(Eigen::Matrix3d::Identity() + E, Vec3::Zero());
    if (!genericity_violation(out)) return out;
  }
  throw RetriesExhausted("no generic perturbation found after " + std::to_string(retries) + " draws");
}

}  // namespace moebius

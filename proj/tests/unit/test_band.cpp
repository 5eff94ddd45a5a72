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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "moebius/band/approx.hpp"
#include "moebius/band/embedded_band.hpp"
#include "moebius/band/export.hpp"
#include "moebius/band/generate.hpp"
#include "moebius/band/locus.hpp"
#include "moebius/band/ridge.hpp"
#include "moebius/band/tpattern.hpp"
#include "moebius/errors.hpp"

using namespace moebius;
using std::numbers::pi;

namespace {

const double s3 = std::sqrt(3.0);

BandSpec triangle_spec() { return parse_band_spec(std::string(MOEBIUS_TEST_DATA) + "/triangle.json"); }

EmbeddedBand triangle_band() {
  BandSpec spec = triangle_spec();
  return fold(spec.flat, spec.dihedrals);
}

}  // namespace

TEST_CASE("triangle spec parses with the expected sign sequence") {
  BandSpec spec = triangle_spec();
  CHECK(spec.flat.lambda() == doctest::Approx(s3));
  CHECK(spec.flat.signs() == std::vector<int>{+1, -1, +1, -1});
  CHECK(spec.flat.triangle_count() == 4);
  CHECK(spec.dihedrals.size() == 3);
  CHECK(spec.flat.bend_slope(0) == 0.0);
  CHECK(spec.flat.bend_slope(2) == doctest::Approx(-1 / s3));
}

TEST_CASE("band spec errors") {
  CHECK_THROWS_AS(parse_band_spec_text(R"({"lambda": 1, "left_ridge": [0], "right_ridge": []})"), SchemaError);
  CHECK_THROWS_AS(parse_band_spec_text(R"({"lambda": 1, "left_ridge": [0], "right_ridge": [0]})"), SchemaError);
  CHECK_THROWS_AS(parse_band_spec_text("not json"), SchemaError);
  // A vertex strictly inside the strip.
  CHECK_THROWS_AS(parse_band_spec_text(R"({"lambda": "derive", "left_ridge": [[0, 0], [0.5, 0.9], [0, 1.5]],
                                            "right_ridge": [0, 0.5, 1.5], "diagonals": [[0, 1], [1, 1]]})"),
                  GeometryError);
  // Top bend that is not glued to the bottom one.
  CHECK_THROWS_AS(parse_band_spec_text(R"({"lambda": 2, "left_ridge": [0, 1.5], "right_ridge": [0, 1.5]})"),
                  GeometryError);
  // Bends that skip a vertex.
  CHECK_THROWS_AS(parse_band_spec_text(R"({"lambda": "derive", "left_ridge": [0, 1, 1.5], "right_ridge": [0, 0.5, 1.5],
                                            "diagonals": [[1, 1]]})"),
                  GeometryError);
  CHECK_THROWS_AS(parse_band_spec("/nonexistent/band.json"), SchemaError);
}

TEST_CASE("flat-folded triangle closes and stays planar") {
  EmbeddedBand e = triangle_band();
  CHECK(e.closure_residual() < 1e-12);
  CHECK(e.isometry_residual() < 1e-12);
  CHECK(e.max_distortion() == doctest::Approx(1.0));
  for (const auto& v : e.left_images()) CHECK(std::abs(v.z()) < 1e-12);
  for (const auto& v : e.right_images()) CHECK(std::abs(v.z()) < 1e-12);
  // The image is the equilateral triangle with vertices (0,0) and (1, +-1/sqrt3).
  for (const auto& v : e.left_images()) {
    bool corner = v.norm() < 1e-12 || (v - Vec3(1, 1 / s3, 0)).norm() < 1e-12 || (v - Vec3(1, -1 / s3, 0)).norm() < 1e-12;
    bool midpoint = (v - Vec3(1, 0, 0)).norm() < 1e-12;
    CHECK((corner || midpoint));
  }
}

TEST_CASE("fold: unfolding a fold restores the flat strip") {
  FlatBand strip(1.5, {0, 0.8, 1.5}, {0, 0.7, 1.5}, {{0, 1}, {1, 1}, {1, 2}});
  EmbeddedBand flat_image = fold(strip, {0, 0, 0});
  EmbeddedBand folded = fold(strip, {0.7, -1.1, 2.0});
  // Rotate the last three vertices back by the opposite angles, last bend first.
  std::vector<Vec3> left = folded.left_images(), right = folded.right_images();
  const std::vector<double> angles{0.7, -1.1, 2.0};
  for (int k = 3; k >= 1; --k) {
    const auto& bend = strip.bends()[k];
    Vec3 a = left[bend.first], b = right[bend.second];
    Eigen::AngleAxisd undo(-angles[k - 1], (b - a).normalized());
    for (int t = k; t < strip.triangle_count(); ++t) {
      auto id = strip.triangle_ids(t)[2];
      Vec3& v = id.side == 'L' ? left[id.index] : right[id.index];
      v = a + undo * (v - a);
    }
  }
  for (std::size_t i = 0; i < left.size(); ++i) CHECK((left[i] - flat_image.left_images()[i]).norm() < 1e-12);
  for (std::size_t j = 0; j < right.size(); ++j) CHECK((right[j] - flat_image.right_images()[j]).norm() < 1e-12);
  CHECK(folded.isometry_residual() < 1e-12);
  CHECK(folded.closure_residual() > 1e-3);
  CHECK_THROWS_AS(fold(strip, {0.1}), std::invalid_argument);
}

TEST_CASE("ridge curve of the triangle") {
  EmbeddedBand e = triangle_band();
  RidgeCurve r = ridge_curve(e);
  CHECK(r.length() == doctest::Approx(2 * s3).epsilon(1e-12));
  CHECK((r.start - Vec3(1, 0, 0)).norm() < 1e-12);
  CHECK((r.vertices.back() - Vec3(-1, 0, 0)).norm() < 1e-12);
  for (std::size_t k = 0; k < r.vertices.size(); ++k) {
    const auto& bend = e.flat().bends()[k];
    Vec3 v = e.right_images()[bend.second] - e.left_images()[bend.first];
    CHECK((r.vertices[k] - v).norm() < 1e-12);
  }
  RidgeReport rep = ridge_invariant_report(r, e.flat().lambda());
  CHECK(rep.all_ok());
  CHECK(rep.projection_length >= pi - 1e-12);
  CHECK(rep.half_pi_bound);
  CHECK(rep.slab_applies);
  CHECK(rep.to_cert().verified());
}

TEST_CASE("ridge report flags a synthetic curve inside the unit ball") {
  RidgeCurve r;
  r.start = Vec3(1, 0, 0);
  r.vertices = {r.start, Vec3(0, 0.5, 0), Vec3(-1, 0, 0)};
  r.edges = {r.vertices[1] - r.vertices[0], r.vertices[2] - r.vertices[1]};
  RidgeReport rep = ridge_invariant_report(r, r.length() / 2);
  CHECK_FALSE(rep.clearance_ok);
  CHECK_FALSE(rep.tangency_ok);
  CHECK_FALSE(rep.all_ok());
}

TEST_CASE("ridge curve refuses a band that does not close") {
  FlatBand strip(1.5, {0, 0.8, 1.5}, {0, 0.7, 1.5}, {{0, 1}, {1, 1}, {1, 2}});
  CHECK_THROWS_AS(ridge_curve(fold(strip, {0.7, -1.1, 2.0})), ToleranceExceeded);
}

TEST_CASE("locus: the flat-folded triangle is not generic") {
  EmbeddedBand e = triangle_band();
  auto why = genericity_violation(e);
  REQUIRE(why.has_value());
  CHECK(why->find("special bends 0 and 2") != std::string::npos);
  CHECK_THROWS_AS(perp_pair_locus(e), GenericityViolation);
}

TEST_CASE("locus: perpendicular facet planes are reported") {
  FlatBand strip(1.5, {0, 0.8, 1.5}, {0, 0.7, 1.5}, {{0, 1}, {1, 1}, {1, 2}});
  auto why = genericity_violation(fold(strip, {pi / 2, 0.3, 0.4}));
  REQUIRE(why.has_value());
  CHECK(why->find("perpendicular planes") != std::string::npos);
}

TEST_CASE("locus: perturbed triangle") {
  EmbeddedBand g = perturb_to_generic(triangle_band(), 1e-6, 7);
  CHECK(g.max_distortion() <= 1 + 1e-6);
  CHECK_FALSE(genericity_violation(g).has_value());
  PerpLocus L = perp_pair_locus(g);
  CHECK(L.transverse_crossings % 2 == 1);
  CHECK(L.essential_count() % 2 == 1);
  CHECK(L.has_iota_invariant_essential());
  for (const auto& c : L.components) CHECK(c.nodes.size() == c.arcs.size());
  // Every sampled point on every arc is a perpendicular pair.
  for (int a = 0; a < static_cast<int>(L.arcs.size()); ++a)
    for (double t : {0.0, 0.3, 0.7, 1.0}) {
      auto [p, q] = L.arc_point(a, t);
      const auto& V = L.bend_vectors;
      Vec3 x = V[p.facet] + p.u * (V[p.facet + 1] - V[p.facet]);
      Vec3 y = V[q.facet] + q.u * (V[q.facet + 1] - V[q.facet]);
      CHECK(std::abs(x.dot(y)) < 1e-9);
    }
  // Same seed, same result.
  EmbeddedBand h = perturb_to_generic(triangle_band(), 1e-6, 7);
  CHECK((h.left_images()[1] - g.left_images()[1]).norm() == 0.0);
  CHECK_THROWS_AS(perturb_to_generic(triangle_band(), 0.0), std::invalid_argument);
}

TEST_CASE("t-pattern: found on the flat-folded triangle") {
  EmbeddedBand e = triangle_band();
  TPatternSearch s = find_t_pattern(e);
  REQUIRE(s.found());
  CHECK_FALSE(s.precondition_warning);
  const TPattern& tp = *s.pattern;
  CHECK(tp.intercept_gap < 1e-15);
  CHECK(tp.degenerate);
  CHECK(tp.cosine < 1e-12);
  CHECK(tp.bottom.facet + tp.bottom.u == 0.0);
  CHECK(tp.top.facet + tp.top.u == 2.0);
}

TEST_CASE("t-pattern: measurements on the triangle") {
  EmbeddedBand e = triangle_band();
  TPatternReport r = measure_t_pattern(e, *find_t_pattern(e).pattern);
  const auto& m = r.m;
  CHECK(m.B == doctest::Approx(1.0));
  CHECK(m.T == doctest::Approx(2 / s3));
  CHECK(m.b == doctest::Approx(0.0));
  CHECK(m.t == doctest::Approx(-1 / s3));
  CHECK(m.L1 == doctest::Approx(2 / s3));
  CHECK(m.L2 == doctest::Approx(2 / s3));
  CHECK(m.R1 == doctest::Approx(1 / s3));
  CHECK(m.R2 == doctest::Approx(1 / s3));
  CHECK(m.S1() == doctest::Approx(s3));
  CHECK(m.S2() == doctest::Approx(s3));
  CHECK(std::abs(m.x) < 1e-12);
  CHECK(std::abs(m.y) < 1e-12);
  CHECK(r.lambda_error < 1e-12);
  CHECK(r.l1_ge_r1);
  CHECK_FALSE(r.reflected);
  CHECK(r.fine_applies);
  CHECK(r.all_ok());
  CHECK(r.split.sum_error(m.B, m.T) < 1e-12);
  CHECK(r.split.difference_error() < 1e-12);
  CHECK(r.split.L_str.norm() == doctest::Approx(m.L1));
  CHECK(r.split.R_str.norm() == doctest::Approx(m.R1));
  CHECK(r.to_cert().verified());
  // (0, -1/sqrt3) is a corner of Omega, not an interior point.
  CHECK_FALSE(r.in_omega);
  ZeroSlopeCount z = zero_slope_bends(e, *find_t_pattern(e).pattern, r);
  CHECK(z.count % 2 == 1);
  CHECK_FALSE(z.applies);
}

TEST_CASE("t-pattern: the two labelings of the triangle pattern agree") {
  EmbeddedBand e = triangle_band();
  TPattern tp = *find_t_pattern(e).pattern;
  std::swap(tp.bottom, tp.top);
  // Cutting along the other bend uses the deck image of the first one.
  TPatternReport r = measure_t_pattern(e, tp);
  CHECK(r.used_deck);
  CHECK(r.lambda_error < 1e-12);
  CHECK(r.constraint1);
}

TEST_CASE("t-pattern: negative controls") {
  FlatBand strip(1.5, {0, 0.8, 1.5}, {0, 0.7, 1.5}, {{0, 1}, {1, 1}, {1, 2}});
  TPatternSearch s = find_t_pattern(fold(strip, {0.7, -1.1, 2.0}));
  CHECK_FALSE(s.found());
  CHECK(s.reason.find("does not close") != std::string::npos);
  FlatBand tall(2.0, {0, 0.8, 2.0}, {0, 0.7, 2.0}, {{0, 1}, {1, 1}, {1, 2}});
  CHECK(find_t_pattern(fold(tall, {0.3, 0.3, 0.3})).precondition_warning);
  EmbeddedBand e = triangle_band();
  CHECK_THROWS_AS(measure_t_pattern(e, TPattern{{0, 0.0}, {0, 0.0}}), InvalidPattern);
  // The middle bend of facet 1 crosses the bottom bend at x = 2/3.
  CHECK_THROWS_AS(measure_t_pattern(e, TPattern{{0, 0.0}, {1, 0.5}}), InvalidPattern);
}

TEST_CASE("approx: the flat strip is reproduced with K = 1") {
  ConePatch flat;
  flat.sin_alpha = 1;
  ApproxResult r = approximate_smooth(flat.samples(8), flat);
  CHECK(r.K == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.max_proximity_error < 1e-12);
  CHECK(r.flat.size() == 16);
}

TEST_CASE("approx: cone patch distortion decreases with the mesh size") {
  ConePatch cone;
  double previous = std::numeric_limits<double>::infinity();
  double previous_gap = previous;
  for (int n : {8, 16, 32}) {
    ApproxResult r = approximate_smooth(cone.samples(n), cone);
    CHECK(r.K > 1);
    CHECK(r.K < previous);
    // Both shrink like 1/n^2; the distance stays a bounded multiple of K - 1.
    CHECK(r.max_proximity_error < previous_gap / 3.5);
    CHECK(r.max_proximity_error < 4 * (r.K - 1));
    previous = r.K;
    previous_gap = r.max_proximity_error;
  }
  CHECK(previous < 1.01);
}

TEST_CASE("approx: crossing bends are rejected") {
  ConePatch cone;
  auto bends = cone.samples(4);
  std::swap(bends[1], bends[2]);
  CHECK_THROWS_AS(approximate_smooth(bends), DegenerateMesh);
  CHECK_THROWS_AS(approximate_smooth({bends[0]}), DegenerateMesh);
  // Two bends sharing their left end make a single triangle.
  std::vector<MeshBend> fan{{0, 0, Vec3(0, 0, 0), Vec3(1, 0, 0)}, {0, 1, Vec3(0, 0, 0), Vec3(1, 1, 0)}};
  CHECK(approximate_smooth(fan).flat.size() == 1);
}

TEST_CASE("generate: unfold_angles inverts fold") {
  FlatBand strip(1.5, {0, 0.8, 1.5}, {0, 0.7, 1.5}, {{0, 1}, {1, 1}, {1, 2}});
  std::vector<double> angles{0.7, -1.1, 2.0};
  std::vector<double> back = unfold_angles(fold(strip, angles));
  REQUIRE(back.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(back[k] == doctest::Approx(angles[k]).epsilon(1e-12));
}

TEST_CASE("generate: refining the triangle keeps its image") {
  BandSpec spec = triangle_spec();
  FlatBand fine = refine_band(spec.flat);
  CHECK(fine.triangle_count() == 8);
  CHECK(fine.lambda() == doctest::Approx(s3));
  EmbeddedBand coarse = fold(spec.flat, spec.dihedrals);
  EmbeddedBand refined = fold(fine, refine_dihedrals(spec.dihedrals));
  for (std::size_t k = 0; k < coarse.left_images().size(); ++k)
    CHECK((refined.left_images()[2 * k] - coarse.left_images()[k]).norm() < 1e-12);
  CHECK(refined.closure_residual() < 1e-12);
  CHECK_THROWS_AS(close_band(spec.flat, spec.dihedrals), std::invalid_argument);
}

TEST_CASE("generate: random closed bands") {
  for (std::uint64_t seed : {1, 2, 3}) {
    RandomBand rb = random_closed_band(seed);
    CHECK(rb.band.closure_residual() < 1e-11);
    CHECK(rb.band.isometry_residual() < 1e-12);
    CHECK(rb.flat.lambda() < 7 * pi / 12);
    CHECK_FALSE(genericity_violation(rb.band).has_value());
    RandomBand again = random_closed_band(seed);
    CHECK(again.dihedrals == rb.dihedrals);
  }
  RandomBandOptions impossible;
  impossible.retries = 2;
  impossible.lambda_min = impossible.lambda_max = 1.0;
  CHECK_THROWS_AS(random_closed_band(1, impossible), RetriesExhausted);
}

TEST_CASE("generate: search outcome does not depend on the thread count") {
  SearchOutcome one = search_bands(12, 40, {}, 1);
  SearchOutcome four = search_bands(12, 40, {}, 4);
  CHECK(one.closed == four.closed);
  CHECK(one.patterns == four.patterns);
  CHECK(one.best.has_value() == four.best.has_value());
  if (one.best) CHECK(one.best->flat.lambda() == four.best->flat.lambda());
}

TEST_CASE("export: OBJ and curve files") {
  EmbeddedBand e = triangle_band();
  std::ostringstream obj;
  write_obj(e, obj);
  std::string text = obj.str();
  CHECK(text.find("\nf 1 4 5\n") != std::string::npos);  // triangle 0: L0, R0, R1
  std::ostringstream csv, svg;
  write_curve_csv(ridge_curve(e).vertices, csv);
  CHECK(csv.str().rfind("x,y,z\n", 0) == 0);
  std::string rows = csv.str();
  CHECK(std::count(rows.begin(), rows.end(), '\n') == 6);
  write_curve_svg(ridge_curve(e).vertices, svg);
  CHECK(svg.str().find("<polyline") != std::string::npos);
}

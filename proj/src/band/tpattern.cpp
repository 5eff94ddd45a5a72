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

#include "moebius/band/tpattern.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moebius/band/ridge.hpp"
#include "moebius/errors.hpp"
#include "moebius/exactnum/rational.hpp"
#include "moebius/region/region.hpp"

namespace moebius {

namespace {

using std::numbers::pi;

struct SegmentRelation {
  double s = 0, r = 0;  // line parameters of the closest points
  double separation = 0;
  double cosine = 0;
};

// Closest points of two segments a0 + s (a1 - a0) and b0 + r (b1 - b0), and the
// parameters where their lines come closest.
SegmentRelation relate(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1) {
  Vec3 d1 = a1 - a0, d2 = b1 - b0, w = a0 - b0;
  double a = d1.dot(d1), b = d1.dot(d2), c = d2.dot(d2), d = d1.dot(w), e = d2.dot(w);
  double den = a * c - b * b;
  SegmentRelation rel;
  rel.cosine = std::abs(b) / std::sqrt(a * c);
  rel.s = (b * e - c * d) / den;
  rel.r = (a * e - b * d) / den;

  double s = std::clamp(rel.s, 0.0, 1.0);
  double r = std::clamp((b * s + e) / c, 0.0, 1.0);
  s = std::clamp((b * r - d) / a, 0.0, 1.0);
  r = std::clamp((b * s + e) / c, 0.0, 1.0);
  rel.separation = ((a0 + s * d1) - (b0 + r * d2)).norm();
  return rel;
}

// Signed difference of the Z-intercepts of the two parallel planes through
// the bend images, both spanned by the two bend directions.
std::optional<double> intercept_gap(const EmbeddedBand& e, const BendRef& p, const BendRef& q) {
  auto [a0, a1] = e.bend_image(p);
  auto [b0, b1] = e.bend_image(q);
  Vec3 N = (a1 - a0).cross(b1 - b0);
  if (N.norm() == 0) return std::nullopt;
  N.normalize();
  if (std::abs(N.z()) < 1e-12) return std::nullopt;
  return N.dot(a0 - b0) / N.z();
}

// Checks disjointness and picks the labeling. Touching at an endpoint is
// allowed and marked degenerate.
std::optional<TPattern> classify(const EmbeddedBand& e, const BendRef& p, const BendRef& q, double gap,
                                 double tol) {
  auto [a0, a1] = e.bend_image(p);
  auto [b0, b1] = e.bend_image(q);
  SegmentRelation rel = relate(a0, a1, b0, b1);
  auto interior = [&](double s) { return s > tol && s < 1 - tol; };
  if (rel.separation <= tol && interior(rel.s) && interior(rel.r)) return std::nullopt;
  TPattern tp;
  tp.intercept_gap = std::abs(gap);
  tp.cosine = rel.cosine;
  tp.separation = rel.separation;
  tp.degenerate = rel.separation <= tol;
  // The bottom bend is one the other line misses. When both lines miss, take
  // the bottom bend whose line meets the other segment, if there is one.
  auto on = [&](double s) { return s >= -tol && s <= 1 + tol; };
  bool p_bottom = !interior(rel.s);
  if (p_bottom && !interior(rel.r) && !on(rel.r) && on(rel.s)) p_bottom = false;
  tp.bottom = p_bottom ? p : q;
  tp.top = p_bottom ? q : p;
  return tp;
}

double generalized_slope(const FlatBand& flat, int g) {
  const int n = flat.triangle_count();
  return g <= n ? flat.bend_slope(g) : -flat.bend_slope(g - n);
}

}  // namespace

TPatternSearch find_t_pattern(const EmbeddedBand& e, const BandTolerances& tol, int samples_per_arc) {
  TPatternSearch out;
  out.precondition_warning = e.flat().lambda() >= 7 * pi / 12;
  if (e.closure_residual() > tol.closure) {
    out.reason = "band does not close: seam residual " + std::to_string(e.closure_residual());
    return out;
  }
  EmbeddedBand ne = normalize_band(e);
  const int n = ne.facet_count();

  // Special bends that already form a coplanar perpendicular pair.
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      Vec3 a = ne.bend_vector(k), b = ne.bend_vector(l);
      if (std::abs(a.dot(b)) > tol.gluing * a.norm() * b.norm()) continue;
      BendRef p{k, 0.0}, q{l, 0.0};
      auto gap = intercept_gap(ne, p, q);
      if (!gap || std::abs(*gap) > tol.gluing) continue;
      ++out.candidates;
      if (auto tp = classify(ne, p, q, *gap, tol.gluing)) {
        out.pattern = tp;
        return out;
      }
    }

  PerpLocus L;
  try {
    L = perp_pair_locus(ne, tol);
  } catch (const MoebiusError& err) {
    out.reason = err.what();
    return out;
  }

  bool walked = false;
  for (const auto& comp : L.components) {
    if (!comp.essential || !comp.iota_invariant) continue;
    walked = true;
    const int start = comp.nodes[0];
    const int stop = static_cast<int>(std::find(comp.nodes.begin(), comp.nodes.end(), L.iota[start]) -
                                      comp.nodes.begin());
    for (int k = 0; k < stop; ++k) {
      const int arc = comp.arcs[k];
      const bool forward = L.arcs[arc].node_a == comp.nodes[k];
      auto point = [&](double t) { return L.arc_point(arc, forward ? t : 1 - t); };
      auto gap_at = [&](double t) {
        auto [p, q] = point(t);
        return intercept_gap(ne, p, q);
      };
      auto try_at = [&](double t, double gap) -> bool {
        ++out.candidates;
        auto [p, q] = point(t);
        if (auto tp = classify(ne, p, q, gap, tol.gluing)) {
          out.pattern = tp;
          return true;
        }
        return false;
      };
      double t_prev = 0;
      auto g_prev = gap_at(0);
      for (int i = 0; i <= samples_per_arc; ++i) {
        double t = static_cast<double>(i) / samples_per_arc;
        auto g = gap_at(t);
        if (!g) continue;
        if (std::abs(*g) <= tol.bisection) {
          if (try_at(t, *g)) return out;
        } else if (g_prev && std::abs(*g_prev) > tol.bisection && (*g_prev > 0) != (*g > 0)) {
          double lo = t_prev, hi = t, glo = *g_prev, gmid = *g, mid = t;
          for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
            mid = (lo + hi) / 2;
            auto gm = gap_at(mid);
            if (!gm) break;
            gmid = *gm;
            if (std::abs(gmid) <= tol.bisection) break;
            if ((gmid > 0) == (glo > 0)) lo = mid, glo = gmid;
            else hi = mid;
          }
          if (try_at(mid, gmid)) return out;
        }
        t_prev = t;
        g_prev = g;
      }
    }
  }
  out.reason = walked ? "no sign change of the intercept difference gave a disjoint pair"
                      : "no iota-invariant essential component";
  return out;
}

double RidgeSplit::sum_error(double B, double T) const { return (R_str + L_str - Vec3(-B, T, 0)).norm(); }

double RidgeSplit::difference_error() const { return (R_str - L_str - 2 * theta).norm(); }

bool TPatternReport::all_ok() const {
  bool fine = !fine_applies || (s_bound_ok[0] && s_bound_ok[1]);
  return lambda_error <= 1e-9 && constraint1 && constraint2 && const3[0] && const3[1] && fine && split_norms_ok &&
         split.sum_error(m.B, m.T) <= 1e-9 && split.difference_error() <= 1e-9;
}

CertReport TPatternReport::to_cert(const std::string& id) const {
  CertReport rep(id);
  nlohmann::json meas = {{"B", m.B}, {"T", m.T}, {"b", m.b},   {"t", m.t},   {"L1", m.L1},
                         {"L2", m.L2}, {"R1", m.R1}, {"R2", m.R2}, {"x", m.x}, {"y", m.y}, {"eps", m.eps}};
  rep.add("lambda = (S1 + S2)/2", "note", {{"lambda", lambda}, {"error", lambda_error}, {"measurements", meas}},
          lambda_error <= 1e-9);
  rep.add("R1 + R2 >= T", "note", {{"lhs", m.R1 + m.R2}, {"rhs", m.T}}, constraint1);
  rep.add("L1 + L2 >= 2 sqrt(B^2 + T^2/4)", "note",
          {{"lhs", m.L1 + m.L2}, {"rhs", 2 * std::sqrt(m.B * m.B + m.T * m.T / 4)}}, constraint2);
  for (int j = 1; j <= 2; ++j) {
    double v = m.B * m.B - m.L(j) * m.L(j) + (m.T - m.R(j)) * (m.T - m.R(j));
    rep.add("B^2 - L_j^2 + (T - R_j)^2 <= 0, j = " + std::to_string(j), "note",
            {{"value", v}, {"exact_on_binary_values", const3_exact[j - 1]}}, const3[j - 1]);
  }
  for (int j = 1; j <= 2; ++j)
    rep.add("S_j >= sqrt3 - b(1 - 2b)/3, j = " + std::to_string(j), "note",
            {{"S", m.S(j)}, {"bound", std::sqrt(3.0) - m.b * (1 - 2 * m.b) / 3}, {"applies", fine_applies}},
            !fine_applies || s_bound_ok[j - 1]);
  rep.add("ridge split identities", "note",
          {{"sum_error", split.sum_error(m.B, m.T)},
           {"difference_error", split.difference_error()},
           {"L_str_norm", split.L_str.norm()},
           {"R_str_norm", split.R_str.norm()}},
          split_norms_ok && split.sum_error(m.B, m.T) <= 1e-9 && split.difference_error() <= 1e-9);
  rep.add("labeling", "note",
          {{"reflected", reflected}, {"used_deck", used_deck}, {"L1_ge_R1", l1_ge_r1}, {"in_omega", in_omega},
           {"z_extent", z_extent}},
          true);
  return rep;
}

TPatternReport measure_t_pattern(const EmbeddedBand& e, const TPattern& tp, double tolerance) {
  const FlatBand& flat = e.flat();
  const int n = flat.triangle_count();
  const double lambda = flat.lambda();
  const double s_b = tp.bottom.facet + tp.bottom.u;
  double s_t = tp.top.facet + tp.top.u;
  if (std::abs(s_t - s_b) < 1e-12 || std::abs(std::abs(s_t - s_b) - n) < 1e-12)
    throw InvalidPattern("the two bends of the pattern coincide");

  auto [Pb_l, Pb_r] = e.bend_image(tp.bottom);
  auto [Pt_l, Pt_r] = e.bend_image(tp.top);
  {
    SegmentRelation rel = relate(Pb_l, Pb_r, Pt_l, Pt_r);
    auto interior = [&](double s) { return s > tolerance && s < 1 - tolerance; };
    if (rel.separation <= tolerance && interior(rel.s) && interior(rel.r))
      throw InvalidPattern("the bend images of the pattern cross");
  }

  TPatternReport rep;
  rep.lambda = lambda;
  auto [fb_l, fb_r] = e.bend_flat(tp.bottom);
  auto [ft_l, ft_r] = e.bend_flat(tp.top);
  double yl_b = fb_l.y(), yr_b = fb_r.y(), yl_t = ft_l.y(), yr_t = ft_r.y();
  if (s_t < s_b) {
    rep.used_deck = true;
    s_t += n;
    std::tie(yl_t, yr_t) = std::pair{yr_t + lambda, yl_t + lambda};
    std::swap(Pt_l, Pt_r);
  }
  TPatternMeasurements& m = rep.m;
  m.L1 = yl_t - yl_b;
  m.R1 = yr_t - yr_b;
  m.L2 = yl_b + lambda - yr_t;
  m.R2 = yr_b + lambda - yl_t;
  m.b = yr_b - yl_b;
  m.t = yr_t - yl_t;

  // Put the top bend near the far end of the bottom one, reflecting if needed.
  auto mid_x = [&] { return ((Pt_l + Pt_r) / 2 - Pb_l).dot((Pb_r - Pb_l).normalized()); };
  if (mid_x() < (Pb_r - Pb_l).norm() / 2) {
    rep.reflected = true;
    std::swap(m.L1, m.R1);
    std::swap(m.L2, m.R2);
    m.b = -m.b;
    m.t = -m.t;
    std::swap(Pb_l, Pb_r);
    std::swap(Pt_l, Pt_r);
  }
  rep.l1_ge_r1 = m.L1 >= m.R1;
  rep.l2_ge_r2 = m.L2 >= m.R2;

  m.B = (Pb_r - Pb_l).norm();
  m.T = (Pt_r - Pt_l).norm();
  Vec3 X = (Pb_r - Pb_l) / m.B;
  Vec3 Y = (Pt_r - Pt_l) - (Pt_r - Pt_l).dot(X) * X;
  Y.normalize();
  Vec3 Z = X.cross(Y);
  Eigen::Matrix3d frame;
  frame.row(0) = X;
  frame.row(1) = Y;
  frame.row(2) = Z;
  auto local = [&](const Vec3& v) -> Vec3 { return frame * (v - Pb_l); };
  Vec3 mid = local((Pt_l + Pt_r) / 2);
  m.x = mid.x() - m.B;
  m.y = mid.y();
  m.eps = m.y;
  for (const Vec3& v : {Pb_l, Pb_r, Pt_l, Pt_r}) rep.z_extent = std::max(rep.z_extent, std::abs(local(v).z()));

  rep.lambda_error = std::abs(lambda - m.lambda());
  rep.constraint1 = m.R1 + m.R2 >= m.T - tolerance;
  rep.constraint2 = m.L1 + m.L2 >= 2 * std::sqrt(m.B * m.B + m.T * m.T / 4) - tolerance;
  for (int j = 1; j <= 2; ++j) {
    double v = m.B * m.B - m.L(j) * m.L(j) + (m.T - m.R(j)) * (m.T - m.R(j));
    rep.const3[j - 1] = v <= tolerance;
    rep.const3_exact[j - 1] = const3_check(m, j);
  }
  rep.fine_applies = lambda <= std::sqrt(3.0) + tolerance;
  for (int j = 1; j <= 2; ++j)
    rep.s_bound_ok[j - 1] = m.S(j) - (std::sqrt(3.0) - m.b * (1 - 2 * m.b) / 3) >= -tolerance;
  rep.in_omega = omega_member(rational_from_double(m.b), rational_from_double(m.t)) == Membership::kInside;

  // Ridge curve pieces between the two bends, one facet (or deck copy) at a time.
  RidgeSplit& split = rep.split;
  for (int g = static_cast<int>(std::floor(s_b)); g < s_t; ++g) {
    double u1 = std::max(s_b - g, 0.0), u2 = std::min(s_t - g, 1.0);
    if (u2 <= u1) continue;
    const int f = g % n;
    int mu = flat.signs()[f] * (g >= n ? -1 : 1) * (rep.reflected ? -1 : 1);
    Vec3 E = e.core_point({f, u2}) - e.core_point({f, u1});
    Vec3 piece = 2.0 * mu * (frame * E);
    (mu > 0 ? split.R_str : split.L_str) += piece;
  }
  split.theta = Vec3(m.B / 2 + m.x, m.y, 0);
  split.p = Vec3(m.B, 0, 0) + split.R_str;
  rep.split_norms_ok = split.L_str.norm() <= m.L1 + tolerance && split.R_str.norm() <= m.R1 + tolerance;
  return rep;
}

ZeroSlopeCount zero_slope_bends(const EmbeddedBand& e, const TPattern& tp, const TPatternReport& report) {
  const FlatBand& flat = e.flat();
  const int n = flat.triangle_count();
  auto [l, r] = e.bend_flat(tp.bottom);
  const double start = r.y() - l.y();
  std::vector<double> slopes{start};
  const double s_b = tp.bottom.facet + tp.bottom.u;
  for (int g = static_cast<int>(std::floor(s_b)) + 1; g < s_b + n; ++g) slopes.push_back(generalized_slope(flat, g));
  slopes.push_back(-start);

  ZeroSlopeCount out;
  for (std::size_t k = 0; k + 1 < slopes.size(); ++k) {
    double a = slopes[k], b = slopes[k + 1];
    if (b == 0 && k + 2 < slopes.size()) ++out.count;
    else if ((a < 0 && b > 0) || (a > 0 && b < 0)) ++out.count;
  }
  if (start == 0) ++out.count;
  out.applies = report.in_omega;
  out.at_least_two = out.count >= 2;
  return out;
}

}  // namespace moebius

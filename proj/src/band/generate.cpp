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

#include "moebius/band/generate.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <thread>

#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include "moebius/band/locus.hpp"
#include "moebius/errors.hpp"

namespace moebius {

namespace {

using std::numbers::pi;

Eigen::VectorXd seam_gap(const EmbeddedBand& e) {
  const auto& L = e.left_images();
  const auto& R = e.right_images();
  Eigen::VectorXd out(6);
  out << L.back() - R.front(), R.back() - L.front();
  return out;
}

struct ClosureFunctor {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  const FlatBand* flat;
  int n_inputs;

  int inputs() const { return n_inputs; }
  // The solver wants at least as many residuals as unknowns; the extra ones
  // are identically zero.
  int values() const { return std::max(6, n_inputs); }
  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    f = Eigen::VectorXd::Zero(values());
    f.head(6) = seam_gap(fold(*flat, std::vector<double>(x.data(), x.data() + x.size())));
    return 0;
  }
};

}  // namespace

std::vector<double> unfold_angles(const EmbeddedBand& e) {
  const FlatBand& flat = e.flat();
  std::vector<double> angles;
  for (int i = 1; i < flat.triangle_count(); ++i) {
    auto id = flat.triangle_ids(i)[2];
    Vec3 actual = id.side == 'L' ? e.left_images()[id.index] : e.right_images()[id.index];
    Vec3 continued = e.map(i - 1, flat.triangle(i)[2]);
    const auto& bend = flat.bends()[i];
    Vec3 a = e.left_images()[bend.first];
    Vec3 axis = (e.right_images()[bend.second] - a).normalized();
    Vec3 p = continued - a, q = actual - a;
    p -= p.dot(axis) * axis;
    q -= q.dot(axis) * axis;
    angles.push_back(std::atan2(axis.dot(p.cross(q)), p.dot(q)));
  }
  return angles;
}

FlatBand refine_band(const FlatBand& flat) {
  auto split = [](const std::vector<double>& h) {
    std::vector<double> out;
    for (std::size_t k = 0; k < h.size(); ++k) {
      out.push_back(h[k]);
      if (k + 1 < h.size()) out.push_back((h[k] + h[k + 1]) / 2);
    }
    return out;
  };
  std::vector<int> signs;
  for (int s : flat.signs()) signs.insert(signs.end(), {s, s});
  return FlatBand::from_signs(flat.lambda(), split(flat.left()), split(flat.right()), signs);
}

std::vector<double> refine_dihedrals(const std::vector<double>& dihedrals) {
  std::vector<double> out{0.0};
  for (double a : dihedrals) out.insert(out.end(), {a, 0.0});
  return out;
}

ClosureFit close_band(const FlatBand& flat, const std::vector<double>& start) {
  if (start.size() < 6) throw std::invalid_argument("closing a band needs at least six angles");
  ClosureFunctor functor{&flat, static_cast<int>(start.size())};
  Eigen::NumericalDiff<ClosureFunctor> diff(functor);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<ClosureFunctor>> lm(diff);
  lm.parameters.xtol = 1e-15;
  lm.parameters.ftol = 1e-15;
  lm.parameters.maxfev = 4000;
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(start.data(), start.size());
  lm.minimize(x);
  ClosureFit fit;
  fit.dihedrals.assign(x.data(), x.data() + x.size());
  fit.band = fold(flat, fit.dihedrals);
  fit.residual = fit.band.closure_residual();
  fit.evaluations = static_cast<int>(lm.nfev);
  return fit;
}

RandomBand random_closed_band(std::uint64_t seed, const RandomBandOptions& options) {
  const double s3 = std::sqrt(3.0);
  // The flat-folded equilateral triangle, refined to eight triangles.
  const FlatBand base =
      refine_band(FlatBand(s3, {0, 2 / s3, s3}, {0, 1 / s3, s3}, {{0, 1}, {1, 1}, {1, 2}}));
  const std::vector<double> base_angles = refine_dihedrals({pi, pi, pi});

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lam(options.lambda_min, options.lambda_max);
  std::uniform_real_distribution<double> jitter(-options.height_jitter, options.height_jitter);
  std::normal_distribution<double> kick(0.0, options.angle_spread);
  for (int attempt = 1; attempt <= options.retries; ++attempt) {
    const double lambda = lam(rng);
    const double scale = lambda / s3;
    std::vector<double> left = base.left(), right = base.right();
    for (auto* side : {&left, &right})
      for (std::size_t k = 0; k < side->size(); ++k) {
        (*side)[k] *= scale;
        if (k > 0 && k + 1 < side->size()) (*side)[k] += jitter(rng);
      }
    std::vector<double> angles = base_angles;
    for (double& a : angles) a += kick(rng);
    FlatBand flat;
    try {
      flat = FlatBand::from_signs(lambda, left, right, base.signs());
    } catch (const GeometryError&) {
      continue;
    }
    ClosureFit fit = close_band(flat, angles);
    if (!(fit.residual <= options.closure_tol)) continue;
    if (genericity_violation(fit.band, 1e-6)) continue;
    return RandomBand{flat, fit.dihedrals, fit.band, attempt};
  }
  throw RetriesExhausted("no closed generic band after " + std::to_string(options.retries) + " draws");
}

SearchOutcome search_bands(int restarts, std::uint64_t seed, const RandomBandOptions& options, int threads) {
  struct Trial {
    std::optional<RandomBand> band;
    std::optional<TPatternReport> report;
  };
  auto run = [&](int k) {
    Trial t;
    try {
      t.band = random_closed_band(seed + static_cast<std::uint64_t>(k), options);
    } catch (const RetriesExhausted&) {
      return t;
    }
    TPatternSearch s = find_t_pattern(t.band->band);
    if (s.found()) {
      try {
        t.report = measure_t_pattern(t.band->band, *s.pattern);
      } catch (const InvalidPattern&) {
      }
    }
    return t;
  };
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<Trial> trials(restarts);
  std::vector<std::future<void>> workers;
  for (int w = 0; w < threads; ++w)
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (int k = w; k < restarts; k += threads) trials[k] = run(k);
    }));
  for (auto& f : workers) f.get();

  SearchOutcome out;
  out.restarts = restarts;
  for (auto& t : trials) {
    if (!t.band) continue;
    ++out.closed;
    if (!t.report) continue;
    ++out.patterns;
    if (!out.best || t.band->flat.lambda() < out.best->flat.lambda()) {
      out.best = t.band;
      out.report = t.report;
    }
  }
  return out;
}

}  // namespace moebius

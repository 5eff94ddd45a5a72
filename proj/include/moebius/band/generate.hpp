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
#include <vector>

#include "moebius/band/embedded_band.hpp"
#include "moebius/band/tpattern.hpp"

namespace moebius {

/// Dihedral angles that reproduce `e` under fold() when e is an isometric
/// embedding placed as fold() places it. Angles are in (-pi, pi].
std::vector<double> unfold_angles(const EmbeddedBand& e);

/// Splits every ridge at its midpoint, adding one bend per triangle. The new
/// vertices sit at odd indices. With `dihedrals` for the old band, the result
/// folds to the same surface when the new bends get angle 0; see
/// refine_dihedrals.
FlatBand refine_band(const FlatBand& flat);
std::vector<double> refine_dihedrals(const std::vector<double>& dihedrals);

struct ClosureFit {
  std::vector<double> dihedrals;
  EmbeddedBand band;
  double residual = 0;
  int evaluations = 0;
};

/// Adjusts the dihedral angles by Levenberg-Marquardt (numeric Jacobian) to
/// make the seam close up. Needs at least six angles.
ClosureFit close_band(const FlatBand& flat, const std::vector<double>& start);

struct RandomBandOptions {
  double lambda_min = 1.70;
  double lambda_max = 1.80;
  double angle_spread = 0.2;    // standard deviation of the angle kicks
  double height_jitter = 0.04;  // interior vertex heights move by at most this
  double closure_tol = 1e-11;
  int retries = 64;
};

struct RandomBand {
  FlatBand flat;
  std::vector<double> dihedrals;
  EmbeddedBand band;
  int attempts = 0;
};

/// A generic closed band with 8 triangles near the flat-folded equilateral
/// triangle: the triangle's strip is refined, rescaled to a random aspect
/// ratio, its interior vertices jittered and its angles kicked, and the seam
/// is closed again by close_band. Draws that do not close or are not generic
/// are redrawn. Throws RetriesExhausted.
RandomBand random_closed_band(std::uint64_t seed, const RandomBandOptions& options = {});

struct SearchOutcome {
  std::optional<RandomBand> best;  // smallest aspect ratio among bands with a measured T-pattern
  std::optional<TPatternReport> report;
  int restarts = 0;
  int closed = 0;     // restarts that produced a closed generic band
  int patterns = 0;   // of those, bands with a T-pattern
};

/// Independent restarts, run concurrently, each drawing a random closed band
/// with aspect ratio in [lambda_min, lambda_max] and looking for a T-pattern
/// on it. Restart k uses seed + k, so the outcome does not depend on the
/// number of threads.
SearchOutcome search_bands(int restarts, std::uint64_t seed, const RandomBandOptions& options = {},
                           int threads = 0);

}  // namespace moebius

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

#include <ostream>
#include <vector>

#include "moebius/band/embedded_band.hpp"

namespace moebius {

/// Wavefront OBJ with one face per facet. Vertex k of the file is left image
/// k for k < left count, then the right images.
void write_obj(const EmbeddedBand& e, std::ostream& out);

/// One "x,y,z" row per point, after a header row.
void write_curve_csv(const std::vector<Vec3>& points, std::ostream& out);

/// The XY projection of a polyline, scaled into a square viewport.
void write_curve_svg(const std::vector<Vec3>& points, std::ostream& out, int size = 400);

}  // namespace moebius

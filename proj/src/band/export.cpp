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

#include "moebius/band/export.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>

namespace moebius {

void write_obj(const EmbeddedBand& e, std::ostream& out) {
  const FlatBand& flat = e.flat();
  out << std::setprecision(17);
  out << "# " << flat.triangle_count() << " facets, lambda " << flat.lambda() << "\n";
  for (const auto& v : e.left_images()) out << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << "\n";
  for (const auto& v : e.right_images()) out << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << "\n";
  const int offset = static_cast<int>(e.left_images().size());
  for (int i = 0; i < flat.triangle_count(); ++i) {
    out << 'f';
    for (const auto& id : flat.triangle_ids(i)) out << ' ' << 1 + id.index + (id.side == 'L' ? 0 : offset);
    out << "\n";
  }
}

void write_curve_csv(const std::vector<Vec3>& points, std::ostream& out) {
  out << std::setprecision(17) << "x,y,z\n";
  for (const auto& p : points) out << p.x() << ',' << p.y() << ',' << p.z() << "\n";
}

void write_curve_svg(const std::vector<Vec3>& points, std::ostream& out, int size) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& p : points) {
    lo = std::min({lo, p.x(), p.y()});
    hi = std::max({hi, p.x(), p.y()});
  }
  const double span = hi > lo ? hi - lo : 1.0;
  const double margin = 10, scale = (size - 2 * margin) / span;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  out << "<polyline fill=\"none\" stroke=\"black\" points=\"";
  out << std::fixed << std::setprecision(3);
  for (const auto& p : points)
    out << margin + (p.x() - lo) * scale << ',' << size - margin - (p.y() - lo) * scale << ' ';
  out << "\"/>\n</svg>\n";
}

}  // namespace moebius

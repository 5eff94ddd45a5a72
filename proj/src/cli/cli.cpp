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

#include "moebius/cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "moebius/band/approx.hpp"
#include "moebius/band/export.hpp"
#include "moebius/band/generate.hpp"
#include "moebius/band/locus.hpp"
#include "moebius/band/ridge.hpp"
#include "moebius/band/tpattern.hpp"
#include "moebius/certs/statements.hpp"
#include "moebius/errors.hpp"
#include "moebius/exactnum/rational.hpp"
#include "moebius/opt/lambda_opt.hpp"
#include "moebius/region/region.hpp"

namespace moebius {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunConfig {
  std::string only;
  std::string out;
  std::string width = "1e-12";
  int resolution = 0;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
  std::string spec;
  int restarts = 64;
  std::vector<int> mesh_sizes;
};

// Writes next to the target and renames, so a reader never sees half a file.
void write_atomically(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
  }
  fs::rename(tmp, path);
}

fs::path output_dir(const RunConfig& cfg) {
  fs::path dir(cfg.out);
  fs::create_directories(dir);
  return dir;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> ids;
  if (cfg.only.empty()) {
    ids = certificate_ids();
  } else {
    const auto& known = certificate_ids();
    if (std::find(known.begin(), known.end(), cfg.only) == known.end())
      throw CLI::ValidationError("--only", "unknown certificate id '" + cfg.only + "'");
    ids = {cfg.only};
  }
  std::vector<std::future<CertReport>> jobs;
  for (const auto& id : ids) jobs.push_back(std::async(std::launch::async, [id] { return certificate_by_id(id); }));

  bool all = true;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    CertReport rep = jobs[k].get();
    bool ok = rep.verified() && replay(rep);
    all = all && ok;
    out << std::left << std::setw(14) << ids[k] << (ok ? "verified" : "FAILED") << "\n" << std::flush;
    if (!cfg.out.empty()) write_atomically(output_dir(cfg) / (ids[k] + ".json"), rep.dump() + "\n");
  }
  out << (all ? "all certificates verified" : "certificate failure") << "\n";
  return all ? kExitOk : kExitCertFailure;
}

int cmd_region(const RunConfig& cfg, std::ostream& out) {
  const int resolution = cfg.resolution > 0 ? cfg.resolution : 200;
  const std::string path = cfg.out.empty() ? "omega.svg" : cfg.out;
  OmegaPlot plot = plot_omega(resolution, path);
  CertReport trap = trapezoid_certificate();
  json rep = {{"svg", path},
              {"resolution", resolution},
              {"samples", plot.samples},
              {"inside", plot.inside_points.size()},
              {"trapezoid", trap.status()}};
  out << rep.dump(2) << "\n";
  return trap.verified() ? kExitOk : kExitCertFailure;
}

int cmd_lambda1(const RunConfig& cfg, std::ostream& out) {
  double w = 0;
  try {
    w = std::stod(cfg.width);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--width", "not a number: " + cfg.width);
  }
  if (!(w > 0)) throw CLI::ValidationError("--width", "must be positive");
  OptimizationResult r = lambda1(rational_from_double(w));
  out << "lambda1 in " << r.lambda1.to_string(20) << "\n";
  out << "width    " << std::setprecision(3) << r.lambda1.width_double() << "\n";
  out << "t0 in    " << r.t0.to_string(20) << "\n";
  out << "closed   " << r.lambda1_closed_form.to_string() << "\n";
  out << "certificate " << r.certificate.status() << "\n";
  if (!cfg.out.empty()) write_atomically(cfg.out, r.certificate.dump() + "\n");
  return r.certificate.verified() ? kExitOk : kExitCertFailure;
}

json measurements_json(const TPatternReport& r) {
  const auto& m = r.m;
  return {{"B", m.B},   {"T", m.T},   {"b", m.b},   {"t", m.t}, {"L1", m.L1}, {"L2", m.L2},
          {"R1", m.R1}, {"R2", m.R2}, {"S1", m.S1()}, {"S2", m.S2()}, {"x", m.x}, {"y", m.y},
          {"eps", m.eps}};
}

int cmd_band_analyze(const RunConfig& cfg, std::ostream& out) {
  BandSpec spec = parse_band_spec(cfg.spec);
  BandTolerances tol;
  tol.closure = std::max(tol.closure, cfg.tolerance);
  EmbeddedBand e = fold(spec.flat, spec.dihedrals);
  bool ok = true;

  json rep;
  rep["lambda"] = spec.flat.lambda();
  rep["triangles"] = spec.flat.triangle_count();
  rep["signs"] = spec.flat.signs();
  rep["closure_residual"] = e.closure_residual();
  rep["isometry_residual"] = e.isometry_residual();
  const bool closed = e.closure_residual() <= tol.closure;
  rep["closed"] = closed;

  std::optional<RidgeCurve> ridge;
  if (closed) {
    ridge = ridge_curve(e, tol);
    RidgeReport rr = ridge_invariant_report(*ridge, spec.flat.lambda(), cfg.tolerance);
    rep["ridge"] = rr.to_cert().to_json();
    ok = ok && rr.all_ok();

    auto why = genericity_violation(e, tol.gluing);
    rep["generic"] = !why;
    if (why) rep["genericity_violation"] = *why;
    EmbeddedBand g = why ? perturb_to_generic(e, 1e-6, cfg.seed) : e;
    PerpLocus L = perp_pair_locus(g, tol);
    rep["locus"] = {{"perturbed", why.has_value()},
                    {"components", L.components.size()},
                    {"essential", L.essential_count()},
                    {"iota_invariant_essential", L.has_iota_invariant_essential()},
                    {"transverse_crossings", L.transverse_crossings}};
  }

  TPatternSearch s = find_t_pattern(e, tol);
  json tp = {{"found", s.found()}, {"candidates", s.candidates}, {"precondition_warning", s.precondition_warning}};
  if (!s.found()) tp["reason"] = s.reason;
  std::optional<TPatternReport> measured;
  if (s.found()) {
    const TPattern& p = *s.pattern;
    tp["bottom"] = {{"facet", p.bottom.facet}, {"u", p.bottom.u}};
    tp["top"] = {{"facet", p.top.facet}, {"u", p.top.u}};
    tp["degenerate"] = p.degenerate;
    measured = measure_t_pattern(e, p, cfg.tolerance);
    tp["measurements"] = measurements_json(*measured);
    tp["report"] = measured->to_cert().to_json();
    ZeroSlopeCount z = zero_slope_bends(e, p, *measured);
    tp["zero_slope_bends"] = {{"count", z.count}, {"applies", z.applies}, {"at_least_two", z.at_least_two}};
    ok = ok && measured->all_ok();
  }
  rep["t_pattern"] = tp;
  out << rep.dump(2) << "\n";

  if (!cfg.out.empty()) {
    fs::path dir = output_dir(cfg);
    std::ostringstream obj;
    write_obj(e, obj);
    write_atomically(dir / "band.obj", obj.str());
    std::ostringstream core;
    write_curve_csv(core_curve(e), core);
    write_atomically(dir / "core.csv", core.str());
    if (ridge) {
      std::ostringstream csv, svg;
      write_curve_csv(ridge->vertices, csv);
      write_curve_svg(ridge->vertices, svg);
      write_atomically(dir / "ridge.csv", csv.str());
      write_atomically(dir / "ridge.svg", svg.str());
    }
    if (measured) write_atomically(dir / "t_pattern.json", measured->to_cert().dump() + "\n");
  }
  return ok ? kExitOk : kExitCertFailure;
}

int cmd_band_search(const RunConfig& cfg, std::ostream& out) {
  SearchOutcome s = search_bands(cfg.restarts, cfg.seed);
  json rep = {{"restarts", s.restarts}, {"closed", s.closed}, {"with_t_pattern", s.patterns}};
  if (s.best) {
    rep["best"] = {{"lambda", s.best->flat.lambda()},
                   {"dihedrals", s.best->dihedrals},
                   {"left_ridge", s.best->flat.left()},
                   {"right_ridge", s.best->flat.right()},
                   {"measurements", measurements_json(*s.report)},
                   {"all_constraints_hold", s.report->all_ok()},
                   {"below_sqrt3", s.best->flat.lambda() < std::sqrt(3.0)}};
  }
  out << rep.dump(2) << "\n";
  if (!cfg.out.empty() && s.best) {
    json spec = {{"lambda", s.best->flat.lambda()},
                 {"left_ridge", s.best->flat.left()},
                 {"right_ridge", s.best->flat.right()},
                 {"dihedrals", s.best->dihedrals}};
    json diagonals = json::array();
    const auto& bends = s.best->flat.bends();
    for (std::size_t k = 1; k + 1 < bends.size(); ++k) diagonals.push_back({bends[k].first, bends[k].second});
    spec["diagonals"] = diagonals;
    write_atomically(cfg.out, spec.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_approx(const RunConfig& cfg, std::ostream& out) {
  std::vector<int> sizes = cfg.mesh_sizes.empty() ? std::vector<int>{8, 16, 32} : cfg.mesh_sizes;
  ConePatch cone;
  json rows = json::array();
  double previous = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  for (int n : sizes) {
    ApproxResult r = approximate_smooth(cone.samples(n), cone);
    decreasing = decreasing && r.K < previous;
    previous = r.K;
    rows.push_back({{"n", n},
                    {"triangles", r.flat.size()},
                    {"K", r.K},
                    {"max_distance", r.max_proximity_error},
                    {"distance_below_K_minus_1", r.proximity_ok}});
  }
  json rep = {{"surface", {{"apex_distance", cone.apex_distance},
                           {"height", cone.height},
                           {"half_angle", cone.half_angle},
                           {"sin_alpha", cone.sin_alpha}}},
              {"meshes", rows},
              {"K_strictly_decreasing", decreasing}};
  out << rep.dump(2) << "\n";
  if (!cfg.out.empty()) write_atomically(cfg.out, rep.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Certified computations for folded Moebius bands"};
  app.footer(
      "Environment:\n"
      "  MOEBIUS_PRECISION_CAP  largest MPFR precision (bits) used when deciding signs\n"
      "                         of radical expressions; default 4096.\n"
      "Exit codes: 0 success, 1 a certificate or checked claim failed, 2 usage error.");
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run and replay the certificates");
  verify->add_option("--only", cfg.only, "Run a single certificate by id");
  verify->add_option("--out", cfg.out, "Directory for one JSON report per certificate");

  auto* region = app.add_subcommand("region", "Plot the region Omega and check its trapezoid");
  region->add_option("--resolution", cfg.resolution, "Grid points per axis (default 200)")->check(CLI::PositiveNumber);
  region->add_option("--out", cfg.out, "SVG path (default omega.svg)");

  auto* lam = app.add_subcommand("lambda1", "Certified enclosure of the lower bound");
  lam->add_option("--width", cfg.width, "Largest enclosure width (default 1e-12)");
  lam->add_option("--out", cfg.out, "Write the certificate JSON here");

  auto* band = app.add_subcommand("band", "Polygonal band tools");
  band->require_subcommand(1);
  auto* analyze = band->add_subcommand("analyze", "Fold a band spec and run every check on it");
  analyze->add_option("spec", cfg.spec, "Band spec JSON file")->required();
  analyze->add_option("--tolerance", cfg.tolerance, "Numeric tolerance (default 1e-9)")->check(CLI::PositiveNumber);
  analyze->add_option("--seed", cfg.seed, "Seed for the genericity perturbation");
  analyze->add_option("--out", cfg.out, "Directory for OBJ, CSV, SVG and report files");
  auto* search = band->add_subcommand("search", "Random closed bands with T-patterns");
  search->add_option("--restarts", cfg.restarts, "Independent restarts (default 64)")->check(CLI::PositiveNumber);
  search->add_option("--seed", cfg.seed, "First seed; restart k uses seed + k");
  search->add_option("--out", cfg.out, "Write the best band as a spec file");

  auto* approx = app.add_subcommand("approx", "Polygonal approximation of a cone patch");
  approx->add_option("--resolution", cfg.mesh_sizes, "Mesh sizes n (default 8 16 32)")->check(CLI::PositiveNumber);
  approx->add_option("--out", cfg.out, "Write the report JSON here");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (region->parsed()) return cmd_region(cfg, out);
    if (lam->parsed()) return cmd_lambda1(cfg, out);
    if (analyze->parsed()) return cmd_band_analyze(cfg, out);
    if (search->parsed()) return cmd_band_search(cfg, out);
    if (approx->parsed()) return cmd_approx(cfg, out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCertFailure;
  }
  return kExitUsage;
}

}  // namespace moebius

// affgeo: per-point invariants, grid scans and the verification suites.
//
// Exit codes: 0 ok, 1 a verification check failed, 2 degenerate point, 3 not elliptical,
// 4 bad input (unknown surface, out of domain, unreadable surface file).

#include "affgeo/compat.hpp"
#include "affgeo/errors.hpp"
#include "affgeo/invariants.hpp"
#include "affgeo/report.hpp"
#include "affgeo/surfaces.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace affgeo;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1, kExitDegenerate = 2, kExitNotElliptical = 3, kExitInput = 4;

template <typename M>
ordered_json rows(const M& m) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json r = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    out.push_back(r);
  }
  return out;
}

int fail(const std::string& surface, double x, double y, const std::string& type, const Error& e, int code) {
  ordered_json j{{"surface", surface}, {"x", x}, {"y", y}, {"type", type}, {"error", e.code()}, {"reason", e.what()}};
  std::cout << j.dump(2) << '\n';
  return code;
}

int cmd_point(const CatalogSurface& s, double x, double y) {
  NormalizationResult n;
  try {
    n = surface_normalization(s, x, y);
  } catch (const NotElliptical& e) {
    return fail(s.name, x, y, to_string(classify_quadratic(jet_at(s, x, y, 4))), e, kExitNotElliptical);
  } catch (const OutOfDomain& e) {
    return fail(s.name, x, y, "", e, kExitInput);
  }
  if (n.point_type != PointType::RegularElliptical)
    return fail(s.name, x, y, to_string(n.point_type), DegeneratePoint("cubic part vanishes after normalization"), kExitDegenerate);

  const InvariantTuple<double> I = fundamental_invariants(n);
  const MaurerCartan<double> mc = maurer_cartan(I);
  ordered_json j;
  j["surface"] = s.name;
  j["x"] = x;
  j["y"] = y;
  j["type"] = to_string(n.point_type);
  j["I"] = {I(0), I(1), I(2), I(3), I(4)};
  j["frame"] = {{"linear", rows(n.frame_map.linear)}, {"translation", {n.frame_map.translation(0), n.frame_map.translation(1), n.frame_map.translation(2)}},
                {"d3_choice", n.d3_choice}};
  j["R1"] = rows(mc.R1);
  j["R2"] = rows(mc.R2);
  j["Y"] = {mc.Y1, mc.Y2};
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_scan(const CatalogSurface& s, int nx, int ny, double h, const std::string& csv, bool json) {
  const Region g{to_double(s.domain.x0), to_double(s.domain.x1), to_double(s.domain.y0), to_double(s.domain.y1), nx, ny};
  const std::vector<ScanRow> rows = scan_surface(s, g, h);
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f) throw std::runtime_error("cannot write " + csv);
    write_scan_csv(f, rows);
  }
  if (json) {
    int evaluated = 0;
    double worst = 0;
    for (const ScanRow& r : rows)
      if (r.evaluated) {
        ++evaluated;
        worst = std::max(worst, r.point.structure.cwiseAbs().maxCoeff());
      }
    std::cout << ordered_json{{"surface", s.name}, {"rows", rows.size()}, {"evaluated", evaluated}, {"h", h}, {"structure_max", worst}}.dump(2)
              << '\n';
  } else if (csv.empty()) {
    write_scan_csv(std::cout, rows);
  }
  return 0;
}

void print_text(const RunReport& r) {
  for (const Check& c : r.checks)
    std::cout << "[" << c.criterion << "] " << to_string(c.status) << "  " << c.name << "  residual " << c.residual << " tol " << c.tol
              << (c.note.empty() ? "" : "  (" + c.note + ")") << '\n';
  for (const ErrataLine& e : r.errata)
    std::cout << "errata [" << e.verdict << "] " << e.location << (e.note.empty() ? "" : " - " + e.note) << '\n';
  for (const std::string& l : r.log) std::cout << "log: " << l << '\n';
  std::cout << (r.ok() ? "ok" : "FAILED") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine surface invariants"};
  app.require_subcommand(1);
  bool json = false, timing = false;
  std::string csv, surfaces_file;
  std::uint64_t seed = 0;
  double tol_scale = 1;
  app.add_flag("--json", json, "JSON output");
  app.add_option("--csv", csv, "write scan rows to PATH");
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--tol-scale", tol_scale, "multiply every tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--surfaces", surfaces_file, "JSON file with extra or overriding surfaces")->check(CLI::ExistingFile);
  app.add_flag("--timing", timing, "add wall-clock checks and time (report no longer reproducible)");

  std::string surface;
  double px = 0, py = 0;
  auto* point = app.add_subcommand("point", "invariants, frame and connection at one point");
  point->add_option("surface", surface)->required();
  point->add_option("x", px)->required();
  point->add_option("y", py)->required();

  int nx = 11, ny = 11;
  double h = kDefaultStep;
  auto* scan = app.add_subcommand("scan", "grid over the surface domain, CSV rows");
  scan->set_help_flag("--help", "print help (-h is the step)");
  scan->add_option("surface", surface)->required();
  scan->add_option("--nx", nx)->capture_default_str()->check(CLI::PositiveNumber);
  scan->add_option("--ny", ny)->capture_default_str()->check(CLI::PositiveNumber);
  scan->add_option("--h", h)->capture_default_str()->check(CLI::PositiveNumber);

  std::string suite = "all";
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
  verify->add_option("--samples", vo.samples, "samples per family")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--starts", vo.starts, "solver starts")->capture_default_str()->check(CLI::PositiveNumber);
  // verify also accepts the global output flags after the suite name
  verify->fallthrough();
  point->fallthrough();
  scan->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      vo.seed = seed;
      vo.tol_scale = tol_scale;
      vo.timing = timing;
      const auto t0 = std::chrono::steady_clock::now();
      RunReport r = verify_suite(suite, vo);
      r.command = "verify " + suite;
      std::string out = report_json(r);
      if (timing) {
        auto j = ordered_json::parse(out);
        j["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out = j.dump(2);
      }
      if (json)
        std::cout << out << '\n';
      else
        print_text(r);
      if (!csv.empty()) std::ofstream(csv) << out << '\n';
      return r.ok() ? 0 : kExitFail;
    }
    const std::vector<CatalogSurface> list = surfaces_file.empty() ? catalog() : catalog_with_file(surfaces_file);
    const CatalogSurface& s = catalog_surface(surface, list);
    if (*point) return cmd_point(s, px, py);
    return cmd_scan(s, nx, ny, h, csv, json);
  } catch (const std::out_of_range& e) {
    std::cerr << "affgeo: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "affgeo: " << e.code() << ": " << e.what() << '\n';
    return kExitInput;
  }
}

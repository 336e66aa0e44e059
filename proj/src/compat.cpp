#include "affgeo/compat.hpp"

#include "affgeo/errors.hpp"
#include "affgeo/parallel.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

namespace affgeo {

namespace {

struct Node {
  NormalizationResult n;
  MaurerCartan<double> mc;
};

// Stencil nodes may sit up to h outside the domain; the polynomial is defined there.
NormalizationResult stencil_normalization(const CatalogSurface& s, double x, double y, const Matrix3<double>& reference) {
  return normalize_aligned(jet_of_polynomial(s.height.cast<double>(), x, y, 4), reference);
}

Node node(const CatalogSurface& s, double x, double y, const Matrix3<double>* reference) {
  Node out{stencil_normalization(s, x, y, *reference), {}};
  if (out.n.point_type != PointType::RegularElliptical)
    throw DegeneratePoint("stencil node (" + std::to_string(x) + ", " + std::to_string(y) + ") is " + to_string(out.n.point_type));
  out.mc = maurer_cartan(fundamental_invariants(out.n));
  return out;
}

// Exact scales relating the four conditions to the structure-equation entries.
constexpr double kConditionScale[4] = {144, 48, 48, 24};
constexpr int kConditionEntry[4][2] = {{0, 1}, {0, 2}, {1, 2}, {2, 2}};

}  // namespace

NormalizationResult surface_normalization(const CatalogSurface& s, double x, double y, const Matrix3<double>* reference) {
  const Jet<double> j = jet_at(s, x, y, 4);
  NormalizationResult n = reference ? normalize_aligned(j, *reference) : normalize_full(j);
  return n;
}

FrameDerivative frame_derivative(const CatalogSurface& s, double x, double y, const SurfaceFunction& f, double h) {
  if (!(h > 0)) throw std::invalid_argument("step must be positive");
  const NormalizationResult c = surface_normalization(s, x, y);
  if (c.point_type != PointType::RegularElliptical) throw DegeneratePoint("centre point is " + to_string(c.point_type));
  const Matrix3<double>& F = c.frame_map.linear;
  FrameDerivative d;
  for (int k = 0; k < 2; ++k) {
    const double dx = F(0, k), dy = F(1, k);
    const Node p = node(s, x + h * dx, y + h * dy, &F), m = node(s, x - h * dx, y - h * dy, &F);
    (k == 0 ? d.D1 : d.D2) = (f(p.n) - f(m.n)) / (2 * h);
  }
  return d;
}

CompatPoint compat_at(const CatalogSurface& s, double x, double y, double h, CoefficientSet set) {
  if (!(h > 0)) throw std::invalid_argument("step must be positive");
  CompatPoint out;
  out.x = x;
  out.y = y;
  const NormalizationResult c = surface_normalization(s, x, y);
  out.type = c.point_type;
  if (c.point_type != PointType::RegularElliptical) throw DegeneratePoint("point is " + to_string(c.point_type));
  const Matrix3<double>& F = c.frame_map.linear;
  const Matrix3<double> Finv = F.inverse();
  out.I = fundamental_invariants(c);
  const MaurerCartan<double> mc = maurer_cartan(out.I);
  out.Y1 = mc.Y1;
  out.Y2 = mc.Y2;

  // along e1, e2
  Matrix3<double> DR2[2], DR1[2];
  for (int k = 0; k < 2; ++k) {
    const double dx = F(0, k), dy = F(1, k);
    const Node p = node(s, x + h * dx, y + h * dy, &F), m = node(s, x - h * dx, y - h * dy, &F);
    out.branch_flip = out.branch_flip || p.n.lex_choice != c.lex_choice || m.n.lex_choice != c.lex_choice;
    const InvariantTuple<double> Ip = fundamental_invariants(p.n), Im = fundamental_invariants(m.n);
    out.DI.row(k) = ((Ip - Im) / (2 * h)).transpose();
    DR1[k] = (p.mc.R1 - m.mc.R1) / (2 * h);
    DR2[k] = (p.mc.R2 - m.mc.R2) / (2 * h);

    const Matrix3<double> R = Finv * (p.n.frame_map.linear - m.n.frame_map.linear) / (2 * h);
    out.omega_error = std::max(out.omega_error, (R - (k == 0 ? mc.R1 : mc.R2)).cwiseAbs().maxCoeff());
    Vector3<double> t = Finv * (p.n.frame_map.translation - m.n.frame_map.translation) / (2 * h);
    t(k) -= 1;
    out.translation_error = std::max(out.translation_error, t.cwiseAbs().maxCoeff());
  }
  out.structure = structure_residuals(mc, DR2[0], DR1[1]);
  out.conditions = compat_residuals<double>(out.I, out.DI, set);

  // dw_i = Y_i w1^w2 for the coframe w = C (dx, dy), C = P^-1, P the tangential block of F
  auto coframe = [&](double px, double py) {
    const NormalizationResult n = stencil_normalization(s, px, py, F);
    if (n.point_type != PointType::RegularElliptical) throw DegeneratePoint("coframe stencil node is degenerate");
    return Eigen::Matrix2d(n.frame_map.linear.topLeftCorner<2, 2>().inverse());
  };
  const Eigen::Matrix2d Cx = (coframe(x + h, y) - coframe(x - h, y)) / (2 * h);
  const Eigen::Matrix2d Cy = (coframe(x, y + h) - coframe(x, y - h)) / (2 * h);
  const Eigen::Matrix2d C = F.topLeftCorner<2, 2>().inverse();
  const double vol = C.determinant();
  const double fy1 = (Cx(0, 1) - Cy(0, 0)) / vol, fy2 = (Cx(1, 1) - Cy(1, 0)) / vol;
  out.coframe_error = std::max(std::abs(fy1 - mc.Y1), std::abs(fy2 - mc.Y2));
  return out;
}

double OrderStudy::order() const {
  if (at_rounding()) return std::numeric_limits<double>::quiet_NaN();
  return std::log2(coarse / fine);
}

bool OrderStudy::at_rounding() const { return coarse <= kRoundingFloor && fine <= kRoundingFloor; }

CompatReport verify_surface_compat(const CatalogSurface& s, const Region& region, double h, int threads) {
  const int n = region.nx * region.ny;
  struct Slot {
    bool ok = false;
    CompatPoint coarse, fine;
  };
  std::vector<Slot> slots(n);
  parallel_for(n, threads, [&](int idx) {
    const double x = region.x(idx % region.nx), y = region.y(idx / region.nx);
    try {
      slots[idx].coarse = compat_at(s, x, y, h);
      slots[idx].fine = compat_at(s, x, y, h / 2);
      slots[idx].ok = true;
    } catch (const Error&) {
      slots[idx].ok = false;
    }
  });

  CompatReport r;
  r.surface = s.name;
  r.h = h;
  auto bump = [](double& m, double v) { m = std::max(m, std::abs(v)); };
  for (const Slot& sl : slots) {
    if (!sl.ok) {
      ++r.skipped;
      continue;
    }
    ++r.points;
    r.branch_flips += sl.coarse.branch_flip || sl.fine.branch_flip;
    for (int level = 0; level < 2; ++level) {
      const CompatPoint& p = level == 0 ? sl.coarse : sl.fine;
      auto pick = [level](OrderStudy& o) -> double& { return level == 0 ? o.coarse : o.fine; };
      for (int e = 0; e < 9; ++e) {
        bump(pick(r.structure[e]), p.structure(e / 3, e % 3));
        bump(pick(r.structure_max), p.structure(e / 3, e % 3));
      }
      bump(pick(r.omega), p.omega_error);
      bump(pick(r.translation), p.translation_error);
      bump(pick(r.coframe), p.coframe_error);
      for (int c = 0; c < 4; ++c) {
        bump(pick(r.conditions[c]), p.conditions[c]);
        bump(r.condition_vs_structure,
             p.conditions[c] - kConditionScale[c] * p.structure(kConditionEntry[c][0], kConditionEntry[c][1]));
      }
      bump(r.algebraic_rows, p.structure(2, 0));
      bump(r.algebraic_rows, p.structure(2, 1));
    }
  }
  return r;
}

std::vector<ScanRow> scan_surface(const CatalogSurface& s, const Region& region, double h, int threads) {
  const int n = region.nx * region.ny;
  std::vector<ScanRow> rows(n);
  parallel_for(n, threads, [&](int idx) {
    ScanRow& row = rows[idx];
    row.x = region.x(idx % region.nx);
    row.y = region.y(idx / region.nx);
    try {
      row.type = surface_normalization(s, row.x, row.y).point_type;
      if (row.type != PointType::RegularElliptical) {
        row.reason = to_string(row.type);
        return;
      }
      row.point = compat_at(s, row.x, row.y, h);
      row.evaluated = true;
    } catch (const NotElliptical& e) {
      row.type = classify_quadratic(jet_at(s, row.x, row.y, 4));
      row.reason = e.code();
    } catch (const Error& e) {
      row.reason = e.code();
    }
  });
  return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "x,y,type,I40,I31,I22,I13,I04,Y1,Y2,r1,r2,r3,r4,r5,r6,structure_max,omega_error,coframe_error,flag\n";
  const auto old = out.precision();
  out << std::setprecision(12);
  for (const ScanRow& r : rows) {
    out << r.x << ',' << r.y << ',' << to_string(r.type);
    if (!r.evaluated) {
      for (int c = 0; c < 16; ++c) out << ',';
      out << ',' << (r.reason.empty() ? "skipped" : r.reason) << '\n';
      continue;
    }
    const CompatPoint& p = r.point;
    for (int m = 0; m < 5; ++m) out << ',' << p.I(m);
    out << ',' << p.Y1 << ',' << p.Y2;
    for (double c : p.conditions) out << ',' << c;
    out << ',' << p.structure.cwiseAbs().maxCoeff() << ',' << p.omega_error << ',' << p.coframe_error << ','
        << (p.branch_flip ? "branch-flip" : "") << '\n';
  }
  out.precision(old);
}

}  // namespace affgeo

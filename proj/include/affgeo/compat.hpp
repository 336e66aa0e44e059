#pragma once
// Invariant fields on catalog surfaces, the invariant derivatives D1, D2 by central
// differences along the frame directions, and the compatibility checks built on them.

#include "affgeo/constclass.hpp"
#include "affgeo/surfaces.hpp"

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace affgeo {

inline constexpr double kDefaultStep = 1e-3;

template <typename S>
using InvariantDerivatives = Eigen::Matrix<S, 2, 5>;  // row k-1: D^k I40 .. D^k I04

// The four scalar conditions, then the two algebraic rows E(3,1), E(3,2) of the structure
// equations.  AsPrinted keeps the displayed coefficients (I22 I04 with 5, D1 I31 with +12);
// Adjudicated uses the ones forced by the structure equations (15, -12).
template <typename S>
std::array<S, 6> compat_residuals(const InvariantTuple<S>& I, const InvariantDerivatives<S>& DI,
                                  CoefficientSet set = CoefficientSet::Adjudicated) {
  const ConstantSystem<S> c = printed_residuals(I, set);
  const S D1I40 = DI(0, 0), D1I31 = DI(0, 1), D1I22 = DI(0, 2), D1I13 = DI(0, 3), D1I04 = DI(0, 4);
  const S D2I40 = DI(1, 0), D2I31 = DI(1, 1), D2I22 = DI(1, 2), D2I13 = DI(1, 3), D2I04 = DI(1, 4);
  (void)D1I40;
  (void)D2I04;
  const bool printed = set == CoefficientSet::AsPrinted;
  const S k2 = printed ? c.K2 - S(10) * I(2) * I(4) : c.K2;
  const S d1i31 = printed ? S(12) * D1I31 : S(-12) * D1I31;
  const InvariantTuple<S> D1 = DI.row(0).transpose(), D2 = DI.row(1).transpose();
  const Matrix3<S> E = structure_residuals(I, D1, D2);
  return {
      S(36) * D2I31 - S(36) * D1I22 - S(12) * D2I13 + S(12) * D1I04 + c.K1,
      S(12) * D2I40 - S(12) * D1I31 + S(12) * D2I22 - S(12) * D1I13 + c.J1,
      S(12) * D2I31 - S(12) * D1I22 + S(12) * D2I13 - S(12) * D1I04 + k2,
      S(12) * D2I40 + d1i31 - S(36) * D2I22 + S(36) * D1I13 + c.J2,
      E(2, 0),
      E(2, 1),
  };
}

// Normalization of the graph at (x, y) from its 4-jet; with a reference frame the D3 gauge
// is the one closest to it.
NormalizationResult surface_normalization(const CatalogSurface& s, double x, double y,
                                          const Matrix3<double>* reference = nullptr);

// f is evaluated on normalizations taken in the gauge of the centre point.
using SurfaceFunction = std::function<Eigen::VectorXd(const NormalizationResult&)>;

struct FrameDerivative {
  Eigen::VectorXd D1, D2;
};

// Central differences of f along the parameter lines p +- h (e_k,x, e_k,y), whose ambient
// tangents at p are e1, e2, so that w(tangent) is the k-th unit vector.  Throws
// DegeneratePoint if a stencil node is not regular elliptical.
FrameDerivative frame_derivative(const CatalogSurface& s, double x, double y, const SurfaceFunction& f,
                                 double h = kDefaultStep);

struct CompatPoint {
  double x = 0, y = 0;
  PointType type = PointType::DegenerateElliptical;
  InvariantTuple<double> I = InvariantTuple<double>::Zero();
  double Y1 = 0, Y2 = 0;
  InvariantDerivatives<double> DI = InvariantDerivatives<double>::Zero();
  Matrix3<double> structure = Matrix3<double>::Zero();  // structure equations with differenced R fields
  std::array<double, 6> conditions{};              // compat_residuals on the differenced D I
  double omega_error = 0;        // max |F^-1 D_k F - R^k|
  double translation_error = 0;  // max |F^-1 D_k r - unit_k|
  double coframe_error = 0;      // max |Y_i(differenced coframe) - Y_i|
  bool branch_flip = false;      // the lexicographic D3 choice changes across the stencil
};

// Throws NotElliptical / DegeneratePoint at the centre or on the stencil.
CompatPoint compat_at(const CatalogSurface& s, double x, double y, double h = kDefaultStep,
                      CoefficientSet set = CoefficientSet::Adjudicated);

struct Region {
  double x0 = -0.1, x1 = 0.1, y0 = -0.1, y1 = 0.1;
  int nx = 3, ny = 3;
  double x(int i) const { return nx == 1 ? 0.5 * (x0 + x1) : x0 + (x1 - x0) * i / (nx - 1); }
  double y(int j) const { return ny == 1 ? 0.5 * (y0 + y1) : y0 + (y1 - y0) * j / (ny - 1); }
};

struct OrderStudy {
  double coarse = 0, fine = 0;  // max error at h and h/2
  double order() const;         // log2(coarse / fine); NaN when both sit at rounding level
  bool at_rounding() const;
};

inline constexpr double kRoundingFloor = 1e-11;

struct CompatReport {
  std::string surface;
  double h = kDefaultStep;
  int points = 0;
  int skipped = 0;  // degenerate or non-elliptical grid points
  std::array<OrderStudy, 9> structure;  // row-major (i, j)
  OrderStudy structure_max, omega, translation, coframe;
  std::array<OrderStudy, 4> conditions;  // adjudicated scalar conditions
  double algebraic_rows = 0;             // max |E(3,1)|, |E(3,2)| over both steps
  double condition_vs_structure = 0;  // max |condition - scale * E(i,j)| (exact identity, rounding only)
  int branch_flips = 0;
};

// Every regular grid point evaluated at h and h/2, in parallel.
CompatReport verify_surface_compat(const CatalogSurface& s, const Region& region, double h = kDefaultStep,
                                   int threads = 0);

struct ScanRow {
  double x = 0, y = 0;
  PointType type = PointType::DegenerateElliptical;
  bool evaluated = false;  // false: degenerate / not elliptical, numeric fields unset
  std::string reason;
  CompatPoint point;
};

std::vector<ScanRow> scan_surface(const CatalogSurface& s, const Region& region, double h = kDefaultStep,
                                  int threads = 0);

// x, y, type, I40..I04, Y1, Y2, r1..r6, then structure_max, omega_error, coframe_error, flag.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

}  // namespace affgeo

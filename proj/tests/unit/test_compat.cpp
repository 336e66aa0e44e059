#include "affgeo/compat.hpp"
#include "affgeo/errata.hpp"
#include "affgeo/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace affgeo;
using Q = Rational;

namespace {

InvariantTuple<Q> tq(Q a, Q b, Q c, Q d, Q e) {
  InvariantTuple<Q> I;
  I << a, b, c, d, e;
  return I;
}

}  // namespace

TEST(CompatResiduals, Examples) {
  const InvariantDerivatives<Q> zero = InvariantDerivatives<Q>::Constant(Q(0));
  for (auto set : {CoefficientSet::AsPrinted, CoefficientSet::Adjudicated}) {
    for (Q r : compat_residuals(tq(0, 0, 0, 0, 0), zero, set)) EXPECT_EQ(r, 0);
    for (Q r : compat_residuals(tq(0, 0, 2, 0, 0), zero, set)) EXPECT_EQ(r, 0);
  }
  const auto adj = compat_residuals(tq(-9, 0, -1, 0, 3), zero, CoefficientSet::Adjudicated);
  for (Q r : adj) EXPECT_EQ(r, 0);
  const auto pr = compat_residuals(tq(-9, 0, -1, 0, 3), zero, CoefficientSet::AsPrinted);
  EXPECT_EQ(pr[0], 0);
  EXPECT_EQ(pr[1], 0);
  EXPECT_EQ(pr[2], 30);  // -10 I22 I04 with I22 I04 = -3
  EXPECT_EQ(pr[3], 0);
}

// Adjudicated conditions are fixed multiples of structure-equation entries, D-terms included.
TEST(CompatResiduals, AdjudicatedMatchStructureEquationsExactly) {
  const MvPoly E12 = structural_polynomial(1, 2, true), E13 = structural_polynomial(1, 3, true);
  const MvPoly E23 = structural_polynomial(2, 3, true), E33 = structural_polynomial(3, 3, true);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-20, 20), den(1, 6);
  for (int t = 0; t < 20; ++t) {
    std::vector<Q> x(15);
    for (auto& v : x) v = Q(d(rng), den(rng));
    InvariantTuple<Q> I;
    InvariantDerivatives<Q> DI;
    for (int m = 0; m < 5; ++m) {
      I(m) = x[m];
      DI(0, m) = x[5 + m];
      DI(1, m) = x[10 + m];
    }
    const auto r = compat_residuals(I, DI, CoefficientSet::Adjudicated);
    EXPECT_EQ(r[0], Q(144) * E12.evaluate(x));
    EXPECT_EQ(r[1], Q(48) * E13.evaluate(x));
    EXPECT_EQ(r[2], Q(48) * E23.evaluate(x));
    EXPECT_EQ(r[3], Q(24) * E33.evaluate(x));
    EXPECT_EQ(r[4], 0);
    EXPECT_EQ(r[5], 0);
    const auto p = compat_residuals(I, DI, CoefficientSet::AsPrinted);
    EXPECT_EQ(p[2] - r[2], Q(-10) * I(2) * I(4));
    EXPECT_EQ(p[3] - r[3], Q(24) * DI(0, 1));
  }
}

TEST(FrameDerivative, ConstantAndCoordinate) {
  const auto& s = catalog_surface("std-cubic");
  auto constant = [](const NormalizationResult&) { return Eigen::VectorXd::Constant(1, 2.5); };
  const FrameDerivative c = frame_derivative(s, 0.02, -0.01, constant, 1e-3);
  EXPECT_EQ(c.D1(0), 0);
  EXPECT_EQ(c.D2(0), 0);
  // frame is the identity at the origin: D1 x = 1, D2 x = 0
  auto xcoord = [](const NormalizationResult& n) { return Eigen::VectorXd::Constant(1, n.frame_map.translation(0)); };
  for (double h : {1e-2, 5e-3}) {
    const FrameDerivative d = frame_derivative(s, 0, 0, xcoord, h);
    EXPECT_NEAR(d.D1(0), 1, 1e-9);
    EXPECT_NEAR(d.D2(0), 0, 1e-9);
  }
  EXPECT_THROW(frame_derivative(catalog_surface("paraboloid"), 0, 0, xcoord, 1e-3), DegeneratePoint);
}

// Derivative of an invariant converges at second order in h.
TEST(FrameDerivative, SecondOrder) {
  const auto& s = catalog_surface("std-cubic-q");
  auto inv = [](const NormalizationResult& n) { return Eigen::VectorXd(fundamental_invariants(n)); };
  const FrameDerivative a = frame_derivative(s, 0.06, 0.04, inv, 2e-2);
  const FrameDerivative b = frame_derivative(s, 0.06, 0.04, inv, 1e-2);
  const FrameDerivative c = frame_derivative(s, 0.06, 0.04, inv, 5e-3);
  const double e1 = (a.D1 - b.D1).cwiseAbs().maxCoeff(), e2 = (b.D1 - c.D1).cwiseAbs().maxCoeff();
  EXPECT_NEAR(std::log2(e1 / e2), 2.0, 0.1);
}

TEST(SurfaceCompat, StdCubicQuarticSecondOrder) {
  const CompatReport r = verify_surface_compat(catalog_surface("std-cubic-q"), Region{-0.15, 0.15, -0.15, 0.15, 3, 3}, 1e-2);
  EXPECT_EQ(r.points, 9);
  EXPECT_EQ(r.skipped, 0);
  for (int e = 0; e < 9; ++e) {
    if (r.structure[e].at_rounding()) continue;
    EXPECT_NEAR(r.structure[e].order(), 2.0, 0.3) << e;
  }
  EXPECT_TRUE(r.structure[6].at_rounding());
  EXPECT_TRUE(r.structure[7].at_rounding());
  EXPECT_LE(r.algebraic_rows, 1e-9);
  EXPECT_NEAR(r.omega.order(), 2.0, 0.3);
  EXPECT_NEAR(r.translation.order(), 2.0, 0.3);
  EXPECT_NEAR(r.coframe.order(), 2.0, 0.3);
  for (const auto& c : r.conditions) EXPECT_NEAR(c.order(), 2.0, 0.3);
  EXPECT_LE(r.condition_vs_structure, 1e-9);
}

TEST(SurfaceCompat, DegeneratePointsRejected) {
  EXPECT_THROW(compat_at(catalog_surface("paraboloid"), 0.1, 0.2), DegeneratePoint);
  const CompatReport r = verify_surface_compat(catalog_surface("tilted-quadric"), Region{}, 1e-3);
  EXPECT_EQ(r.points, 0);
  EXPECT_EQ(r.skipped, 9);
}

TEST(Scan, RowsAndCsv) {
  const auto rows = scan_surface(catalog_surface("std-cubic-q"), Region{-0.25, 0.25, -0.25, 0.25, 11, 11}, 1e-3);
  ASSERT_EQ(rows.size(), 121u);
  // boundary points included: stencils may step just outside the domain
  for (const auto& r : rows) {
    ASSERT_TRUE(r.evaluated) << r.x << "," << r.y << " " << r.reason;
    for (double c : r.point.conditions) EXPECT_TRUE(std::isfinite(c));
  }
  std::ostringstream csv;
  write_scan_csv(csv, rows);
  std::string header;
  std::getline(std::istringstream(csv.str()) >> std::ws, header);
  EXPECT_EQ(header.rfind("x,y,type,I40,I31,I22,I13,I04,Y1,Y2,r1,r2,r3,r4,r5,r6", 0), 0u);

  const auto tilted = scan_surface(catalog_surface("tilted-quadric"), Region{-1, 1, -1, 1, 4, 4}, 1e-3);
  for (const auto& r : tilted) {
    EXPECT_FALSE(r.evaluated);
    EXPECT_EQ(r.type, PointType::DegenerateElliptical);
  }
}

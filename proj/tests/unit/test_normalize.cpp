#include "affgeo/invariants.hpp"
#include "affgeo/normalize.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace affgeo;
using testsupport::random_map;
using testsupport::random_regular_jet;
using testsupport::standard_jet;

namespace {

Jet<double> quadratic_jet(double a20, double a11, double a02) { return Jet<double>(4).with(2, 0, a20).with(1, 1, a11).with(0, 2, a02); }

bool is_d3_element(const AffineMap3<double>& m, double tol) {
  if (m.translation.norm() > tol) return false;
  for (int g = 0; g < kD3Order; ++g)
    if ((m.linear - d3_map<double>(g).linear).cwiseAbs().maxCoeff() <= tol) return true;
  return false;
}

}  // namespace

TEST(KillLinear, ShearFromSlopes) {
  Jet<double> j = Jet<double>(4).with(1, 0, 2);
  Stage s = kill_linear(j);
  EXPECT_EQ(s.map.linear.row(2), Eigen::RowVector3d(2, 0, 1));
  EXPECT_EQ(s.jet.a(1, 0), 0);
  EXPECT_EQ(s.jet.a(0, 1), 0);

  EXPECT_EQ(kill_linear(Jet<double>(4).with(2, 0, 3)).map.linear, Matrix3<double>::Identity());

  Stage t = kill_linear(Jet<double>(4).with(1, 0, 1).with(0, 1, -1).with(2, 0, 1));
  EXPECT_NEAR(t.jet.a(1, 0), 0, 1e-15);
  EXPECT_NEAR(t.jet.a(0, 1), 0, 1e-15);
  EXPECT_NEAR(t.jet.a(2, 0), 1, 1e-15);
}

TEST(ClassifyQuadratic, FourTypes) {
  EXPECT_EQ(classify_quadratic(quadratic_jet(1, 0, 1)), PointType::Elliptical);
  EXPECT_EQ(classify_quadratic(quadratic_jet(-2, 1, -3)), PointType::Elliptical);
  EXPECT_EQ(classify_quadratic(quadratic_jet(1, 0, -1)), PointType::Hyperbolic);
  EXPECT_EQ(classify_quadratic(quadratic_jet(1, 0, 0)), PointType::Parabolic);
  EXPECT_EQ(classify_quadratic(quadratic_jet(1, 1, 1)), PointType::Parabolic);
  EXPECT_EQ(classify_quadratic(quadratic_jet(0, 0, 0)), PointType::DegenerateQuadratic);
}

TEST(DiagonalizeQuadratic, Examples) {
  Stage s = diagonalize_quadratic(quadratic_jet(2, 0, 2));
  EXPECT_NEAR((s.map.linear - Eigen::Vector3d(1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 1).asDiagonal().toDenseMatrix()).norm(), 0, 1e-15);
  EXPECT_EQ(s.jet.a(2, 0), 1);
  EXPECT_EQ(s.jet.a(0, 2), 1);

  EXPECT_EQ(diagonalize_quadratic(quadratic_jet(1, 0, 1)).map.linear, Matrix3<double>::Identity());

  Stage f = diagonalize_quadratic(quadratic_jet(-1, 0, -1));
  EXPECT_EQ(f.map.linear, Eigen::Vector3d(1, 1, -1).asDiagonal().toDenseMatrix());

  EXPECT_THROW(diagonalize_quadratic(quadratic_jet(1, 0, -1)), NotElliptical);
}

TEST(DiagonalizeQuadratic, GeneralHessianMatchesCongruence) {
  // b33 A' = B^T A B with the chosen B must give the identity.
  Jet<double> j = quadratic_jet(3, 1, 2).with(3, 0, 0.5);
  Stage s = diagonalize_quadratic(j);
  Eigen::Matrix2d A, B = s.map.linear.topLeftCorner<2, 2>();
  A << 3, 1, 1, 2;
  EXPECT_NEAR((B.transpose() * A * B / s.map.linear(2, 2) - Eigen::Matrix2d::Identity()).norm(), 0, 1e-14);
  // recomposed values agree with the congruence before the stage overwrites them
  Jet<double> raw = jet_apply_affine(j, s.map);
  EXPECT_NEAR(raw.a(2, 0), 1, 1e-14);
  EXPECT_NEAR(raw.a(1, 1), 0, 1e-14);
  EXPECT_NEAR(raw.a(0, 2), 1, 1e-14);
}

TEST(BalanceCubic, Examples) {
  Jet<double> base = quadratic_jet(1, 0, 1);
  Stage s = balance_cubic(base.with(3, 0, 1));
  EXPECT_DOUBLE_EQ(s.map.linear(0, 2), -0.25);
  EXPECT_DOUBLE_EQ(s.map.linear(1, 2), 0);
  EXPECT_NEAR(s.jet.a(3, 0), 0.25, 1e-15);
  EXPECT_NEAR(s.jet.a(2, 1), 0, 1e-15);
  EXPECT_NEAR(s.jet.a(1, 2), -0.25, 1e-15);
  EXPECT_NEAR(s.jet.a(0, 3), 0, 1e-15);

  EXPECT_EQ(balance_cubic(base.with(3, 0, 1).with(1, 2, -1)).map.linear, Matrix3<double>::Identity());
  EXPECT_EQ(balance_cubic(base.with(2, 1, 1).with(0, 3, 1)).map.linear, Matrix3<double>::Identity());
}

TEST(BalanceCubic, AlwaysBalancesRandomCubics) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 50; ++t) {
    Jet<double> j = quadratic_jet(1, 0, 1).with(3, 0, u(rng)).with(2, 1, u(rng)).with(1, 2, u(rng)).with(0, 3, u(rng));
    Stage s = balance_cubic(j);
    EXPECT_NEAR(s.jet.a(1, 2), -s.jet.a(3, 0), 1e-13);
    EXPECT_NEAR(s.jet.a(2, 1), s.jet.a(0, 3), 1e-13);
    EXPECT_NEAR(s.jet.a(2, 0), 1, 1e-15);
    EXPECT_NEAR(s.jet.a(1, 1), 0, 1e-15);
  }
}

TEST(RotateScaleCubic, Examples) {
  Jet<double> base = quadratic_jet(1, 0, 1);
  CubicStage c = rotate_scale_cubic(base.with(3, 0, 0.25).with(1, 2, -0.25));
  EXPECT_EQ(c.type, PointType::RegularElliptical);
  EXPECT_NEAR(c.map.linear(2, 2), 16, 1e-12);
  EXPECT_NEAR(c.map.linear(0, 1), 0, 1e-15);  // t = 0
  EXPECT_NEAR(c.jet.a(3, 0), 1, 1e-12);

  CubicStage id = rotate_scale_cubic(base.with(3, 0, 1).with(1, 2, -1));
  EXPECT_NEAR((id.map.linear - Matrix3<double>::Identity()).norm(), 0, 1e-15);

  CubicStage d = rotate_scale_cubic(base);
  EXPECT_EQ(d.type, PointType::DegenerateElliptical);
  EXPECT_EQ(d.map.linear, Matrix3<double>::Identity());
}

TEST(RotateScaleCubic, ReachesCrossSectionFromAnyBalancedCubic) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 50; ++t) {
    const double p = u(rng), q = u(rng);
    CubicStage c = rotate_scale_cubic(quadratic_jet(1, 0, 1).with(3, 0, p).with(1, 2, -p).with(2, 1, q).with(0, 3, q));
    ASSERT_EQ(c.type, PointType::RegularElliptical);
    EXPECT_NEAR(c.jet.a(3, 0), 1, 1e-12);
    EXPECT_NEAR(c.jet.a(2, 1), 0, 1e-12);
    EXPECT_NEAR(c.jet.a(1, 2), -1, 1e-12);
    EXPECT_NEAR(c.jet.a(0, 3), 0, 1e-12);
    EXPECT_NEAR(c.jet.a(2, 0), 1, 1e-12);
    EXPECT_NEAR(c.jet.a(1, 1), 0, 1e-12);
    EXPECT_NEAR(c.jet.a(0, 2), 1, 1e-12);
  }
}

TEST(NormalizeFull, StandardCubicIsOnCrossSection) {
  NormalizationResult r = normalize_full(standard_jet(InvariantTuple<double>::Zero()));
  EXPECT_EQ(r.point_type, PointType::RegularElliptical);
  EXPECT_LE((r.frame_map.linear - Matrix3<double>::Identity()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE(r.frame_map.translation.norm(), 1e-12);
  EXPECT_LE(fundamental_invariants(r).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(NormalizeFull, UnitSphereIsDegenerate) {
  // 1 - sqrt(1 - r^2) = r^2/2 + r^4/8 + ...
  Jet<double> j = quadratic_jet(1, 0, 1).with(4, 0, 3).with(2, 2, 1).with(0, 4, 3);
  EXPECT_EQ(normalize_full(j).point_type, PointType::DegenerateElliptical);
}

TEST(NormalizeFull, QuarticIsFreeOnCrossSection) {
  InvariantTuple<double> I;
  I << -1.5, 0, 0, 0, 0;
  NormalizationResult r = normalize_full(standard_jet(I));
  EXPECT_LE((r.frame_map.linear - Matrix3<double>::Identity()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((fundamental_invariants(r) - I).cwiseAbs().maxCoeff(), 1e-12);

  // with a positive x^4 coefficient another D3 image is lexicographically smaller
  I(0) = 2;
  r = normalize_full(standard_jet(I));
  EXPECT_LE((fundamental_invariants(r) - d3_canonicalize(I).tuple).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_TRUE(is_d3_element(r.frame_map, 1e-12));
}

TEST(NormalizeFull, FrameMapCarriesOriginalToStandard) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    Jet<double> j = random_regular_jet(rng);
    NormalizationResult r = normalize_full(j);
    ASSERT_EQ(r.point_type, PointType::RegularElliptical);
    Jet<double> back = jet_apply_affine(j, r.frame_map);
    EXPECT_LE(max_coeff_difference(back, r.standard_jet) / std::max(1.0, max_abs_coeff(r.standard_jet)), 1e-9);
    EXPECT_LE((r.frame_map.translation - j.base()).norm(), 1e-12);
  }
}

TEST(NormalizeFull, StabilizerFixesStandardCubicExactly) {
  using Q3 = ExactSqrt3;
  Jet<Q3> std3(3);
  std3 = std3.with(2, 0, Q3(1)).with(0, 2, Q3(1)).with(3, 0, Q3(1)).with(1, 2, Q3(-1));
  for (int g = 0; g < kD3Order; ++g) EXPECT_EQ(jet_apply_affine(std3, d3_map<Q3>(g)), std3) << d3_name(g);
}

TEST(NormalizeFull, Idempotent) {
  std::mt19937_64 rng(32);
  std::normal_distribution<double> n;
  for (int t = 0; t < 50; ++t) {
    InvariantTuple<double> I;
    for (int k = 0; k < 5; ++k) I(k) = n(rng);
    EXPECT_TRUE(is_d3_element(normalize_full(standard_jet(I)).frame_map, 1e-10));
  }
}

TEST(NormalizeFull, Equivariance) {
  std::mt19937_64 rng(33);
  int done = 0;
  while (done < 100) {
    Jet<double> j = random_regular_jet(rng);
    AffineMap3<double> T = random_map(rng);
    if (std::abs(graph_transversality(j, T)) < 0.3) continue;
    const Jet<double> moved = jet_apply_affine(j, T);
    const InvariantTuple<double> a = fundamental_invariants(normalize_full(j));
    const InvariantTuple<double> b = fundamental_invariants(normalize_full(moved));
    EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-8) << a << " vs " << b;
    ++done;
  }
}

TEST(MovingFrame, IdentityAtStandardPoint) {
  BiPoly<double> u(4);
  u(2, 0) = 0.5; u(0, 2) = 0.5; u(3, 0) = 1.0 / 6; u(1, 2) = -0.5;
  MovingFrame f = moving_frame_at(u, 0, 0);
  EXPECT_LE((f.e1 - Eigen::Vector3d::UnitX()).norm(), 1e-12);
  EXPECT_LE((f.e2 - Eigen::Vector3d::UnitY()).norm(), 1e-12);
  EXPECT_LE((f.e3 - Eigen::Vector3d::UnitZ()).norm(), 1e-12);
  EXPECT_LE(f.r.norm(), 1e-12);

  const double h = 0.1;
  MovingFrame g = moving_frame_at(u, h, 0);
  EXPECT_LE(tangency_defect(g, jet_of_polynomial(u, h, 0.0, 4)), 1e-9);
  EXPECT_NEAR(g.r(2), u.evaluate(h, 0), 1e-15);

  BiPoly<double> para(2);
  para(2, 0) = 0.5; para(0, 2) = 0.5;
  EXPECT_THROW(moving_frame_at(para, 0.2, 0.1), DegeneratePoint);
  BiPoly<double> saddle(2);
  saddle(2, 0) = 0.5; saddle(0, 2) = -0.5;
  EXPECT_THROW(moving_frame_at(saddle, 0, 0), NotElliptical);
}

TEST(MovingFrame, EquivariantUpToD3) {
  // Same surface seen in coordinates old = T(new): the frame transforms by T^-1.
  std::mt19937_64 rng(34);
  int done = 0;
  while (done < 30) {
    Jet<double> j = random_regular_jet(rng);
    AffineMap3<double> T = random_map(rng);
    if (std::abs(graph_transversality(j, T)) < 0.3) continue;
    const AffineMap3<double> F = normalize_full(j).frame_map;
    const AffineMap3<double> G = normalize_full(jet_apply_affine(j, T)).frame_map;
    const AffineMap3<double> TG = T * G;
    double best = 1e300;
    for (int g = 0; g < kD3Order; ++g) {
      const AffineMap3<double> Fg = F * d3_map<double>(g);
      best = std::min(best, (Fg.linear - TG.linear).cwiseAbs().maxCoeff() + (Fg.translation - TG.translation).cwiseAbs().maxCoeff());
    }
    EXPECT_LE(best / std::max(1.0, F.linear.cwiseAbs().maxCoeff()), 1e-8);
    ++done;
  }
}

TEST(D3Canonicalize, Examples) {
  InvariantTuple<double> I;
  I << 1, 2, 3, 4, 5;
  InvariantTuple<double> tauI;
  tauI << 1, -2, 3, -4, 5;
  EXPECT_LE((d3_apply(I, 3) - tauI).norm(), 1e-15);
  EXPECT_TRUE(lex_less(tauI, I));
  // The choice is the lexicographic minimum of all six images.
  const D3Choice c = d3_canonicalize(I);
  for (int g = 0; g < kD3Order; ++g) EXPECT_FALSE(lex_less(d3_apply(I, g), c.tuple)) << g;
  EXPECT_LE((d3_apply(I, c.index) - c.tuple).norm(), 1e-15);

  const D3Choice z = d3_canonicalize(InvariantTuple<double>::Zero());
  EXPECT_EQ(z.index, 0);
  EXPECT_EQ(z.tuple, InvariantTuple<double>::Zero());
}

TEST(D3Canonicalize, ConstantOnOrbits) {
  std::mt19937_64 rng(35);
  std::normal_distribution<double> n;
  for (int t = 0; t < 100; ++t) {
    InvariantTuple<double> I;
    for (int k = 0; k < 5; ++k) I(k) = n(rng);
    const InvariantTuple<double> c = d3_canonicalize(I).tuple;
    for (int g = 0; g < kD3Order; ++g) EXPECT_LE((d3_canonicalize(d3_apply(I, g)).tuple - c).cwiseAbs().maxCoeff(), 1e-12);
  }
}

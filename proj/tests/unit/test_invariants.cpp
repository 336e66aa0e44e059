#include "affgeo/invariants.hpp"
#include "affgeo/prolong.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace affgeo;
using Q = Rational;
using testsupport::standard_jet;

namespace {

InvariantTuple<double> tuple(double a, double b, double c, double d, double e) {
  InvariantTuple<double> I;
  I << a, b, c, d, e;
  return I;
}

InvariantTuple<Q> random_rational_tuple(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-30, 30), den(1, 9);
  InvariantTuple<Q> I;
  for (int k = 0; k < 5; ++k) I(k) = Q(d(rng), den(rng));
  return I;
}

}  // namespace

TEST(FundamentalInvariants, Examples) {
  EXPECT_EQ(fundamental_invariants(normalize_full(standard_jet(tuple(0, 0, 0, 0, 0)))), tuple(0, 0, 0, 0, 0));
  const InvariantTuple<double> e = tuple(-0.5, 0, 0, 0, 0);
  EXPECT_LE((fundamental_invariants(normalize_full(standard_jet(e))) - e).cwiseAbs().maxCoeff(), 1e-12);
  // (x^4 + y^4)/24 gives a_40 = a_04 = 1
  const InvariantTuple<double> f = tuple(1, 0, 0, 0, 1);
  EXPECT_LE((fundamental_invariants(normalize_full(standard_jet(f))) - d3_canonicalize(f).tuple).cwiseAbs().maxCoeff(), 1e-12);
  Jet<double> degenerate = Jet<double>(4).with(2, 0, 1).with(0, 2, 1);
  EXPECT_THROW(fundamental_invariants(normalize_full(degenerate)), DegeneratePoint);
}

TEST(MaurerCartan, ZeroTuple) {
  const auto m = maurer_cartan(InvariantTuple<double>(InvariantTuple<double>::Zero()));
  Matrix3<double> R1, R2;
  R1 << -0.5, 0, 0.5, 0, 0.5, 0, 1, 0, 0;
  R2 << 0, 0.5, 0, 0.5, 0, 0.5, 0, 1, 0;
  EXPECT_EQ(m.R1, R1);
  EXPECT_EQ(m.R2, R2);
  EXPECT_EQ(m.Y1, 0);
  EXPECT_EQ(m.Y2, 0);
}

TEST(MaurerCartan, RowOneSolution) {
  InvariantTuple<Q> I;
  I << -9, 0, -1, 0, 3;
  const auto m = maurer_cartan(I);
  Matrix3<Q> R1, R2;
  R1 << 1, 0, 3, 0, 2, 0, 1, 0, 3;
  R2 << 0, 1, 0, 0, 0, 0, 0, 1, 0;
  EXPECT_EQ(m.R1, R1);
  EXPECT_EQ(m.R2, R2);
  EXPECT_EQ(m.Y1, Q(0));
  EXPECT_EQ(m.Y2, Q(-2));
}

TEST(MaurerCartan, ForcedRowsAndYIdentitiesExact) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const InvariantTuple<Q> I = random_rational_tuple(rng);
    const auto m = maurer_cartan(I);
    EXPECT_EQ(m.R1(2, 0), Q(1));
    EXPECT_EQ(m.R1(2, 1), Q(0));
    EXPECT_EQ(m.R2(2, 0), Q(0));
    EXPECT_EQ(m.R2(2, 1), Q(1));
    EXPECT_EQ(m.Y1, m.R2(0, 0) - m.R1(0, 1));
    EXPECT_EQ(m.Y2, m.R2(1, 0) - m.R1(1, 1));
    EXPECT_EQ(m.Y1, Q(2) * I(3) / Q(3));
    EXPECT_EQ(m.Y2, I(0) / Q(4) - I(2) / Q(2) - I(4) / Q(12));
  }
}

TEST(MaurerCartan, LinearSystemVanishes) {
  for (double r : verify_mc_linear_system(InvariantTuple<double>(InvariantTuple<double>::Zero()))) EXPECT_EQ(r, 0);
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int t = 0; t < 100; ++t) {
    const InvariantTuple<double> I = tuple(u(rng), u(rng), u(rng), u(rng), u(rng));
    for (double r : verify_mc_linear_system(I)) EXPECT_LE(std::abs(r), 1e-12);
  }
  for (int t = 0; t < 20; ++t)
    for (const Q& r : verify_mc_linear_system(random_rational_tuple(rng))) EXPECT_EQ(r, Q(0));
}

TEST(MaurerCartan, CorruptionShowsUpLinearly) {
  const InvariantTuple<double> I = InvariantTuple<double>::Zero();
  auto m = maurer_cartan(I);
  m.R1(0, 0) += 1;
  const auto r = verify_mc_linear_system(m, I);
  EXPECT_DOUBLE_EQ(r[10], -3);  // -3 R1_11 - 3 R1_13 + R1_33 - iota(a40)
}

// Solving the recurrence equations from scratch reproduces the hard-coded matrices.
TEST(MaurerCartan, RecurrenceSystemRederivesMatrices) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    const InvariantTuple<Q> I = random_rational_tuple(rng);
    const auto solved = solve_recurrence_system(I);
    const auto coded = maurer_cartan(I);
    EXPECT_EQ(solved.R1, coded.R1);
    EXPECT_EQ(solved.R2, coded.R2);
    EXPECT_EQ(solved.Y1, coded.Y1);
    EXPECT_EQ(solved.Y2, coded.Y2);
  }
}

TEST(RecoverI13I04, Examples) {
  EXPECT_EQ(recover_I13_I04(0.0, 0.0, 0.0, 0.0), std::make_pair(0.0, 0.0));
  EXPECT_EQ(recover_I13_I04(0.0, -2.0, -9.0, -1.0), std::make_pair(0.0, 3.0));
  EXPECT_EQ(recover_I13_I04(2.0, 0.0, 0.0, 0.0).first, 3.0);
  std::mt19937_64 rng(54);
  for (int t = 0; t < 20; ++t) {
    const InvariantTuple<Q> I = random_rational_tuple(rng);
    const auto m = maurer_cartan(I);
    const auto [i13, i04] = recover_I13_I04(m.Y1, m.Y2, I(0), I(2));
    EXPECT_EQ(i13, I(3));
    EXPECT_EQ(i04, I(4));
  }
}

TEST(FundamentalForms, Coefficients) {
  const FundamentalForms z = fundamental_forms(tuple(0, 0, 0, 0, 0));
  EXPECT_EQ(z.phi4, (Eigen::Matrix<double, 5, 1>::Zero()));
  EXPECT_EQ(z.phi2, Eigen::Vector3d(1, 0, 1));
  EXPECT_EQ(z.phi3, Eigen::Vector4d(1, 0, -3, 0));
  Eigen::Matrix<double, 5, 1> b;
  b << 1, 4, 6, 4, 1;
  EXPECT_EQ(fundamental_forms(tuple(1, 1, 1, 1, 1)).phi4, b);
}

TEST(RecoverFromForms, CanonicalFormsGiveIdentity) {
  const RecoveredCoframe r = recover_from_forms(fundamental_forms(tuple(0, 0, 0, 0, 0)));
  EXPECT_LE((r.basis - Eigen::Matrix2d::Identity()).norm(), 1e-14);
  EXPECT_LE(r.I.norm(), 1e-14);
}

TEST(RecoverFromForms, ArbitraryCoframe) {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 100; ++t) {
    const InvariantTuple<double> I = tuple(u(rng), u(rng), u(rng), u(rng), u(rng));
    Eigen::Matrix2d M;
    do M << u(rng), u(rng), u(rng), u(rng);
    while (std::abs(M.determinant()) < 0.2);
    const FundamentalForms f = substitute_forms(fundamental_forms(I), M);  // forms in v, w = M v
    const RecoveredCoframe r = recover_from_forms(f);
    EXPECT_LE((r.I - d3_canonicalize(I).tuple).cwiseAbs().maxCoeff(), 1e-9);
    // v = basis * w': the recovered canonical coframe reproduces the canonical forms
    const FundamentalForms back = substitute_forms(f, r.basis);
    EXPECT_LE((back.phi2 - Eigen::Vector3d(1, 0, 1)).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LE((back.phi3 - Eigen::Vector4d(1, 0, -3, 0)).cwiseAbs().maxCoeff(), 1e-9);
    // and it differs from the true one (M^-1) by a D3 element
    double best = 1e300;
    for (int g = 0; g < kD3Order; ++g) best = std::min(best, (M.inverse() * d3_linear<double>(g) - r.basis).cwiseAbs().maxCoeff());
    EXPECT_LE(best, 1e-9);
  }
}

TEST(RecoverFromForms, Errors) {
  FundamentalForms f = fundamental_forms(tuple(0, 0, 0, 0, 0));
  f.phi2 << 1, 0, -1;
  EXPECT_THROW(recover_from_forms(f), NotPositiveDefinite);
  f.phi2 << 1, 0, 1;
  f.phi3 << 1, 0, 1, 0;  // (w1^2 + w2^2) w1: no harmonic-3 part
  EXPECT_THROW(recover_from_forms(f), CubicDegenerate);
}

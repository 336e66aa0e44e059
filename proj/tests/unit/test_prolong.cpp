#include "affgeo/prolong.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace affgeo;
using C = JetCoord;

namespace {

JetPoint<double> random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  JetPoint<double> p;
  for (int k = 0; k < kJetDim; ++k) p(k) = u(rng);
  return p;
}


}  // namespace

TEST(JetCoords, IndexRoundTrip) {
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) EXPECT_EQ(jet_indices(jet_coord(i, n - i)), std::make_pair(i, n - i));
  EXPECT_EQ(to_string(jet_coord(2, 1)), "a21");
  EXPECT_THROW(jet_coord(4, 0), UnknownCoordinate);
  EXPECT_THROW(jet_indices(C::x), UnknownCoordinate);
}

TEST(ProlongedField, DisplayedExamples) {
  std::mt19937_64 rng(61);
  JetPoint<double> p = random_point(rng);
  JetPoint<double> f = prolonged_field(Generator::X31, p);
  JetPoint<double> e = JetPoint<double>::Zero();
  e(static_cast<int>(C::a00)) = p(0);
  e(static_cast<int>(C::a10)) = 1;
  EXPECT_EQ(f, e);

  JetPoint<double> q = JetPoint<double>::Zero();
  q(static_cast<int>(C::x)) = 0.7;
  q(static_cast<int>(C::a10)) = 1;
  f = prolonged_field(Generator::X11, q);
  e.setZero();
  e(static_cast<int>(C::x)) = 0.7;
  e(static_cast<int>(C::a10)) = -1;
  EXPECT_EQ(f, e);

  f = prolonged_field(Generator::X33, cross_section_point<double>());
  e.setZero();
  e(static_cast<int>(C::a20)) = 1;
  e(static_cast<int>(C::a02)) = 1;
  e(static_cast<int>(C::a30)) = 1;
  e(static_cast<int>(C::a12)) = -1;
  EXPECT_EQ(f, e);
}

// Against d/de of the recomposed jet under exp(eA): agrees everywhere except the printed
// sign of the a03 term of X13.
TEST(ProlongedField, MatchesInfinitesimalAction) {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 20; ++t) {
    const JetPoint<double> p = random_point(rng);
    for (int g = 0; g < kGenerators; ++g) {
      const Generator G = static_cast<Generator>(g);
      const JetPoint<double> oracle = prolonged_field_from_action(G, p);
      EXPECT_LE((prolonged_field(G, p, Transcription::Corrected) - oracle).cwiseAbs().maxCoeff(), 1e-12) << to_string(G);
      const JetPoint<double> printed = prolonged_field(G, p, Transcription::AsPrinted);
      for (int k = 0; k < kJetDim; ++k) {
        if (G == Generator::X13 && k == static_cast<int>(C::a03)) {
          EXPECT_NEAR(printed(k), -oracle(k), 1e-12);
        } else {
          EXPECT_NEAR(printed(k), oracle(k), 1e-12) << to_string(G) << " " << to_string(static_cast<C>(k));
        }
      }
    }
  }
}

TEST(ProlongationBracket, CorrectedTableIsAHomomorphism) {
  for (const auto& c : verify_prolongation_bracket(Transcription::Corrected, 0))
    EXPECT_LE(c.residual, 1e-6) << to_string(c.a) << "," << to_string(c.b);
}

TEST(ProlongationBracket, PrintedTableFailsOnlyWhereX13Enters) {
  bool any = false;
  for (const auto& c : verify_prolongation_bracket(Transcription::AsPrinted, 0)) {
    const Eigen::Matrix4d A = generator_matrix(c.a), B = generator_matrix(c.b);
    const Eigen::Matrix4d bracket = B * A - A * B;
    const bool involves = c.a == Generator::X13 || c.b == Generator::X13 || bracket(0, 2) != 0;
    if (!involves) EXPECT_LE(c.residual, 1e-6) << to_string(c.a) << "," << to_string(c.b);
    if (c.residual > 1e-3) {
      any = true;
      EXPECT_TRUE(involves);
    }
  }
  EXPECT_TRUE(any);
}

TEST(ProlongationBracket, NamedPairs) {
  auto residual = [](Generator a, Generator b) {
    for (const auto& c : verify_prolongation_bracket(Transcription::Corrected, 3))
      if ((c.a == a && c.b == b) || (c.a == b && c.b == a)) return c.residual;
    return -1.0;
  };
  EXPECT_LE(residual(Generator::X1, Generator::X11), 1e-6);
  EXPECT_LE(residual(Generator::X1, Generator::X2), 1e-12);
  EXPECT_LE(residual(Generator::X13, Generator::X31), 1e-6);
}

TEST(Recurrence, LowOrderEquationsAtZero) {
  const InvariantTuple<double> I = InvariantTuple<double>::Zero();
  for (int k = 0; k < 10; ++k) {
    const auto DkF = invariantized_derivatives(kFiberCoords[k], I);
    const auto [r1, r2] = recurrence_residual(kFiberCoords[k], I, DkF);
    EXPECT_EQ(r1, 0) << to_string(kFiberCoords[k]);
    EXPECT_EQ(r2, 0) << to_string(kFiberCoords[k]);
  }
  EXPECT_THROW(recurrence_residual(C::x, I, {0.0, 0.0}), UnknownCoordinate);
}

// Every printed proof equation is one of the recurrence residuals, as a linear function
// of the unknowns: check by evaluating both on arbitrary (non-solution) matrices.
TEST(Recurrence, ReproducesEachPrintedEquation) {
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> u(-2, 2);
  std::vector<MaurerCartan<double>> trials(3);
  std::vector<InvariantTuple<double>> tuples(3);
  for (int t = 0; t < 3; ++t) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        trials[t].R1(i, j) = u(rng);
        trials[t].R2(i, j) = u(rng);
      }
    for (int k = 0; k < 5; ++k) tuples[t](k) = u(rng);
  }
  for (int e = 0; e < 18; ++e) {
    bool found = false;
    for (int f = 0; f < 10 && !found; ++f)
      for (int k = 0; k < 2 && !found; ++k) {
        bool all = true;
        for (int t = 0; t < 3; ++t) {
          const auto printed = verify_mc_linear_system(trials[t], tuples[t])[e];
          const auto r = recurrence_residual(kFiberCoords[f], trials[t], invariantized_derivatives(kFiberCoords[f], tuples[t]));
          all = all && std::abs((k == 0 ? r.first : r.second) - printed) <= 1e-12;
        }
        found = all;
      }
    EXPECT_TRUE(found) << "equation " << e;
  }
}

TEST(Recurrence, VanishesAtRandomTuples) {
  std::mt19937_64 rng(64);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int t = 0; t < 100; ++t) {
    InvariantTuple<double> I;
    for (int k = 0; k < 5; ++k) I(k) = u(rng);
    for (JetCoord F : kFiberCoords) {
      const auto [r1, r2] = recurrence_residual(F, I, invariantized_derivatives(F, I));
      EXPECT_LE(std::abs(r1), 1e-12);
      EXPECT_LE(std::abs(r2), 1e-12);
    }
  }
}

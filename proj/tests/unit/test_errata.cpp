#include "affgeo/errata.hpp"
#include "affgeo/printed.hpp"

#include <gtest/gtest.h>

using namespace affgeo;
using Q = Rational;

namespace {

const ErrataReport& report() {
  static const ErrataReport r = errata_adjudicate();
  return r;
}

bool has_difference(const ErratumEntry& e, const std::string& monomial, Q printed, Q derived) {
  for (const auto& d : e.differences)
    if (d.monomial == monomial && d.printed == printed && d.derived == derived) return true;
  return false;
}

}  // namespace

// Relations between the structure-equation entries that the adjudication relies on.
TEST(StructuralPolynomial, EntryRelations) {
  for (bool with_d : {false, true}) {
    EXPECT_TRUE(structural_polynomial(3, 1, with_d).is_zero());
    EXPECT_TRUE(structural_polynomial(3, 2, with_d).is_zero());
    EXPECT_EQ(structural_polynomial(1, 1, with_d), structural_polynomial(3, 3, with_d) * Q(1, 2));
    EXPECT_EQ(structural_polynomial(2, 2, with_d), structural_polynomial(3, 3, with_d) * Q(1, 2));
    EXPECT_EQ(structural_polynomial(2, 1, with_d), structural_polynomial(1, 2, with_d) * Q(-1));
  }
  EXPECT_THROW(structural_polynomial(0, 1, false), std::out_of_range);
}

TEST(Errata, CompatibilityConditions) {
  EXPECT_EQ(report().at("compat condition 1").verdict, "confirmed");
  EXPECT_EQ(report().at("compat condition 2").verdict, "confirmed");
  const auto& c3 = report().at("compat condition 3");
  EXPECT_EQ(c3.verdict, "typo");
  ASSERT_EQ(c3.differences.size(), 1u);
  EXPECT_TRUE(has_difference(c3, "I22*I04", 5, 15));
  const auto& c4 = report().at("compat condition 4");
  EXPECT_EQ(c4.verdict, "typo");
  ASSERT_EQ(c4.differences.size(), 1u);
  EXPECT_TRUE(has_difference(c4, "D1I31", 12, -12));
}

TEST(Errata, ConstantSystem) {
  for (const char* loc : {"constant system J1", "constant system J2", "constant system K1", "constant system K2"})
    EXPECT_EQ(report().at(loc).verdict, "confirmed") << loc;
  for (const char* loc : {"case analysis H11", "case analysis H12", "case analysis H21", "case analysis H22", "case analysis K21 expansion",
                          "case analysis reduced K21", "case analysis I22 from reduced K21", "case analysis G11", "case analysis G12",
                          "case analysis G21", "case analysis G22", "case analysis L factorization", "case analysis M inside L",
                          "case analysis case 1 ii K1", "case analysis case 2 i K1", "case analysis case 2 i K2",
                          "case analysis case 2 ii a K1", "case analysis case 2 ii a K2"})
    EXPECT_EQ(report().at(loc).verdict, "confirmed") << loc;
  // an overall factor: the zero set is unaffected
  EXPECT_EQ(report().at("case analysis K3 expansion").verdict, "typo");
  EXPECT_NE(report().at("case analysis K3 expansion").note.find("1/8"), std::string::npos);
  EXPECT_EQ(report().at("case analysis case 2 ii a K3").verdict, "typo");
}

TEST(Errata, TwoVariantsOfM) {
  const auto& m = report().at("case analysis M");
  EXPECT_EQ(m.verdict, "typo");
  ASSERT_EQ(m.differences.size(), 1u);
  EXPECT_TRUE(has_difference(m, "I40*I22^2", -2, -21));
  EXPECT_NE(report().at("case analysis M inside L").note.find("200 agree"), std::string::npos);
}

// Criterion 7: the verdicts are forced by exact identities.
TEST(Errata, ForcedVerdicts) {
  const auto& l = report().at("forced: L = 384 H12 M");
  EXPECT_EQ(l.verdict, "confirmed");
  EXPECT_EQ(l.derived, "L - 384*H12*M = 0");
  const auto& k2 = report().at("forced: adjudicated K2 on family Row1");
  EXPECT_EQ(k2.verdict, "confirmed");
  EXPECT_NE(k2.derived.find("= 0"), std::string::npos);
}

TEST(Errata, Families) {
  EXPECT_EQ(report().at("family Row1").verdict, "confirmed");
  const auto& r2 = report().at("family Row2 I22");
  EXPECT_EQ(r2.verdict, "typo");
  EXPECT_EQ(r2.derived, "-k^2 + 2*k + 2");
  EXPECT_TRUE(has_difference(r2, "k", -2, 2));
  EXPECT_EQ(report().at("family A2 I22").verdict, "typo");
  EXPECT_EQ(report().at("family Row3 I31").verdict, "typo");
  EXPECT_EQ(report().at("family Row4").verdict, "confirmed");
  EXPECT_EQ(report().at("family Row5").verdict, "confirmed");
  const auto& r6 = report().at("family Row6 radical");
  EXPECT_EQ(r6.verdict, "typo");
  EXPECT_EQ(r6.note.find("also fails"), std::string::npos);
}

TEST(Errata, GroupActionAndTransformationRules) {
  EXPECT_EQ(report().at("d3 sigma").verdict, "confirmed");
  EXPECT_EQ(report().at("prolongation X13 a03 term").verdict, "typo");
  const auto& lin = report().at("jet first-order rule");
  EXPECT_EQ(lin.verdict, "typo");
  EXPECT_EQ(lin.note.find("also fails"), std::string::npos);
}

TEST(Errata, Deterministic) {
  const ErrataReport again = errata_adjudicate();
  ASSERT_EQ(again.entries.size(), report().entries.size());
  for (size_t i = 0; i < again.entries.size(); ++i) {
    EXPECT_EQ(again.entries[i].location, report().entries[i].location);
    EXPECT_EQ(again.entries[i].derived, report().entries[i].derived);
    EXPECT_EQ(again.entries[i].verdict, report().entries[i].verdict);
  }
  EXPECT_THROW(report().at("no such place"), std::out_of_range);
}

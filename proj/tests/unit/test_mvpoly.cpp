#include "affgeo/errors.hpp"
#include "affgeo/mvpoly.hpp"

#include <gtest/gtest.h>

using namespace affgeo;
using Q = Rational;

namespace {
const std::vector<std::string> xyz{"x", "y", "z"};
}

TEST(Expression, PrecedenceAndUnaryMinus) {
  const Expression e = Expression::parse("-2*x^2 + 3*(y - z)/4 - -1", xyz);
  EXPECT_EQ(e.evaluate({Q(3), Q(1), Q(5)}), Q(-18) + Q(-3) + Q(1));
  EXPECT_EQ(Expression::parse("-x^2", xyz).evaluate({Q(2), 0, 0}), Q(-4));
  EXPECT_EQ(Expression::parse("(1/9)*x", xyz).evaluate({Q(3), 0, 0}), Q(1, 3));
  EXPECT_EQ(Expression::parse("x^0", xyz).evaluate({Q(0), 0, 0}), Q(1));
}

TEST(Expression, Errors) {
  EXPECT_THROW(Expression::parse("x + w", xyz), ParseError);
  EXPECT_THROW(Expression::parse("x +", xyz), ParseError);
  EXPECT_THROW(Expression::parse("(x", xyz), ParseError);
  EXPECT_THROW(Expression::parse("x^y", xyz), ParseError);
  EXPECT_THROW(Expression::parse("x/(y - 1)", xyz).evaluate({Q(1), Q(1), Q(0)}), std::domain_error);
}

TEST(MvPoly, ArithmeticAndCoefficients) {
  const MvPoly x = MvPoly::variable(3, 0), y = MvPoly::variable(3, 1);
  const MvPoly p = (x + y) * (x - y) + MvPoly::constant(3, Q(7));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coeff({2, 0, 0}), Q(1));
  EXPECT_EQ(p.coeff({0, 2, 0}), Q(-1));
  EXPECT_EQ(p.coeff({1, 1, 0}), Q(0));
  EXPECT_EQ(p.coefficient_of(1, 2), MvPoly::constant(3, Q(-1)));
  EXPECT_EQ(p.coefficient_of(1, 0), x * x + MvPoly::constant(3, Q(7)));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.to_string(xyz), "x^2 - y^2 + 7");
}

TEST(Interpolate, RecoversPolynomialExactly) {
  const Expression e = Expression::parse("3*x^2*y - x*z/7 + 5*z^3 - 2", xyz);
  const MvPoly p = interpolate([&](const std::vector<Q>& v) { return e.evaluate(v); }, 3, 3);
  EXPECT_EQ(p.coeff({2, 1, 0}), Q(3));
  EXPECT_EQ(p.coeff({1, 0, 1}), Q(-1, 7));
  EXPECT_EQ(p.coeff({0, 0, 3}), Q(5));
  EXPECT_EQ(p.coeff({0, 0, 0}), Q(-2));
  EXPECT_EQ(p.terms().size(), 4u);
  // round trip through the printer and parser
  const Expression back = Expression::parse(p.to_string(xyz), xyz);
  EXPECT_EQ(interpolate([&](const std::vector<Q>& v) { return back.evaluate(v); }, 3, 3), p);
}

TEST(Interpolate, DegreeTooLowIsDetected) {
  const Expression e = Expression::parse("x^3 + y", xyz);
  EXPECT_THROW(interpolate([&](const std::vector<Q>& v) { return e.evaluate(v); }, 3, 2), std::runtime_error);
}

TEST(Interpolate, ShiftedLatticeAvoidsPoles) {
  // (x^2 - 1)/(x - 1) is x + 1 away from x = 1, which the unshifted lattice hits
  const Expression e = Expression::parse("(x^2 - 1)/(x - 1) + y", xyz);
  auto f = [&](const std::vector<Q>& v) { return e.evaluate(v); };
  EXPECT_THROW(interpolate(f, 3, 2), std::domain_error);
  const MvPoly p = interpolate(f, 3, 2, 8, {Q(1, 3), Q(0), Q(0)});
  EXPECT_EQ(p.to_string(xyz), "x + y + 1");
}

TEST(Interpolate, LatticeSize) {
  EXPECT_EQ(simplex_lattice(5, 2).size(), 21u);
  EXPECT_EQ(simplex_lattice(15, 2).size(), 136u);
  EXPECT_EQ(simplex_lattice(4, 4).size(), 70u);
}

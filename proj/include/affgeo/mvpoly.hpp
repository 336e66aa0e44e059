#pragma once
// Sparse multivariate polynomials over Q, a small expression parser for transcribed
// formulas, and exact interpolation of black-box polynomial functions.

#include "affgeo/scalar.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace affgeo {

using Exponent = std::vector<int>;

// Higher total degree first, then reverse lex: the order formulas are usually written in.
struct ExponentOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MvPoly {
 public:
  explicit MvPoly(int nvars = 0) : n_(nvars) {}
  static MvPoly constant(int nvars, const Rational& c);
  static MvPoly variable(int nvars, int index);

  int nvars() const { return n_; }
  const std::map<Exponent, Rational, ExponentOrder>& terms() const { return terms_; }
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  Rational evaluate(const std::vector<Rational>& x) const;
  double evaluate(const std::vector<double>& x) const;

  // Coefficient of var^power, as a polynomial in the same variables (var no longer occurs).
  MvPoly coefficient_of(int var, int power) const;

  MvPoly& operator+=(const MvPoly& o);
  MvPoly& operator-=(const MvPoly& o);
  MvPoly& operator*=(const Rational& c);
  friend MvPoly operator+(MvPoly a, const MvPoly& b) { return a += b; }
  friend MvPoly operator-(MvPoly a, const MvPoly& b) { return a -= b; }
  friend MvPoly operator*(MvPoly a, const Rational& c) { return a *= c; }
  friend MvPoly operator*(const Rational& c, MvPoly a) { return a *= c; }
  friend MvPoly operator*(const MvPoly& a, const MvPoly& b);
  friend bool operator==(const MvPoly& a, const MvPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int n_;
  std::map<Exponent, Rational, ExponentOrder> terms_;
};

std::string monomial_string(const Exponent& e, const std::vector<std::string>& names);

// Arithmetic expression over named variables: + - * / ^ (non-negative integer powers),
// parentheses, integer literals.  Evaluation is exact; division by zero throws.
class Expression {
 public:
  static Expression parse(std::string_view text, const std::vector<std::string>& names);
  Rational evaluate(const std::vector<Rational>& x) const;
  const std::string& text() const { return text_; }

 private:
  struct Node {
    char op = 0;  // 'n' number, 'v' variable, '+', '-', '*', '/', '^', '~' negate
    Rational value;
    int var = -1;
    int lhs = -1, rhs = -1;
  };
  friend class ExpressionParser;
  Rational eval(int node, const std::vector<Rational>& x) const;
  std::vector<Node> nodes_;
  int root_ = -1;
  std::string text_;
};

using RationalFunction = std::function<Rational(const std::vector<Rational>&)>;

// The unique polynomial of total degree <= degree agreeing with f on the lattice
// {b in N^n : |b| <= degree}; solved in the falling-factorial basis, which is triangular
// on that lattice.  Afterwards f is compared at `checks` off-lattice points and a
// std::runtime_error is thrown if the degree bound was too small.  `origin` shifts the
// lattice (for functions with poles at integer points); checks where f divides by zero
// are skipped.
MvPoly interpolate(const RationalFunction& f, int nvars, int degree, int checks = 8,
                   const std::vector<Rational>& origin = {});

// Simplex lattice points used by interpolate, lowest total degree first.
std::vector<Exponent> simplex_lattice(int nvars, int degree);

}  // namespace affgeo

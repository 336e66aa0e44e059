#pragma once
// The six-element stabilizer of the standard cubic x^3 - 3xy^2 and its action on
// quartic coefficient tuples (I40, I31, I22, I13, I04).
//
// Index order: 0 = id, 1 = sigma, 2 = sigma^2, 3 = tau, 4 = sigma tau, 5 = sigma^2 tau.
// Tuples are row vectors: applying g sends I to I * M_g, and M_{g h} = M_g M_h.

#include "affgeo/bipoly.hpp"
#include "affgeo/jet.hpp"
#include "affgeo/scalar.hpp"

#include <Eigen/Core>
#include <array>
#include <string>

namespace affgeo {

template <typename S> using Matrix2 = Eigen::Matrix<S, 2, 2>;
template <typename S> using Matrix5 = Eigen::Matrix<S, 5, 5>;
using ExactSqrt3 = Surd<3>;

inline constexpr int kD3Order = 6;

std::string d3_name(int index);

template <typename S>
Matrix2<S> d3_linear(int index) {
  const S half = S(1) / S(2);
  Matrix2<S> sigma, tau;
  sigma << -half, -sqrt3<S>() * half, sqrt3<S>() * half, -half;
  tau << S(1), S(0), S(0), S(-1);
  const Matrix2<S> id = Matrix2<S>::Identity();
  switch (index) {
    case 0: return id;
    case 1: return sigma;
    case 2: return sigma * sigma;
    case 3: return tau;
    case 4: return sigma * tau;
    case 5: return sigma * sigma * tau;
    default: throw std::out_of_range("D3 index must be 0..5");
  }
}

// Passive map x = L x', z = z' for the element.
template <typename S>
AffineMap3<S> d3_map(int index) {
  AffineMap3<S> m;
  m.linear.template topLeftCorner<2, 2>() = d3_linear<S>(index);
  return m;
}

// Index of the product g h, and of the inverse.
int d3_multiply(int g, int h);
int d3_inverse(int g);

// Action of a passive linear substitution x = L x' on binary quartics written with
// binomial weights, q = sum_m C(4,m) I_m x^(4-m) y^m.  Row-vector convention.
template <typename S>
Matrix5<S> quartic_action(const Matrix2<S>& L) {
  Matrix5<S> M;
  for (int r = 0; r < 5; ++r) {
    BiPoly<S> lx(4), ly(4);
    lx(1, 0) = L(0, 0); lx(0, 1) = L(0, 1);
    ly(1, 0) = L(1, 0); ly(0, 1) = L(1, 1);
    BiPoly<S> q = BiPoly<S>::constant(4, S(BiPoly<S>::binomial(4, r)));
    for (int k = 0; k < 4 - r; ++k) q = q * lx;
    for (int k = 0; k < r; ++k) q = q * ly;
    for (int m = 0; m < 5; ++m) M(r, m) = q(4 - m, m) / S(BiPoly<S>::binomial(4, m));
  }
  return M;
}

// Induced action computed from the 2x2 element (independent of any printed matrix).
Matrix5<ExactSqrt3> d3_action_oracle(int index);
// The sigma and tau matrices as printed, with the other four formed as products.
Matrix5<ExactSqrt3> d3_action_printed(int index);
// Floating-point action used by the pipeline (from the oracle).
const Eigen::Matrix<double, 5, 5>& d3_action(int index);

}  // namespace affgeo

#pragma once
// Fundamental curvatures, Maurer-Cartan invariants and the fundamental forms.
// R1, R2 are indexed from 0: R1(i-1, j-1) is R^1_ij.

#include "affgeo/normalize.hpp"

#include <Eigen/Core>
#include <array>

namespace affgeo {

template <typename S>
struct MaurerCartan {
  Matrix3<S> R1, R2;
  S Y1, Y2;
};

InvariantTuple<double> fundamental_invariants(const NormalizationResult& result);

template <typename S>
MaurerCartan<S> maurer_cartan(const InvariantTuple<S>& I) {
  const S I40 = I(0), I31 = I(1), I22 = I(2), I13 = I(3), I04 = I(4);
  const S one(1), half = one / S(2), q = one / S(4), tw = one / S(12);
  MaurerCartan<S> m;
  m.R1 << -I40 * q + S(3) * I22 * q - half, -I31 * q + I13 * tw, -I40 * q - I22 * q + half,
          I31 * q - I13 * tw, -I40 * q + S(3) * I22 * q + half, -I31 * q - I13 * q,
          one, S(0), -I40 * half + S(3) * I22 * half;
  m.R2 << -I31 * q + S(3) * I13 * q, -I22 * q + I04 * tw + half, -I31 * q - I13 * q,
          I22 * q - I04 * tw + half, -I31 * q + S(3) * I13 * q, -I22 * q - I04 * q + half,
          S(0), one, -I31 * half + S(3) * I13 * half;
  m.Y1 = S(2) * I13 / S(3);
  m.Y2 = I40 * q - I22 * half - I04 * tw;
  return m;
}

// The eighteen linear equations the R^k_ij satisfy on the cross-section (first ten from
// the order <= 3 normalizations, last eight from the order-4 ones).  All vanish for the
// correct matrices.
template <typename S>
std::array<S, 18> verify_mc_linear_system(const MaurerCartan<S>& m, const InvariantTuple<S>& I) {
  const auto& A = m.R1;
  const auto& B = m.R2;
  auto r = [](const auto& M, int i, int j) { return M(i - 1, j - 1); };
  // iota values of the order <= 3 coordinates on the cross-section
  const S i20(1), i02(1), i11(0), i30(1), i21(0), i12(-1), i03(0);
  return {
      r(A, 3, 1) - i20,
      r(A, 3, 2) - i11,
      S(-2) * r(A, 1, 1) + r(A, 3, 3) - i30,
      -r(A, 1, 2) - r(A, 2, 1) - i21,
      S(-2) * r(A, 2, 2) + r(A, 3, 3) - i12,
      r(B, 3, 1) - i11,
      r(B, 3, 2) - i02,
      S(-2) * r(B, 1, 1) + r(B, 3, 3) - i21,
      -r(B, 1, 2) - r(B, 2, 1) - i12,
      S(-2) * r(B, 2, 2) + r(B, 3, 3) - i03,
      S(-3) * r(A, 1, 1) - S(3) * r(A, 1, 3) + r(A, 3, 3) - I(0),
      -r(A, 1, 2) + S(2) * r(A, 2, 1) - r(A, 2, 3) - I(1),
      r(A, 1, 1) - r(A, 1, 3) + S(2) * r(A, 2, 2) - r(A, 3, 3) - I(2),
      S(3) * r(A, 1, 2) - S(3) * r(A, 2, 3) - I(3),
      S(-3) * r(B, 1, 1) - S(3) * r(B, 1, 3) + r(B, 3, 3) - I(1),
      -r(B, 1, 2) + S(2) * r(B, 2, 1) - r(B, 2, 3) - I(2),
      r(B, 1, 1) - r(B, 1, 3) + S(2) * r(B, 2, 2) - r(B, 3, 3) - I(3),
      S(3) * r(B, 1, 2) - S(3) * r(B, 2, 3) - I(4),
  };
}

template <typename S>
std::array<S, 18> verify_mc_linear_system(const InvariantTuple<S>& I) { return verify_mc_linear_system(maurer_cartan(I), I); }

// Inverts Y1 = 2 I13 / 3 and Y2 = I40/4 - I22/2 - I04/12.
template <typename S>
std::pair<S, S> recover_I13_I04(const S& Y1, const S& Y2, const S& I40, const S& I22) {
  return {S(3) * Y1 / S(2), S(3) * I40 - S(6) * I22 - S(12) * Y2};
}

// Plain (unweighted) coefficients of binary forms: phi2 on (w1^2, w1 w2, w2^2), etc.
struct FundamentalForms {
  Eigen::Vector3d phi2;
  Eigen::Vector4d phi3;
  Eigen::Matrix<double, 5, 1> phi4;
};

FundamentalForms fundamental_forms(const InvariantTuple<double>& I);

// Forms rewritten in a coframe v related to the canonical one by w = M v.
FundamentalForms substitute_forms(const FundamentalForms& forms, const Eigen::Matrix2d& M);

struct RecoveredCoframe {
  Eigen::Matrix2d basis;  // v = basis * w, w the recovered canonical coframe
  InvariantTuple<double> I;
  int d3_index = 0;
};

// Throws NotPositiveDefinite or CubicDegenerate.
RecoveredCoframe recover_from_forms(const FundamentalForms& forms);

// Substitution w = M v into a binary form with plain coefficients c_k of w1^(d-k) w2^k.
Eigen::VectorXd binary_form_substitute(const Eigen::VectorXd& coeffs, const Eigen::Matrix2d& M);

}  // namespace affgeo

#include "affgeo/invariants.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>

namespace affgeo {

InvariantTuple<double> fundamental_invariants(const NormalizationResult& result) {
  if (result.point_type != PointType::RegularElliptical) throw DegeneratePoint("no invariant tuple at a degenerate point");
  if (result.standard_jet.order() < 4) throw std::invalid_argument("fundamental curvatures need an order-4 jet");
  InvariantTuple<double> I;
  for (int m = 0; m < 5; ++m) I(m) = result.standard_jet.a(4 - m, m);
  return I;
}

FundamentalForms fundamental_forms(const InvariantTuple<double>& I) {
  FundamentalForms f;
  f.phi2 << 1, 0, 1;
  f.phi3 << 1, 0, -3, 0;
  f.phi4 << I(0), 4 * I(1), 6 * I(2), 4 * I(3), I(4);
  return f;
}

Eigen::VectorXd binary_form_substitute(const Eigen::VectorXd& coeffs, const Eigen::Matrix2d& M) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  BiPoly<double> w1(d), w2(d);
  w1(1, 0) = M(0, 0); w1(0, 1) = M(0, 1);
  w2(1, 0) = M(1, 0); w2(0, 1) = M(1, 1);
  BiPoly<double> total(d);
  for (int k = 0; k <= d; ++k) {
    BiPoly<double> term = BiPoly<double>::constant(d, coeffs(k));
    for (int e = 0; e < d - k; ++e) term = term * w1;
    for (int e = 0; e < k; ++e) term = term * w2;
    total += term;
  }
  Eigen::VectorXd out(d + 1);
  for (int k = 0; k <= d; ++k) out(k) = total(d - k, k);
  return out;
}

FundamentalForms substitute_forms(const FundamentalForms& forms, const Eigen::Matrix2d& M) {
  FundamentalForms f;
  f.phi2 = binary_form_substitute(forms.phi2, M);
  f.phi3 = binary_form_substitute(forms.phi3, M);
  f.phi4 = binary_form_substitute(forms.phi4, M);
  return f;
}

RecoveredCoframe recover_from_forms(const FundamentalForms& forms) {
  Eigen::Matrix2d G;
  G << forms.phi2(0), forms.phi2(1) / 2, forms.phi2(1) / 2, forms.phi2(2);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(G);
  const double scale = std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(1)));
  if (!(es.eigenvalues()(0) > kEpsQuadratic * scale)) throw NotPositiveDefinite("second fundamental form is not positive definite");

  // u = S v is orthonormal for phi2; S the symmetric square root.
  const Eigen::Matrix2d S = es.operatorSqrt();
  const Eigen::Matrix2d Sinv = S.inverse();
  const Eigen::VectorXd c = binary_form_substitute(forms.phi3, Sinv);

  // Harmonic-3 part A Re(z^3) + B Im(z^3), z = u1 + i u2; the remainder is (u1^2+u2^2)*linear.
  const double A = (c(0) - c(2)) / 4, B = (c(1) - c(3)) / 4;
  const double cubic_scale = std::max(1.0, c.cwiseAbs().maxCoeff());
  if (std::hypot(A, B) <= kEpsDegenerate * cubic_scale) throw CubicDegenerate("third fundamental form has no harmonic cubic part");
  const double phi = std::atan2(-B, A) / 3;
  Eigen::Matrix2d R;
  R << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  const Eigen::Matrix2d M = R * S;  // w = M v
  const Eigen::Matrix2d P = M.inverse();

  const Eigen::VectorXd q = binary_form_substitute(forms.phi4, P);
  InvariantTuple<double> I;
  I << q(0), q(1) / 4, q(2) / 6, q(3) / 4, q(4);
  const D3Choice choice = d3_canonicalize(I);
  return {P * d3_linear<double>(choice.index), choice.tuple, choice.index};
}

}  // namespace affgeo

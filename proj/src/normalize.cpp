#include "affgeo/normalize.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace affgeo {

std::string to_string(PointType t) {
  switch (t) {
    case PointType::Elliptical: return "elliptical";
    case PointType::Hyperbolic: return "hyperbolic";
    case PointType::Parabolic: return "parabolic";
    case PointType::DegenerateQuadratic: return "degenerate-quadratic";
    case PointType::RegularElliptical: return "regular-elliptical";
    case PointType::DegenerateElliptical: return "degenerate-elliptical";
  }
  return "unknown";
}

namespace {

Eigen::Matrix2d hessian(const Jet<double>& j) {
  Eigen::Matrix2d A;
  A << j.a(2, 0), j.a(1, 1), j.a(1, 1), j.a(0, 2);
  return A;
}

// Eigenvalues descending, eigenvector columns with their largest-magnitude entry positive.
void sorted_eigen(const Eigen::Matrix2d& A, Eigen::Vector2d& lambda, Eigen::Matrix2d& Q) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(A);
  lambda << es.eigenvalues()(1), es.eigenvalues()(0);
  Q.col(0) = es.eigenvectors().col(1);
  Q.col(1) = es.eigenvectors().col(0);
  for (int c = 0; c < 2; ++c) {
    int k = std::abs(Q(1, c)) > std::abs(Q(0, c)) ? 1 : 0;
    if (Q(k, c) < 0) Q.col(c) = -Q.col(c);
  }
}

void set_cross_section(Jet<double>& j, bool regular) {
  j = j.with_base(Vector3<double>::Zero());
  j = j.with(1, 0, 0).with(0, 1, 0).with(1, 1, 0).with(2, 0, 1).with(0, 2, 1);
  j = j.with(3, 0, regular ? 1 : 0).with(2, 1, 0).with(1, 2, regular ? -1 : 0).with(0, 3, 0);
}

InvariantTuple<double> quartic_of(const Jet<double>& j) {
  InvariantTuple<double> I;
  for (int m = 0; m < 5; ++m) I(m) = j.a(4 - m, m);
  return I;
}

// Stages shared by normalize_full / normalize_aligned: up to (but excluding) the D3 choice.
struct Reduced {
  Jet<double> jet;
  AffineMap3<double> map;
  PointType type;
};

Reduced reduce(const Jet<double>& original) {
  if (original.order() < 3) throw std::invalid_argument("normalization needs a jet of order >= 3");
  AffineMap3<double> map = AffineMap3<double>::from_translation(original.base());
  Jet<double> j = jet_translate_to_origin(original);

  Stage s = kill_linear(j);
  map = map * s.map;
  s = diagonalize_quadratic(s.jet);
  map = map * s.map;
  s = balance_cubic(s.jet);
  map = map * s.map;
  CubicStage c = rotate_scale_cubic(s.jet);
  map = map * c.map;
  return {c.jet, map, c.type};
}

NormalizationResult finish(const Reduced& r, int choice, int lex_choice) {
  NormalizationResult out;
  out.point_type = r.type;
  out.lex_choice = lex_choice;
  out.d3_choice = choice;
  const AffineMap3<double> g = d3_map<double>(choice);
  out.frame_map = r.map * g;
  out.standard_jet = choice == 0 ? r.jet : jet_apply_affine(r.jet, g);
  set_cross_section(out.standard_jet, r.type == PointType::RegularElliptical);
  return out;
}

}  // namespace

Stage kill_linear(const Jet<double>& jet) {
  AffineMap3<double> m;
  m.linear(2, 0) = jet.a(1, 0);
  m.linear(2, 1) = jet.a(0, 1);
  Jet<double> out = jet_apply_affine(jet, m);
  return {out.with(1, 0, 0).with(0, 1, 0), m};
}

PointType classify_quadratic(const Jet<double>& jet) {
  const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(hessian(jet), Eigen::EigenvaluesOnly).eigenvalues();
  const double norm = std::max(std::abs(ev(0)), std::abs(ev(1)));
  const double eps = kEpsQuadratic * norm;
  if (norm == 0) return PointType::DegenerateQuadratic;
  const bool small0 = std::abs(ev(0)) <= eps, small1 = std::abs(ev(1)) <= eps;
  if (small0 && small1) return PointType::DegenerateQuadratic;
  if (small0 || small1) return PointType::Parabolic;
  return ev(0) * ev(1) > 0 ? PointType::Elliptical : PointType::Hyperbolic;
}

Stage diagonalize_quadratic(const Jet<double>& jet) {
  if (classify_quadratic(jet) != PointType::Elliptical) throw NotElliptical("quadratic part is not definite");
  AffineMap3<double> flip;
  Jet<double> j = jet;
  if (hessian(j).trace() < 0) {
    flip.linear(2, 2) = -1;
    j = jet_apply_affine(j, flip);
  }
  Eigen::Vector2d lambda;
  Eigen::Matrix2d Q;
  sorted_eigen(hessian(j), lambda, Q);
  if (std::abs(lambda(0) - lambda(1)) <= 1e-14 * lambda(0)) Q.setIdentity();
  AffineMap3<double> m;
  m.linear.topLeftCorner<2, 2>() = Q * Eigen::Vector2d(1 / std::sqrt(lambda(0)), 1 / std::sqrt(lambda(1))).asDiagonal();
  Jet<double> out = jet_apply_affine(j, m);
  return {out.with(2, 0, 1).with(0, 2, 1).with(1, 1, 0), flip * m};
}

Stage balance_cubic(const Jet<double>& jet) {
  AffineMap3<double> m;
  m.linear(0, 2) = -(jet.a(3, 0) + jet.a(1, 2)) / 4;
  m.linear(1, 2) = (jet.a(2, 1) - jet.a(0, 3)) / 2;
  return {jet_apply_affine(jet, m), m};
}

CubicStage rotate_scale_cubic(const Jet<double>& jet) {
  const double scale = std::max({1.0, std::abs(jet.a(3, 0)), std::abs(jet.a(2, 1)), std::abs(jet.a(1, 2)), std::abs(jet.a(0, 3))});
  const double re = jet.a(3, 0), im = jet.a(0, 3) / 2;
  const double modulus = std::hypot(re, im);
  if (modulus <= kEpsDegenerate * scale) return {jet, AffineMap3<double>::identity(), PointType::DegenerateElliptical};

  double angle = -std::atan2(im, re);
  angle = std::fmod(angle, 2 * std::numbers::pi);
  if (angle < 0) angle += 2 * std::numbers::pi;
  const double t = angle / 3, s = 1 / modulus;
  AffineMap3<double> m;
  m.linear << s * std::cos(t), s * std::sin(t), 0,
              -s * std::sin(t), s * std::cos(t), 0,
              0, 0, s * s;
  Stage rebalance = balance_cubic(jet_apply_affine(jet, m));
  return {rebalance.jet, m * rebalance.map, PointType::RegularElliptical};
}

bool lex_less(const InvariantTuple<double>& a, const InvariantTuple<double>& b, double eps) {
  for (int k = 0; k < 5; ++k) {
    if (std::abs(a(k) - b(k)) <= eps) continue;
    return a(k) < b(k);
  }
  return false;
}

InvariantTuple<double> d3_apply(const InvariantTuple<double>& I, int index) { return I * d3_action(index); }

D3Choice d3_canonicalize(const InvariantTuple<double>& I) {
  D3Choice best{I, 0};
  for (int g = 1; g < kD3Order; ++g) {
    InvariantTuple<double> c = d3_apply(I, g);
    if (lex_less(c, best.tuple)) best = {c, g};
  }
  return best;
}

NormalizationResult normalize_full(const Jet<double>& jet) {
  Reduced r = reduce(jet);
  int choice = 0;
  if (r.type == PointType::RegularElliptical && jet.order() >= 4) choice = d3_canonicalize(quartic_of(r.jet)).index;
  return finish(r, choice, choice);
}

NormalizationResult normalize_aligned(const Jet<double>& jet, const Matrix3<double>& reference_linear) {
  Reduced r = reduce(jet);
  int lex = 0, choice = 0;
  if (r.type == PointType::RegularElliptical && jet.order() >= 4) {
    lex = d3_canonicalize(quartic_of(r.jet)).index;
    double best = std::numeric_limits<double>::infinity();
    for (int g = 0; g < kD3Order; ++g) {
      double d = ((r.map * d3_map<double>(g)).linear - reference_linear).norm();
      if (d < best) { best = d; choice = g; }
    }
  }
  return finish(r, choice, lex);
}

MovingFrame moving_frame(const NormalizationResult& result) {
  const auto& L = result.frame_map.linear;
  return {L.col(0), L.col(1), L.col(2), result.frame_map.translation};
}

MovingFrame moving_frame_at(const BiPoly<double>& surface, double x0, double y0) {
  NormalizationResult n = normalize_full(jet_of_polynomial(surface, x0, y0, 4));
  if (n.point_type == PointType::DegenerateElliptical) throw DegeneratePoint("cubic part vanishes at this point");
  return moving_frame(n);
}

double tangency_defect(const MovingFrame& frame, const Jet<double>& jet) {
  Vector3<double> n(-jet.a(1, 0), -jet.a(0, 1), 1);
  n.normalize();
  return std::max(std::abs(n.dot(frame.e1)), std::abs(n.dot(frame.e2)));
}

}  // namespace affgeo

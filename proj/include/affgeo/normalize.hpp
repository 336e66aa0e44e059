#pragma once
// Reduction of elliptical jets to the standard form
//   z = (x^2 + y^2)/2 + (x^3 - 3 x y^2)/6 + quartic + ...
// Every stage returns the passive map it used; NormalizationResult::frame_map is their
// composite, so original = frame_map(standard) and
//   jet_apply_affine(original, frame_map) == standard_jet.

#include "affgeo/d3.hpp"
#include "affgeo/jet.hpp"

#include <Eigen/Core>
#include <optional>
#include <string>

namespace affgeo {

template <typename S> using InvariantTuple = Eigen::Matrix<S, 1, 5>;

enum class PointType { Elliptical, Hyperbolic, Parabolic, DegenerateQuadratic, RegularElliptical, DegenerateElliptical };
std::string to_string(PointType t);

inline constexpr double kEpsQuadratic = 1e-10;  // relative to the spectral norm of the Hessian
inline constexpr double kEpsDegenerate = 1e-8;  // relative to max(1, largest cubic coefficient)
inline constexpr double kEpsLex = 1e-7;

struct Stage {
  Jet<double> jet;
  AffineMap3<double> map;
};

struct CubicStage {
  Jet<double> jet;
  AffineMap3<double> map;
  PointType type;
};

Stage kill_linear(const Jet<double>& jet);
PointType classify_quadratic(const Jet<double>& jet);
Stage diagonalize_quadratic(const Jet<double>& jet);
Stage balance_cubic(const Jet<double>& jet);
CubicStage rotate_scale_cubic(const Jet<double>& jet);

// Componentwise comparison with a tolerance band: entries closer than eps count as equal.
bool lex_less(const InvariantTuple<double>& a, const InvariantTuple<double>& b, double eps = kEpsLex);

struct D3Choice {
  InvariantTuple<double> tuple;
  int index = 0;
};
D3Choice d3_canonicalize(const InvariantTuple<double>& I);
InvariantTuple<double> d3_apply(const InvariantTuple<double>& I, int index);

struct NormalizationResult {
  Jet<double> standard_jet;
  AffineMap3<double> frame_map;
  PointType point_type = PointType::DegenerateElliptical;
  int d3_choice = 0;
  // What lexicographic canonicalization would pick; differs from d3_choice only when the
  // result was aligned to a reference frame across a branch locus.
  int lex_choice = 0;
};

NormalizationResult normalize_full(const Jet<double>& jet);

// Same pipeline, but the D3 element is the one bringing the frame closest to
// `reference_linear` (used on finite-difference stencils to keep the gauge continuous).
NormalizationResult normalize_aligned(const Jet<double>& jet, const Matrix3<double>& reference_linear);

struct MovingFrame {
  Vector3<double> e1, e2, e3, r;
};

MovingFrame moving_frame(const NormalizationResult& result);

// Frame of the graph of `surface` at (x0, y0).  Throws NotElliptical / DegeneratePoint.
MovingFrame moving_frame_at(const BiPoly<double>& surface, double x0, double y0);

// Largest normal component of e1, e2 at the jet's base point (unit normal of the graph).
double tangency_defect(const MovingFrame& frame, const Jet<double>& jet);

}  // namespace affgeo

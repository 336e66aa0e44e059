#pragma once
// Infinitesimal generators of aff(3) prolonged to third-order jets, and the recurrence
// formula relating invariantized derivatives to the Maurer-Cartan invariants.

#include "affgeo/invariants.hpp"
#include "affgeo/linalg.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace affgeo {

enum class JetCoord : int { x, y, a00, a10, a01, a20, a11, a02, a30, a21, a12, a03 };
inline constexpr int kJetDim = 12;

template <typename S> using JetPoint = Eigen::Matrix<S, kJetDim, 1>;

std::string to_string(JetCoord c);
JetCoord jet_coord(int i, int j);  // a_ij for i + j <= 3
std::pair<int, int> jet_indices(JetCoord c);  // inverse of jet_coord; throws UnknownCoordinate for x, y

enum class Generator : int { X1, X2, X3, X11, X12, X13, X21, X22, X23, X31, X32, X33 };
inline constexpr int kGenerators = 12;
std::string to_string(Generator g);

// 4x4 matrix in aff(3): X_ij <-> E_ij, X_i <-> E_i4 (homogeneous coordinates).
Eigen::Matrix4d generator_matrix(Generator g);

// The printed table has a sign slip in the d/da03 term of X13; Corrected flips it.
enum class Transcription { AsPrinted, Corrected };

template <typename S>
JetPoint<S> prolonged_field(Generator g, const JetPoint<S>& p, Transcription t = Transcription::AsPrinted) {
  using C = JetCoord;
  auto v = [&](C c) -> const S& { return p(static_cast<int>(c)); };
  const S &x = v(C::x), &y = v(C::y), &a00 = v(C::a00), &a10 = v(C::a10), &a01 = v(C::a01), &a20 = v(C::a20),
          &a11 = v(C::a11), &a02 = v(C::a02), &a30 = v(C::a30), &a21 = v(C::a21), &a12 = v(C::a12), &a03 = v(C::a03);
  JetPoint<S> f = JetPoint<S>::Constant(S(0));
  auto set = [&](C c, const S& value) { f(static_cast<int>(c)) = value; };
  const S two(2), three(3), four(4);
  switch (g) {
    case Generator::X1: set(C::x, S(1)); break;
    case Generator::X2: set(C::y, S(1)); break;
    case Generator::X3: set(C::a00, S(1)); break;
    case Generator::X11:
      set(C::x, x); set(C::a10, -a10); set(C::a20, -two * a20); set(C::a11, -a11);
      set(C::a30, -three * a30); set(C::a21, -two * a21); set(C::a12, -a12);
      break;
    case Generator::X12:
      set(C::x, y); set(C::a01, -a10); set(C::a11, -a20); set(C::a02, -two * a11);
      set(C::a21, -a30); set(C::a12, -two * a21); set(C::a03, -three * a12);
      break;
    case Generator::X13: {
      set(C::x, a00); set(C::a10, -a10 * a10); set(C::a01, -a10 * a01); set(C::a20, -three * a10 * a20);
      set(C::a11, -(a01 * a20 + two * a10 * a11)); set(C::a02, -(two * a01 * a11 + a10 * a02));
      set(C::a30, -(four * a10 * a30 + three * a20 * a20));
      set(C::a21, -(a01 * a30 + three * a10 * a21 + three * a20 * a11));
      set(C::a12, -(two * a01 * a21 + a20 * a02 + two * a10 * a12 + two * a11 * a11));
      const S last = three * a01 * a12 + three * a11 * a02 + a10 * a03;
      set(C::a03, t == Transcription::AsPrinted ? last : S(-last));
      break;
    }
    case Generator::X21:
      set(C::y, x); set(C::a10, -a01); set(C::a20, -two * a11); set(C::a11, -a02);
      set(C::a30, -three * a21); set(C::a21, -two * a12); set(C::a12, -a03);
      break;
    case Generator::X22:
      set(C::y, y); set(C::a01, -a01); set(C::a11, -a11); set(C::a02, -two * a02);
      set(C::a21, -a21); set(C::a12, -two * a12); set(C::a03, -three * a03);
      break;
    case Generator::X23:
      set(C::y, a00); set(C::a10, -a01 * a10); set(C::a01, -a01 * a01);
      set(C::a20, -(a01 * a20 + two * a10 * a11)); set(C::a11, -(two * a01 * a11 + a10 * a02));
      set(C::a02, -three * a01 * a02);
      set(C::a30, -(a01 * a30 + three * a10 * a21 + three * a20 * a11));
      set(C::a21, -(two * a01 * a21 + a20 * a02 + two * a10 * a12 + two * a11 * a11));
      set(C::a12, -(three * a01 * a12 + three * a11 * a02 + a10 * a03));
      set(C::a03, -(four * a01 * a03 + three * a02 * a02));
      break;
    case Generator::X31: set(C::a00, x); set(C::a10, S(1)); break;
    case Generator::X32: set(C::a00, y); set(C::a01, S(1)); break;
    case Generator::X33:
      for (int k = static_cast<int>(C::a00); k < kJetDim; ++k) f(k) = p(k);
      break;
  }
  return f;
}

// Independent oracle: d/de of the jet coordinates of exp(e X) applied to the jet at p,
// computed by pushing a dual-number map through jet_apply_affine.
JetPoint<double> prolonged_field_from_action(Generator g, const JetPoint<double>& p);

// The jet point selected by the normalization (x = y = 0, standard 3-jet).
template <typename S>
JetPoint<S> cross_section_point() {
  JetPoint<S> p = JetPoint<S>::Constant(S(0));
  p(static_cast<int>(JetCoord::a20)) = S(1);
  p(static_cast<int>(JetCoord::a02)) = S(1);
  p(static_cast<int>(JetCoord::a30)) = S(1);
  p(static_cast<int>(JetCoord::a12)) = S(-1);
  return p;
}

struct BracketCheck {
  Generator a, b;
  double residual;
};

// [psi(A), psi(B)] - psi([A, B]) at random jet points, by central differences of the
// component maps.  One entry per unordered generator pair.
std::vector<BracketCheck> verify_prolongation_bracket(Transcription t, std::uint64_t seed = 0, int points = 4, double h = 1e-4);

// Value of a_ij on the cross-section: constants through order 3, the tuple at order 4.
template <typename S>
S invariantized_coordinate(int i, int j, const InvariantTuple<S>& I) {
  const int n = i + j;
  if (n == 4) return I(j);
  if (n > 4 || n < 0) throw UnknownCoordinate("no invariantization for a_" + std::to_string(i) + std::to_string(j));
  const auto p = cross_section_point<S>();
  return p(static_cast<int>(jet_coord(i, j)));
}

// iota(D^1 F), iota(D^2 F) for a fiber coordinate F = a_ij.
template <typename S>
std::pair<S, S> invariantized_derivatives(JetCoord F, const InvariantTuple<S>& I) {
  const auto [i, j] = jet_indices(F);
  return {invariantized_coordinate(i + 1, j, I), invariantized_coordinate(i, j + 1, I)};
}

namespace detail {
inline constexpr Generator kLinearGenerators[3][3] = {
    {Generator::X11, Generator::X12, Generator::X13},
    {Generator::X21, Generator::X22, Generator::X23},
    {Generator::X31, Generator::X32, Generator::X33}};
}

// D^k iota(F) - iota(D^k F) + sum_ij iota(X_ij F) R^k_ij for k = 1, 2.  For the order <= 3
// coordinates iota(F) is constant, so the first term vanishes.
template <typename S>
std::pair<S, S> recurrence_residual(JetCoord F, const MaurerCartan<S>& mc, const std::pair<S, S>& DkF) {
  jet_indices(F);  // validates F
  const JetPoint<S> p = cross_section_point<S>();
  S r1 = -DkF.first, r2 = -DkF.second;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const S c = prolonged_field(detail::kLinearGenerators[i][j], p)(static_cast<int>(F));
      r1 += c * mc.R1(i, j);
      r2 += c * mc.R2(i, j);
    }
  return {r1, r2};
}

template <typename S>
std::pair<S, S> recurrence_residual(JetCoord F, const InvariantTuple<S>& I, const std::pair<S, S>& DkF) {
  return recurrence_residual(F, maurer_cartan(I), DkF);
}

inline constexpr JetCoord kFiberCoords[10] = {JetCoord::a00, JetCoord::a10, JetCoord::a01, JetCoord::a20, JetCoord::a11,
                                              JetCoord::a02, JetCoord::a30, JetCoord::a21, JetCoord::a12, JetCoord::a03};

// Solves the recurrence equations of the ten fiber coordinates for the eighteen R^k_ij
// from scratch (exact fields only).  Y1, Y2 are then read off as R2_11 - R1_12 and
// R2_21 - R1_22.
template <typename S>
MaurerCartan<S> solve_recurrence_system(const InvariantTuple<S>& I) {
  const JetPoint<S> p = cross_section_point<S>();
  MatrixX<S> A = MatrixX<S>::Constant(10, 9, S(0));
  VectorX<S> b1(10), b2(10);
  for (int row = 0; row < 10; ++row) {
    const JetCoord F = kFiberCoords[row];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) A(row, 3 * i + j) = prolonged_field(detail::kLinearGenerators[i][j], p)(static_cast<int>(F));
    const auto d = invariantized_derivatives(F, I);
    b1(row) = d.first;
    b2(row) = d.second;
  }
  const auto x1 = solve_exact<S>(A, b1), x2 = solve_exact<S>(A, b2);
  if (!x1 || !x2) throw std::runtime_error("recurrence system has no unique solution");
  MaurerCartan<S> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      m.R1(i, j) = (*x1)(3 * i + j);
      m.R2(i, j) = (*x2)(3 * i + j);
    }
  m.Y1 = m.R2(0, 0) - m.R1(0, 1);
  m.Y2 = m.R2(1, 0) - m.R1(1, 1);
  return m;
}

}  // namespace affgeo

#pragma once
// Surface jets z = u(x,y) and the induced action of Aff(3) on them.
//
// Coefficients follow the a_ij convention: a_ij is the (i,j) partial derivative of u at
// the base point, so the monomial coefficient of x^i y^j is a_ij / (i! j!).
//
// Maps act passively: an AffineMap3 T = (B, t) relates old coordinates to new ones by
// old = B new + t.  jet_apply_affine(J, T) is the jet, in new coordinates, of the same
// surface; equivalently the jet of the image surface T^{-1}(S).

#include "affgeo/bipoly.hpp"
#include "affgeo/errors.hpp"
#include "affgeo/scalar.hpp"

#include <Eigen/Core>
#include <Eigen/LU>
#include <cmath>
#include <type_traits>

namespace affgeo {

template <typename S> using Vector3 = Eigen::Matrix<S, 3, 1>;
template <typename S> using Matrix3 = Eigen::Matrix<S, 3, 3>;

inline constexpr double kEpsTrans = 1e-9;
inline constexpr double kEpsDet = 1e-12;

inline long factorial(int n) { long f = 1; for (int k = 2; k <= n; ++k) f *= k; return f; }

namespace detail {
template <typename S>
double magnitude(const S& x) { return std::abs(to_double(x)); }

// Exact types only fail on exact zero; floating types use the relative band.
template <typename S>
bool negligible(const S& x, double scale, double eps) {
  if constexpr (std::is_same_v<S, double> || std::is_same_v<S, Dual>) return magnitude(x) <= eps * scale;
  else return is_exact_zero(x);
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  double r = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r = std::max(r, magnitude(m(i, j)));
  return r;
}
}  // namespace detail

template <typename S>
struct AffineMap3 {
  Matrix3<S> linear = Matrix3<S>::Identity();
  Vector3<S> translation = Vector3<S>::Zero();

  static AffineMap3 identity() { return {}; }
  static AffineMap3 from_linear(const Matrix3<S>& L) { return {L, Vector3<S>::Zero()}; }
  static AffineMap3 from_translation(const Vector3<S>& t) { return {Matrix3<S>::Identity(), t}; }

  Vector3<S> operator()(const Vector3<S>& p) const { return linear * p + translation; }

  S det() const { return linear.determinant(); }

  // Relative to the Hadamard bound (product of column norms), so that legitimately
  // anisotropic scalings such as diag(s, s, s^2) are not flagged.
  void require_invertible() const {
    double bound = 1;
    for (int j = 0; j < 3; ++j) {
      double c = 0;
      for (int i = 0; i < 3; ++i) c += detail::magnitude(linear(i, j)) * detail::magnitude(linear(i, j));
      bound *= std::sqrt(c);
    }
    if (detail::negligible(det(), bound, kEpsDet)) throw SingularMap("affine map is singular");
  }

  // (*this) after `inner`: p -> this(inner(p)).
  AffineMap3 operator*(const AffineMap3& inner) const {
    return {linear * inner.linear, linear * inner.translation + translation};
  }

  AffineMap3 inverse() const {
    require_invertible();
    Matrix3<S> inv = adjugate(linear) / det();
    return {inv, -(inv * translation)};
  }

  template <typename T>
  AffineMap3<T> cast() const { return {linear.template cast<T>(), translation.template cast<T>()}; }

  static Matrix3<S> adjugate(const Matrix3<S>& m) {
    Matrix3<S> a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        a(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      }
    return a;
  }
};

template <typename S>
class Jet {
 public:
  Jet() : Jet(2) {}
  explicit Jet(int order, const Vector3<S>& base = Vector3<S>::Zero()) : base_(base), a_(order) {
    if (order < 2) throw std::invalid_argument("jet order must be at least 2");
    a_(0, 0) = base(2);
  }

  // Jet from the local height function h (monomial coefficients, constant term ignored).
  static Jet from_local_height(const BiPoly<S>& h, const Vector3<S>& base, int order) {
    Jet j(order, base);
    for (int n = 1; n <= order; ++n)
      for (int i = 0; i <= n; ++i) j.a_(i, n - i) = h.coeff(i, n - i) * S(factorial(i) * factorial(n - i));
    return j;
  }

  int order() const { return a_.degree(); }
  const Vector3<S>& base() const { return base_; }

  // a_ij; a_00 is the base height.  Zero beyond the order.
  S a(int i, int j) const { return a_.coeff(i, j); }

  Jet with(int i, int j, const S& value) const {
    if (i == 0 && j == 0) throw std::invalid_argument("a00 is fixed by the base point");
    Jet r = *this;
    r.a_(i, j) = value;
    return r;
  }

  Jet with_base(const Vector3<S>& base) const {
    Jet r = *this;
    r.base_ = base;
    r.a_(0, 0) = base(2);
    return r;
  }

  // Monomial coefficients of z - z0 in local coordinates (x - x0, y - y0).
  BiPoly<S> local_height() const {
    BiPoly<S> h(order());
    for (int n = 1; n <= order(); ++n)
      for (int i = 0; i <= n; ++i) h(i, n - i) = a_(i, n - i) / S(factorial(i) * factorial(n - i));
    return h;
  }

  template <typename T>
  Jet<T> cast() const {
    Jet<T> r(order(), base_.template cast<T>());
    for (int n = 1; n <= order(); ++n)
      for (int i = 0; i <= n; ++i) r = r.with(i, n - i, T(a_(i, n - i)));
    return r;
  }

  friend bool operator==(const Jet& x, const Jet& y) { return x.base_ == y.base_ && x.a_ == y.a_; }

 private:
  Vector3<S> base_;
  BiPoly<S> a_;
};

template <typename S>
S graph_transversality(const Jet<S>& jet, const AffineMap3<S>& map) {
  const auto& b = map.linear;
  return b(2, 2) - jet.a(1, 0) * b(0, 2) - jet.a(0, 1) * b(1, 2);
}

template <typename S>
Jet<S> jet_apply_affine(const Jet<S>& jet, const AffineMap3<S>& map) {
  map.require_invertible();
  const auto& b = map.linear;
  const S D = graph_transversality(jet, map);
  if (detail::negligible(D, detail::max_abs(b), kEpsTrans))
    throw TransversalityLost("image of the jet is not a graph over the new (x,y) plane");

  const int N = jet.order();
  const S a10 = jet.a(1, 0), a01 = jet.a(0, 1);
  BiPoly<S> nonlinear = jet.local_height();
  nonlinear(1, 0) = S(0);
  nonlinear(0, 1) = S(0);

  const BiPoly<S> X = BiPoly<S>::x(N), Y = BiPoly<S>::y(N);
  BiPoly<S> lin(N);
  lin(1, 0) = a10 * b(0, 0) + a01 * b(1, 0) - b(2, 0);
  lin(0, 1) = a10 * b(0, 1) + a01 * b(1, 1) - b(2, 1);

  // Each pass fixes one more total degree of Z'.
  BiPoly<S> Z(N);
  for (int pass = 0; pass < N; ++pass) {
    BiPoly<S> x = X * b(0, 0) + Y * b(0, 1) + Z * b(0, 2);
    BiPoly<S> y = X * b(1, 0) + Y * b(1, 1) + Z * b(1, 2);
    Z = (lin + compose(nonlinear, x, y)) * (S(1) / D);
  }

  const Vector3<S> new_base = map.inverse()(jet.base());
  return Jet<S>::from_local_height(Z, new_base, N);
}

// Jet of the graph of a polynomial at (x0, y0): base (x0, y0, u(x0, y0)).
template <typename S>
Jet<S> jet_of_polynomial(const BiPoly<S>& u, const S& x0, const S& y0, int order) {
  const int deg = std::max(order, u.degree());
  BiPoly<S> shifted = u.truncated(deg).shifted(x0, y0);
  Vector3<S> base(x0, y0, shifted(0, 0));
  return Jet<S>::from_local_height(shifted, base, order);
}

// Same coefficients with the base moved to the origin (a00 = 0).
template <typename S>
Jet<S> jet_translate_to_origin(const Jet<S>& jet) { return jet.with_base(Vector3<S>::Zero()); }

template <typename S>
Jet<S> jet_translate_to_origin(const BiPoly<S>& u, const S& x0, const S& y0, int order) {
  return jet_translate_to_origin(jet_of_polynomial(u, x0, y0, order));
}

template <typename S>
double max_coeff_difference(const Jet<S>& x, const Jet<S>& y) {
  double d = 0;
  const int N = std::max(x.order(), y.order());
  for (int n = 0; n <= N; ++n)
    for (int i = 0; i <= n; ++i) d = std::max(d, std::abs(to_double(x.a(i, n - i)) - to_double(y.a(i, n - i))));
  for (int k = 0; k < 2; ++k) d = std::max(d, std::abs(to_double(x.base()(k)) - to_double(y.base()(k))));
  return d;
}

template <typename S>
double max_abs_coeff(const Jet<S>& x) {
  double d = 0;
  for (int n = 1; n <= x.order(); ++n)
    for (int i = 0; i <= n; ++i) d = std::max(d, std::abs(to_double(x.a(i, n - i))));
  return d;
}

}  // namespace affgeo

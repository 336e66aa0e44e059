#pragma once
// Dense bivariate polynomials truncated at a fixed total degree.
// Entry (i,j) is the coefficient of x^i y^j; entries with i+j > degree stay zero.

#include "affgeo/scalar.hpp"

#include <Eigen/Core>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace affgeo {

template <typename S>
class BiPoly {
 public:
  BiPoly() : BiPoly(0) {}
  explicit BiPoly(int degree) : degree_(degree), c_(Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>::Constant(degree + 1, degree + 1, S(0))) {
    if (degree < 0) throw std::invalid_argument("negative degree");
  }

  static BiPoly constant(int degree, const S& value) { BiPoly p(degree); p.c_(0, 0) = value; return p; }
  static BiPoly x(int degree) { BiPoly p(degree); if (degree >= 1) p.c_(1, 0) = S(1); return p; }
  static BiPoly y(int degree) { BiPoly p(degree); if (degree >= 1) p.c_(0, 1) = S(1); return p; }

  int degree() const { return degree_; }
  const S& operator()(int i, int j) const { return c_(i, j); }
  S& operator()(int i, int j) {
    if (i + j > degree_) throw std::out_of_range("monomial beyond truncation degree");
    return c_(i, j);
  }
  S coeff(int i, int j) const { return (i < 0 || j < 0 || i + j > degree_) ? S(0) : c_(i, j); }

  bool is_zero_from(int start_degree) const {
    for (int n = start_degree; n <= degree_; ++n)
      for (int i = 0; i <= n; ++i)
        if (!is_exact_zero(c_(i, n - i))) return false;
    return true;
  }

  // Lowest total degree carrying a nonzero coefficient (degree+1 if the polynomial is 0).
  int valuation() const {
    for (int n = 0; n <= degree_; ++n)
      for (int i = 0; i <= n; ++i)
        if (!is_exact_zero(c_(i, n - i))) return n;
    return degree_ + 1;
  }

  BiPoly truncated(int degree) const {
    BiPoly p(degree);
    for (int n = 0; n <= std::min(degree, degree_); ++n)
      for (int i = 0; i <= n; ++i) p.c_(i, n - i) = c_(i, n - i);
    return p;
  }

  BiPoly& operator+=(const BiPoly& o) { check(o); c_ += o.c_; return *this; }
  BiPoly& operator-=(const BiPoly& o) { check(o); c_ -= o.c_; return *this; }
  BiPoly& operator*=(const S& s) { c_ *= s; return *this; }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const S& s) { return a *= s; }
  friend BiPoly operator*(const S& s, BiPoly a) { return a *= s; }
  friend BiPoly operator-(BiPoly a) { a.c_ = -a.c_; return a; }

  // Truncated product; zero coefficients are skipped (catalog polynomials are sparse).
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    a.check(b);
    const int N = a.degree_;
    BiPoly r(N);
    for (int na = 0; na <= N; ++na)
      for (int i = 0; i <= na; ++i) {
        const S& ca = a.c_(i, na - i);
        if (is_exact_zero(ca)) continue;
        for (int nb = 0; na + nb <= N; ++nb)
          for (int k = 0; k <= nb; ++k) {
            const S& cb = b.c_(k, nb - k);
            if (is_exact_zero(cb)) continue;
            r.c_(i + k, na - i + nb - k) += ca * cb;
          }
      }
    return r;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.degree_ == b.degree_ && a.c_ == b.c_; }

  S evaluate(const S& x, const S& y) const {
    S acc(0);
    for (int i = degree_; i >= 0; --i) {
      S row(0);
      for (int j = degree_ - i; j >= 0; --j) row = row * y + c_(i, j);
      acc = acc * x + row;
    }
    return acc;
  }

  // p(x + x0, y + y0), exact for polynomials of degree <= degree().
  BiPoly shifted(const S& x0, const S& y0) const {
    const int N = degree_;
    std::vector<S> px(N + 1, S(1)), py(N + 1, S(1));
    for (int k = 1; k <= N; ++k) { px[k] = px[k - 1] * x0; py[k] = py[k - 1] * y0; }
    BiPoly r(N);
    for (int i = 0; i <= N; ++i)
      for (int j = 0; i + j <= N; ++j) {
        if (is_exact_zero(c_(i, j))) continue;
        for (int k = 0; k <= i; ++k)
          for (int l = 0; l <= j; ++l)
            r.c_(k, l) += c_(i, j) * S(binomial(i, k) * binomial(j, l)) * px[i - k] * py[j - l];
      }
    return r;
  }

  template <typename T>
  static T convert(const S& v) {
    if constexpr (std::is_same_v<T, double>) return to_double(v);
    else return T(v);
  }

  template <typename T>
  BiPoly<T> cast() const {
    BiPoly<T> r(degree_);
    for (int i = 0; i <= degree_; ++i)
      for (int j = 0; i + j <= degree_; ++j) r(i, j) = convert<T>(c_(i, j));
    return r;
  }

  static long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }

 private:
  void check(const BiPoly& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("BiPoly degree mismatch");
  }

  int degree_;
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> c_;
};

template <typename S>
S evaluate(const BiPoly<S>& p, const S& x, const S& y) { return p.evaluate(x, y); }

// u(X, Y) truncated at X's degree. Assumes X, Y have no constant term (local substitution).
template <typename S>
BiPoly<S> compose(const BiPoly<S>& u, const BiPoly<S>& X, const BiPoly<S>& Y) {
  const int N = X.degree();
  const int D = std::min(u.degree(), N);
  std::vector<BiPoly<S>> xp(D + 1, BiPoly<S>::constant(N, S(1))), yp(D + 1, BiPoly<S>::constant(N, S(1)));
  for (int k = 1; k <= D; ++k) { xp[k] = xp[k - 1] * X; yp[k] = yp[k - 1] * Y; }
  BiPoly<S> r(N);
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j) {
      const S& c = u(i, j);
      if (is_exact_zero(c)) continue;
      r += (xp[i] * yp[j]) * c;
    }
  return r;
}

}  // namespace affgeo

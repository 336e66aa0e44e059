#pragma once
// Scalar types shared by the numeric and exact layers.
//   double     - the pipeline
//   Rational   - exact mode (errata engine, catalog surfaces)
//   Surd<R>    - a + b*sqrt(R) over the rationals (D3 matrices need sqrt 3)
//   Dual       - forward tangent, used for Jacobians and infinitesimal actions

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace affgeo {

// Thin wrapper over boost's rational.  boost::multiprecision::number has a constructor
// template whose constraint hard-errors on Eigen 3.4 expression types (their
// const_iterator is void), so Eigen's scalar-promotion probes can't be pointed at it.
class Rational {
 public:
  using Value = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(int n) : v_(n) {}        // NOLINT: literals convert implicitly
  Rational(long n) : v_(n) {}       // NOLINT
  Rational(long long n) : v_(n) {}  // NOLINT
  Rational(long long n, long long d) : v_(Integer(n), Integer(d)) {}
  Rational(const Integer& n, const Integer& d) : v_(n, d) {}
  explicit Rational(const Integer& n) : v_(n) {}
  explicit Rational(const Value& v) : v_(v) {}

  const Value& value() const { return v_; }
  Integer numerator() const { return boost::multiprecision::numerator(v_); }
  Integer denominator() const { return boost::multiprecision::denominator(v_); }
  double to_double() const { return v_.convert_to<double>(); }
  int sign() const { return v_.sign(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(Value(-a.v_)); }
  friend Rational operator+(const Rational& a) { return a; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }
  friend Rational abs(const Rational& a) { return a.v_ < 0 ? -a : a; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.v_; }

 private:
  Value v_{0};
};

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.to_double(); }

// "p", "p/q", or a finite decimal like "-0.125" (converted exactly).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

template <int R>
class Surd {
 public:
  Surd() = default;
  Surd(int a) : a_(a) {}  // NOLINT: literals must convert implicitly for Eigen
  Surd(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  static Surd root() { return Surd(0, 1); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }

  Surd conj() const { return Surd(a_, -b_); }
  Rational norm() const { return a_ * a_ - b_ * b_ * R; }

  Surd& operator+=(const Surd& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Surd& operator-=(const Surd& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Surd& operator*=(const Surd& o) {
    Rational a = a_ * o.a_ + b_ * o.b_ * R;
    b_ = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    return *this;
  }
  Surd& operator/=(const Surd& o) {
    Rational n = o.norm();
    if (n == 0) throw std::domain_error("Surd division by zero");
    *this *= o.conj();
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }
  friend Surd operator-(const Surd& x) { return Surd(-x.a_, -x.b_); }
  friend bool operator==(const Surd& x, const Surd& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }

  double to_double() const { return affgeo::to_double(a_) + affgeo::to_double(b_) * std::sqrt(double(R)); }

  friend std::ostream& operator<<(std::ostream& os, const Surd& s) {
    return os << to_string(s.a_) << (s.b_ < 0 ? " - " : " + ") << to_string(abs(s.b_)) << "*sqrt(" << R << ")";
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

template <int R>
double to_double(const Surd<R>& s) { return s.to_double(); }

// Value plus a single tangent direction.
struct Dual {
  double v = 0;
  double d = 0;
  Dual() = default;
  Dual(double value, double tangent = 0) : v(value), d(tangent) {}  // NOLINT

  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  Dual& operator/=(const Dual& o) { d = (d * o.v - v * o.d) / (o.v * o.v); v /= o.v; return *this; }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
  friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v && a.d == b.d; }
  friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }
};

inline double to_double(const Dual& x) { return x.v; }
inline Dual sqrt(const Dual& x) { double s = std::sqrt(x.v); return {s, x.d / (2 * s)}; }

// sqrt(3) in whichever field the scalar lives in.
template <typename S> S sqrt3();
template <> inline double sqrt3<double>() { return std::sqrt(3.0); }
template <> inline Surd<3> sqrt3<Surd<3>>() { return Surd<3>::root(); }
template <> inline Dual sqrt3<Dual>() { return Dual(std::sqrt(3.0)); }

template <typename S>
bool is_exact_zero(const S& x) { return x == S(0); }

}  // namespace affgeo

namespace Eigen {

template <>
struct NumTraits<affgeo::Rational> : GenericNumTraits<affgeo::Rational> {
  using Real = affgeo::Rational;
  using NonInteger = Real;
  using Literal = Real;
  using Nested = Real;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 4, AddCost = 8, MulCost = 16 };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

template <int R>
struct NumTraits<affgeo::Surd<R>> : GenericNumTraits<affgeo::Surd<R>> {
  using Real = affgeo::Surd<R>;
  using NonInteger = Real;
  using Literal = Real;
  using Nested = Real;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 4, AddCost = 8, MulCost = 16 };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<affgeo::Dual> : GenericNumTraits<affgeo::Dual> {
  using Real = affgeo::Dual;
  using NonInteger = Real;
  using Literal = Real;
  using Nested = Real;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 0, ReadCost = 2, AddCost = 2, MulCost = 4 };
  static Real epsilon() { return Real(std::numeric_limits<double>::epsilon()); }
  static Real dummy_precision() { return Real(1e-12); }
  static int digits10() { return std::numeric_limits<double>::digits10; }
};

}  // namespace Eigen

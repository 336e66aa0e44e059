#include "affgeo/mvpoly.hpp"

#include "affgeo/errors.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affgeo {

bool ExponentOrder::operator()(const Exponent& a, const Exponent& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

MvPoly MvPoly::constant(int nvars, const Rational& c) {
  MvPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MvPoly MvPoly::variable(int nvars, int index) {
  MvPoly p(nvars);
  Exponent e(nvars, 0);
  e.at(index) = 1;
  p.add_term(e, 1);
  return p;
}

Rational MvPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MvPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MvPoly::degree() const {
  return terms_.empty() ? -1 : std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
}

Rational MvPoly::evaluate(const std::vector<Rational>& x) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

double MvPoly::evaluate(const std::vector<double>& x) const {
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

MvPoly MvPoly::coefficient_of(int var, int power) const {
  MvPoly r(n_);
  for (const auto& [e, c] : terms_)
    if (e[var] == power) {
      Exponent f = e;
      f[var] = 0;
      r.add_term(f, c);
    }
  return r;
}

MvPoly& MvPoly::operator+=(const MvPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MvPoly& MvPoly::operator-=(const MvPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MvPoly& MvPoly::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MvPoly operator*(const MvPoly& a, const MvPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("MvPoly variable count mismatch");
  MvPoly r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(a.n_);
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string monomial_string(const Exponent& e, const std::vector<std::string>& names) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names.at(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string MvPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Rational a = abs(c);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    const std::string m = monomial_string(e, names);
    if (m == "1") os << affgeo::to_string(a);
    else if (a == 1) os << m;
    else os << affgeo::to_string(a) << "*" << m;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const std::vector<std::string>& names, Expression& out)
      : s_(text), names_(names), out_(out) {}

  void run() {
    out_.root_ = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

 private:
  int add(Expression::Node n) {
    out_.nodes_.push_back(std::move(n));
    return static_cast<int>(out_.nodes_.size()) - 1;
  }
  int binary(char op, int l, int r) { return add({op, Rational(0), -1, l, r}); }

  void skip() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  int expr() {
    int l = term();
    for (;;) {
      if (eat('+')) l = binary('+', l, term());
      else if (eat('-')) l = binary('-', l, term());
      else return l;
    }
  }
  int term() {
    int l = unary();
    for (;;) {
      if (eat('*')) l = binary('*', l, unary());
      else if (eat('/')) l = binary('/', l, unary());
      else return l;
    }
  }
  int unary() {
    if (eat('-')) return add({'~', Rational(0), -1, unary(), -1});
    if (eat('+')) return unary();
    return power();
  }
  int power() {
    int base = primary();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return add({'^', Rational(e), -1, base, -1});
    }
    return base;
  }
  int primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      int e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return add({'n', parse_rational(s_.substr(start, pos_ - start)), -1, -1, -1});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return add({'v', Rational(0), static_cast<int>(i), -1, -1});
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  Expression& out_;
  size_t pos_ = 0;
};

Expression Expression::parse(std::string_view text, const std::vector<std::string>& names) {
  Expression e;
  e.text_ = std::string(text);
  ExpressionParser(text, names, e).run();
  return e;
}

Rational Expression::evaluate(const std::vector<Rational>& x) const { return eval(root_, x); }

Rational Expression::eval(int node, const std::vector<Rational>& x) const {
  const Node& n = nodes_[node];
  switch (n.op) {
    case 'n': return n.value;
    case 'v': return x.at(n.var);
    case '~': return -eval(n.lhs, x);
    case '+': return eval(n.lhs, x) + eval(n.rhs, x);
    case '-': return eval(n.lhs, x) - eval(n.rhs, x);
    case '*': return eval(n.lhs, x) * eval(n.rhs, x);
    case '/': return eval(n.lhs, x) / eval(n.rhs, x);
    case '^': {
      const Rational b = eval(n.lhs, x);
      Rational r(1);
      for (long k = 0; k < n.value.numerator(); ++k) r *= b;
      return r;
    }
  }
  throw std::logic_error("bad expression node");
}

// ---------------------------------------------------------------------------

std::vector<Exponent> simplex_lattice(int nvars, int degree) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  for (int d = 0; d <= degree; ++d) {
    // all exponents of total degree d, in a fixed order
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == nvars - 1) { e[i] = left; out.push_back(e); return; }
      for (int k = left; k >= 0; --k) { e[i] = k; rec(i + 1, left - k); }
    };
    if (nvars == 0) { out.push_back(e); break; }
    rec(0, d);
  }
  return out;
}

namespace {

// (x-o) (x-o-1) ... (x-o-k+1) as coefficients of 1, x, ..., x^k.
std::vector<Rational> falling_factorial_poly(int k, const Rational& o) {
  std::vector<Rational> p{Rational(1)};
  for (int j = 0; j < k; ++j) {
    std::vector<Rational> q(p.size() + 1, Rational(0));
    for (size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= p[i] * (o + Rational(j));
    }
    p = std::move(q);
  }
  return p;
}

Rational falling(int n, int k) {
  if (k > n) return 0;
  Rational r(1);
  for (int j = 0; j < k; ++j) r *= Rational(n - j);
  return r;
}

}  // namespace

MvPoly interpolate(const RationalFunction& f, int nvars, int degree, int checks, const std::vector<Rational>& origin) {
  std::vector<Rational> o = origin;
  if (o.empty()) o.assign(nvars, Rational(0));
  if (static_cast<int>(o.size()) != nvars) throw std::invalid_argument("origin length mismatch");
  const std::vector<Exponent> pts = simplex_lattice(nvars, degree);
  std::vector<Rational> c(pts.size());
  std::vector<Rational> x(nvars);
  for (size_t b = 0; b < pts.size(); ++b) {
    for (int i = 0; i < nvars; ++i) x[i] = o[i] + Rational(pts[b][i]);
    Rational v = f(x);
    for (size_t a = 0; a < b; ++a) {
      if (c[a] == 0) continue;
      Rational phi(1);
      for (int i = 0; i < nvars && phi != 0; ++i) phi *= falling(pts[b][i], pts[a][i]);
      if (phi != 0) v -= c[a] * phi;
    }
    Rational diag(1);
    for (int i = 0; i < nvars; ++i) diag *= falling(pts[b][i], pts[b][i]);
    c[b] = v / diag;
  }

  // ff[i][k]: falling factorial of degree k in variable i
  std::vector<std::vector<std::vector<Rational>>> ff(nvars);
  for (int i = 0; i < nvars; ++i)
    for (int k = 0; k <= degree; ++k) ff[i].push_back(falling_factorial_poly(k, o[i]));
  MvPoly r(nvars);
  for (size_t a = 0; a < pts.size(); ++a) {
    if (c[a] == 0) continue;
    MvPoly term = MvPoly::constant(nvars, c[a]);
    for (int i = 0; i < nvars; ++i) {
      const int k = pts[a][i];
      if (k == 0) continue;
      MvPoly u(nvars);
      for (int p = 0; p <= k; ++p) {
        Exponent e(nvars, 0);
        e[i] = p;
        u.add_term(e, ff[i][k][p]);
      }
      term = term * u;
    }
    r += term;
  }

  for (int t = 0; t < checks; ++t) {
    for (int i = 0; i < nvars; ++i) x[i] = Rational(((i + t) % 2 ? -1 : 1) * (3 + 5 * i + 7 * t), 2 + i + 3 * t);
    Rational want;
    try {
      want = f(x);
    } catch (const std::domain_error&) {
      continue;
    }
    if (r.evaluate(x) != want) throw std::runtime_error("interpolation check failed: degree bound too small");
  }
  return r;
}

}  // namespace affgeo

#include "affgeo/surfaces.hpp"

#include "affgeo/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace affgeo {

namespace {

using Q = Rational;
using P = BiPoly<Q>;
constexpr int N = kMaxSurfaceDegree;

P monomials(std::initializer_list<std::tuple<int, int, Q>> terms) {
  P p(N);
  for (const auto& [i, j, c] : terms) p(i, j) += c;
  return p;
}

P std_cubic() { return monomials({{2, 0, Q(1, 2)}, {0, 2, Q(1, 2)}, {3, 0, Q(1, 6)}, {1, 2, Q(-1, 2)}}); }

P paraboloid() { return monomials({{2, 0, Q(1, 2)}, {0, 2, Q(1, 2)}}); }

std::vector<CatalogSurface> build() {
  std::vector<CatalogSurface> c;
  const Domain quarter{Q(-1, 4), Q(1, 4), Q(-1, 4), Q(1, 4)};
  c.push_back({"std-cubic", std_cubic(), quarter, "(x^2 + y^2)/2 + (x^3 - 3 x y^2)/6"});

  // quartic with a40..a04 = (1, 2, -1, 0, 3)/24; monomial coefficient a_ij / (i! j!)
  P q = std_cubic();
  const Q a4[5] = {Q(1, 24), Q(2, 24), Q(-1, 24), Q(0), Q(3, 24)};
  for (int m = 0; m < 5; ++m) q(4 - m, m) += a4[m] / Q(factorial(4 - m) * factorial(m));
  c.push_back({"std-cubic-q", q, quarter, "std-cubic plus the quartic a40..a04 = (1, 2, -1, 0, 3)/24"});

  // 1 - sqrt(1 - r^2) = r^2/2 + r^4/8 + r^6/16 + 5 r^8/128
  const P r2 = paraboloid() * Q(2);
  P s(N), rp = r2;
  const Q series[4] = {Q(1, 2), Q(1, 8), Q(1, 16), Q(5, 128)};
  for (int k = 0; k < 4; ++k) {
    s += rp * series[k];
    if (k < 3) rp = rp * r2;
  }
  c.push_back({"sphere8", s, {Q(-3, 10), Q(3, 10), Q(-3, 10), Q(3, 10)}, "degree-8 Taylor polynomial of 1 - sqrt(1 - x^2 - y^2)"});

  c.push_back({"paraboloid", paraboloid(), {}, "(x^2 + y^2)/2"});

  // Image of the paraboloid under the non-orthogonal map
  //   X = 2x + y + 1/4,  Y = x/2 + 3y/2 - 1/5,  Z = x/3 - y + 3u/2 + 1/3,
  // written as a graph over (X, Y).
  {
    const Q a = 2, b = 1, cc = Q(1, 2), d = Q(3, 2), tx = Q(1, 4), ty = Q(-1, 5);
    const Q det = a * d - b * cc;
    const P X = P::x(N), Y = P::y(N);
    const P dX = X - P::constant(N, tx), dY = Y - P::constant(N, ty);
    const P x = (dX * d - dY * b) * (Q(1) / det);
    const P y = (dY * a - dX * cc) * (Q(1) / det);
    P t = compose(paraboloid(), x, y) * Q(3, 2) + x * Q(1, 3) - y + P::constant(N, Q(1, 3));
    c.push_back({"tilted-quadric", t, {}, "paraboloid under a fixed non-orthogonal affine map"});
  }
  return c;
}

Q json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Q(v.get<long long>());
  if (v.is_number()) return parse_rational(v.dump());
  throw ParseError("expected a number or rational string, got " + v.dump());
}

CatalogSurface surface_from(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("coeffs")) throw ParseError("surface needs \"name\" and \"coeffs\"");
  CatalogSurface s{j.at("name").get<std::string>(), P(N), {}, "loaded from file"};
  for (const auto& [key, value] : j.at("coeffs").items()) {
    int i = -1, k = -1;
    char comma = 0;
    std::istringstream in(key);
    if (!(in >> i >> comma >> k) || comma != ',' || !in.eof() || i < 0 || k < 0)
      throw ParseError("coefficient key must be \"i,j\": '" + key + "'");
    if (i + k > N) throw ParseError("monomial x^" + std::to_string(i) + " y^" + std::to_string(k) + " exceeds degree 8");
    s.height(i, k) = json_rational(value);
  }
  if (j.contains("domain")) {
    const auto& d = j.at("domain");
    if (!d.is_array() || d.size() != 4) throw ParseError("domain must be [x0, x1, y0, y1]");
    s.domain = {json_rational(d[0]), json_rational(d[1]), json_rational(d[2]), json_rational(d[3])};
    if (!(s.domain.x0 < s.domain.x1) || !(s.domain.y0 < s.domain.y1)) throw ParseError("empty domain");
  }
  return s;
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

bool Domain::contains(double x, double y) const {
  return x >= to_double(x0) && x <= to_double(x1) && y >= to_double(y0) && y <= to_double(y1);
}

bool Domain::contains(const Rational& x, const Rational& y) const { return !(x < x0) && !(x1 < x) && !(y < y0) && !(y1 < y); }

const std::vector<CatalogSurface>& catalog() {
  static const std::vector<CatalogSurface> c = build();
  return c;
}

const CatalogSurface& catalog_surface(const std::string& name, const std::vector<CatalogSurface>& surfaces) {
  for (const auto& s : surfaces)
    if (s.name == name) return s;
  throw std::out_of_range("unknown surface '" + name + "'");
}

Jet<Rational> jet_at(const CatalogSurface& s, const Rational& x0, const Rational& y0, int order) {
  if (order < 2 || order > N) throw std::invalid_argument("jet order must be in 2..8");
  if (!s.domain.contains(x0, y0)) throw OutOfDomain("(" + to_string(x0) + ", " + to_string(y0) + ") outside " + s.name);
  return jet_of_polynomial(s.height, x0, y0, order);
}

Jet<double> jet_at(const CatalogSurface& s, double x0, double y0, int order) {
  if (order < 2 || order > N) throw std::invalid_argument("jet order must be in 2..8");
  if (!s.domain.contains(x0, y0))
    throw OutOfDomain("(" + std::to_string(x0) + ", " + std::to_string(y0) + ") outside " + s.name);
  return jet_of_polynomial(s.height.cast<double>(), x0, y0, order);
}

CatalogSurface surface_from_json(const std::string& text) { return surface_from(parse_json(text)); }

std::vector<CatalogSurface> surfaces_from_json(const std::string& text) {
  const nlohmann::json j = parse_json(text);
  std::vector<CatalogSurface> out;
  if (j.is_array())
    for (const auto& e : j) out.push_back(surface_from(e));
  else
    out.push_back(surface_from(j));
  return out;
}

std::vector<CatalogSurface> catalog_with_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<CatalogSurface> all = catalog();
  for (auto& s : surfaces_from_json(buf.str())) {
    bool replaced = false;
    for (auto& e : all)
      if (e.name == s.name) { e = s; replaced = true; }
    if (!replaced) all.push_back(std::move(s));
  }
  return all;
}

}  // namespace affgeo

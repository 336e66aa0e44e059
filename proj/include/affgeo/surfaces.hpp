#pragma once
// Test surfaces: graphs z = u(x, y) of polynomials with exact rational coefficients.

#include "affgeo/bipoly.hpp"
#include "affgeo/jet.hpp"

#include <string>
#include <vector>

namespace affgeo {

inline constexpr int kMaxSurfaceDegree = 8;

struct Domain {
  Rational x0{-1}, x1{1}, y0{-1}, y1{1};
  bool contains(double x, double y) const;
  bool contains(const Rational& x, const Rational& y) const;
};

struct CatalogSurface {
  std::string name;
  BiPoly<Rational> height;  // degree kMaxSurfaceDegree, monomial coefficients
  Domain domain;
  std::string description;
};

// std-cubic, std-cubic-q, sphere8, paraboloid, tilted-quadric.
const std::vector<CatalogSurface>& catalog();

// Throws std::out_of_range for unknown names.
const CatalogSurface& catalog_surface(const std::string& name, const std::vector<CatalogSurface>& surfaces = catalog());

// Exact recentering; order <= 8.  Throws OutOfDomain.
Jet<Rational> jet_at(const CatalogSurface& s, const Rational& x0, const Rational& y0, int order);
// Double version: the same recentering carried out in floating point.
Jet<double> jet_at(const CatalogSurface& s, double x0, double y0, int order);

// {"name": ..., "coeffs": {"i,j": "p/q", ...}, "domain": [x0, x1, y0, y1]}; domain bounds may be
// numbers or rational strings.  A file may hold one such object or an array of them.  Throws
// ParseError.
CatalogSurface surface_from_json(const std::string& text);
std::vector<CatalogSurface> surfaces_from_json(const std::string& text);
// Catalog with entries from `path` added, replacing built-ins of the same name.
std::vector<CatalogSurface> catalog_with_file(const std::string& path);

}  // namespace affgeo

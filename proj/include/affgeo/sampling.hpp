#pragma once
// Seeded generators for the property checks (random jets, maps, standard jets).

#include "affgeo/jet.hpp"
#include "affgeo/normalize.hpp"

#include <random>

namespace affgeo {

inline Jet<double> random_jet(std::mt19937_64& rng, int order, double spread = 1.0) {
  std::normal_distribution<double> n(0.0, spread);
  Jet<double> j(order, Vector3<double>(n(rng), n(rng), n(rng)));
  for (int d = 1; d <= order; ++d)
    for (int i = 0; i <= d; ++i) j = j.with(i, d - i, n(rng));
  return j;
}

// Elliptical with a comfortably nonzero cubic.
inline Jet<double> random_regular_jet(std::mt19937_64& rng, int order = 4) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    Jet<double> j = random_jet(rng, order);
    const double a = 1.0 + std::abs(u(rng)), c = 1.0 + std::abs(u(rng)), b = 0.5 * u(rng);
    j = j.with(2, 0, a).with(1, 1, b).with(0, 2, c);
    if (std::abs(j.a(3, 0)) + std::abs(j.a(0, 3)) > 0.3) return j;
  }
}

// Standard 3-jet at the origin with quartic coefficients a_{4-m,m} = I_m.
inline Jet<double> standard_jet(const InvariantTuple<double>& I, int order = 4) {
  Jet<double> j = Jet<double>(order).with(2, 0, 1).with(0, 2, 1).with(3, 0, 1).with(1, 2, -1);
  for (int m = 0; m < 5; ++m) j = j.with(4 - m, m, I(m));
  return j;
}

// Well-conditioned: identity plus a moderate perturbation, transversal for small slopes.
inline AffineMap3<double> random_map(std::mt19937_64& rng, double spread = 0.3) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    AffineMap3<double> m;
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) m.linear(i, k) += spread * u(rng);
      m.translation(i) = u(rng);
    }
    if (std::abs(m.det()) > 0.3) return m;
  }
}

}  // namespace affgeo

#include "affgeo/d3.hpp"

namespace affgeo {

std::string d3_name(int index) {
  static const std::array<const char*, kD3Order> names = {"id", "sigma", "sigma^2", "tau", "sigma tau", "sigma^2 tau"};
  return names.at(index);
}

int d3_multiply(int g, int h) {
  const Matrix2<ExactSqrt3> p = d3_linear<ExactSqrt3>(g) * d3_linear<ExactSqrt3>(h);
  for (int k = 0; k < kD3Order; ++k)
    if (d3_linear<ExactSqrt3>(k) == p) return k;
  throw std::logic_error("D3 not closed under multiplication");
}

int d3_inverse(int g) {
  for (int k = 0; k < kD3Order; ++k)
    if (d3_multiply(g, k) == 0) return k;
  throw std::logic_error("D3 element without inverse");
}

Matrix5<ExactSqrt3> d3_action_oracle(int index) { return quartic_action(d3_linear<ExactSqrt3>(index)); }

Matrix5<ExactSqrt3> d3_action_printed(int index) {
  const ExactSqrt3 r = ExactSqrt3::root();
  Matrix5<ExactSqrt3> sigma;
  sigma << 1, r, 3, 3 * r, 9,
           -4 * r, -8, -4 * r, 0, 12 * r,
           18, 6 * r, -2, -6 * r, 18,
           -12 * r, 0, 4 * r, -8, 4 * r,
           9, -3 * r, 3, -r, 1;
  sigma /= ExactSqrt3(16);
  Matrix5<ExactSqrt3> tau = Matrix5<ExactSqrt3>::Zero();
  tau.diagonal() << 1, -1, 1, -1, 1;
  switch (index) {
    case 0: return Matrix5<ExactSqrt3>::Identity();
    case 1: return sigma;
    case 2: return sigma * sigma;
    case 3: return tau;
    case 4: return sigma * tau;
    case 5: return sigma * sigma * tau;
    default: throw std::out_of_range("D3 index must be 0..5");
  }
}

const Eigen::Matrix<double, 5, 5>& d3_action(int index) {
  static const std::array<Eigen::Matrix<double, 5, 5>, kD3Order> table = [] {
    std::array<Eigen::Matrix<double, 5, 5>, kD3Order> t;
    for (int g = 0; g < kD3Order; ++g) {
      const auto exact = d3_action_oracle(g);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) t[g](i, j) = exact(i, j).to_double();
    }
    return t;
  }();
  return table.at(index);
}

}  // namespace affgeo

#include "affgeo/prolong.hpp"

#include <array>
#include <random>

namespace affgeo {

std::string to_string(JetCoord c) {
  static const std::array<const char*, kJetDim> names = {"x", "y", "a00", "a10", "a01", "a20", "a11", "a02", "a30", "a21", "a12", "a03"};
  return names.at(static_cast<int>(c));
}

std::string to_string(Generator g) {
  static const std::array<const char*, kGenerators> names = {"X1", "X2", "X3", "X11", "X12", "X13", "X21", "X22", "X23", "X31", "X32", "X33"};
  return names.at(static_cast<int>(g));
}

JetCoord jet_coord(int i, int j) {
  static const int offset[4] = {2, 3, 5, 8};  // first index of each total degree
  const int n = i + j;
  if (i < 0 || j < 0 || n > 3) throw UnknownCoordinate("a_" + std::to_string(i) + std::to_string(j) + " is not an order <= 3 coordinate");
  return static_cast<JetCoord>(offset[n] + j);
}

std::pair<int, int> jet_indices(JetCoord c) {
  const int k = static_cast<int>(c);
  if (k < 2 || k >= kJetDim) throw UnknownCoordinate(to_string(c) + " is not a fiber coordinate");
  static const int offset[4] = {2, 3, 5, 8};
  int n = 3;
  while (offset[n] > k) --n;
  const int j = k - offset[n];
  return {n - j, j};
}

Eigen::Matrix4d generator_matrix(Generator g) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  const int k = static_cast<int>(g);
  if (k < 3) m(k, 3) = 1;
  else m((k - 3) / 3, (k - 3) % 3) = 1;
  return m;
}

JetPoint<double> prolonged_field_from_action(Generator g, const JetPoint<double>& p) {
  Jet<Dual> jet(3, Vector3<Dual>(p(0), p(1), p(2)));
  for (int n = 1; n <= 3; ++n)
    for (int j = 0; j <= n; ++j) jet = jet.with(n - j, j, Dual(p(static_cast<int>(jet_coord(n - j, j)))));

  // jet_apply_affine is passive; the image under exp(eA) is seen through exp(-eA).
  const Eigen::Matrix4d A = generator_matrix(g);
  AffineMap3<Dual> map;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) map.linear(i, j) = Dual(i == j ? 1.0 : 0.0, -A(i, j));
    map.translation(i) = Dual(0, -A(i, 3));
  }
  const Jet<Dual> image = jet_apply_affine(jet, map);

  JetPoint<double> f;
  f(0) = image.base()(0).d;
  f(1) = image.base()(1).d;
  f(2) = image.base()(2).d;
  for (int n = 1; n <= 3; ++n)
    for (int j = 0; j <= n; ++j) f(static_cast<int>(jet_coord(n - j, j))) = image.a(n - j, j).d;
  return f;
}

namespace {

// psi of a general element of aff(3) given as a 4x4 matrix.
JetPoint<double> field_of_matrix(const Eigen::Matrix4d& m, const JetPoint<double>& p, Transcription t) {
  JetPoint<double> f = JetPoint<double>::Zero();
  for (int k = 0; k < kGenerators; ++k) {
    const Generator g = static_cast<Generator>(k);
    const double c = (k < 3) ? m(k, 3) : m((k - 3) / 3, (k - 3) % 3);
    if (c != 0) f += c * prolonged_field(g, p, t);
  }
  return f;
}

// (V . grad) W at p by central differences.
JetPoint<double> directional(Generator w, const JetPoint<double>& v, const JetPoint<double>& p, double h, Transcription t) {
  JetPoint<double> d = JetPoint<double>::Zero();
  for (int k = 0; k < kJetDim; ++k) {
    if (v(k) == 0) continue;
    JetPoint<double> up = p, dn = p;
    up(k) += h;
    dn(k) -= h;
    d += v(k) * (prolonged_field(w, up, t) - prolonged_field(w, dn, t)) / (2 * h);
  }
  return d;
}

}  // namespace

std::vector<BracketCheck> verify_prolongation_bracket(Transcription t, std::uint64_t seed, int points, double h) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<JetPoint<double>> samples(points);
  for (auto& p : samples)
    for (int k = 0; k < kJetDim; ++k) p(k) = unit(rng);

  std::vector<BracketCheck> out;
  for (int a = 0; a < kGenerators; ++a)
    for (int b = a + 1; b < kGenerators; ++b) {
      const Generator ga = static_cast<Generator>(a), gb = static_cast<Generator>(b);
      // Vector fields of a linear action form an anti-representation: [V_A, V_B] = V_{BA - AB}.
      const Eigen::Matrix4d A = generator_matrix(ga), B = generator_matrix(gb);
      const Eigen::Matrix4d C = B * A - A * B;
      double worst = 0;
      for (const auto& p : samples) {
        const JetPoint<double> va = prolonged_field(ga, p, t), vb = prolonged_field(gb, p, t);
        const JetPoint<double> lhs = directional(gb, va, p, h, t) - directional(ga, vb, p, h, t);
        worst = std::max(worst, (lhs - field_of_matrix(C, p, t)).cwiseAbs().maxCoeff());
      }
      out.push_back({ga, gb, worst});
    }
  return out;
}

}  // namespace affgeo

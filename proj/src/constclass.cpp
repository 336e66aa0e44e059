#include "affgeo/constclass.hpp"

#include "affgeo/errors.hpp"
#include "affgeo/normalize.hpp"
#include "affgeo/parallel.hpp"

#include <Eigen/QR>
#include <cmath>
#include <limits>
#include <random>

namespace affgeo {

std::string to_string(CoefficientSet c) { return c == CoefficientSet::AsPrinted ? "as-printed" : "adjudicated"; }

double max_structural_residual(const InvariantTuple<double>& I) { return structural_residuals(I).cwiseAbs().maxCoeff(); }

std::string to_string(FamilyId id) {
  switch (id) {
    case FamilyId::Row1: return "Row1";
    case FamilyId::Row2: return "Row2";
    case FamilyId::Row3: return "Row3";
    case FamilyId::Row4: return "Row4";
    case FamilyId::Row5: return "Row5";
    case FamilyId::Row6: return "Row6";
    case FamilyId::A1: return "A1";
    case FamilyId::A2: return "A2";
    case FamilyId::A3: return "A3";
    case FamilyId::B: return "B";
    case FamilyId::C: return "C";
  }
  return "?";
}

std::optional<FamilyId> family_from_string(const std::string& name) {
  for (FamilyId id : kAllFamilies)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

int family_parameter_count(FamilyId id) { return id == FamilyId::Row3 || id == FamilyId::B ? 2 : 1; }

bool family_has_sign_branch(FamilyId id) {
  return id == FamilyId::Row4 || id == FamilyId::Row5 || id == FamilyId::Row6;
}

namespace {

InvariantTuple<double> tuple(double a, double b, double c, double d, double e) {
  InvariantTuple<double> I;
  I << a, b, c, d, e;
  return I;
}

void require_open_0_3(double k, const char* what) {
  if (!(k > 0 && k < 3)) throw DomainViolation(std::string(what) + " needs 0 < k < 3");
}

}  // namespace

InvariantTuple<double> family_tuple(FamilyId id, const FamilyParams& p, CoefficientSet set) {
  const double k = p.k, l = p.l, s = p.sign >= 0 ? 1.0 : -1.0;
  const bool printed = set == CoefficientSet::AsPrinted;
  const double r3 = std::sqrt(3.0);
  switch (id) {
    case FamilyId::Row1:
    case FamilyId::A1:
      return tuple(k, 0, -1, 0, 3);
    case FamilyId::Row2:
    case FamilyId::A2:
      return tuple(-3 * k * k + 6 * k, 0, printed ? -k * k - 2 * k + 2 : -k * k + 2 * k + 2, 0, -3 * k * k - 6 * k);
    case FamilyId::Row3:
      return tuple(k, printed ? l * (2 * k - 3) : l, k, 0, -3 * k);
    case FamilyId::A3:
      return tuple(k, 0, k, 0, -3 * k);
    case FamilyId::B: {
      const double i31 = printed ? l * (2 * k - 3) : l;
      if (!(i31 > 0)) throw DomainViolation(printed ? "B needs l(2k - 3) > 0" : "B needs I31 > 0");
      return tuple(k, i31, k, 0, -3 * k);
    }
    case FamilyId::Row4: {
      require_open_0_3(k, "Row4");
      const double q = std::sqrt(k * (3 - k));
      return tuple(k, s * q, -k + 2, -s * q, k);
    }
    case FamilyId::C: {
      require_open_0_3(k, "C");
      const double q = std::sqrt(k * (3 - k));
      return tuple(k, q, -k + 2, -q, k);
    }
    case FamilyId::Row5:
      return tuple(-3 * k * k + s * 0.75 * k + 2.25, -0.75 * r3 * (3 * k - s), -k * k + s * 0.25 * k - 0.25,
                   -0.75 * r3 * (k + s), -3 * k * k - s * 5.25 * k + 2.25);
    case FamilyId::Row6: {
      const double c = printed ? std::sqrt(1.5) : r3 / 2;
      return tuple(k, s * c * (2 * k - 3), 3 * k - 1, s * 3 * c * (2 * k - 1), 9 * k - 6);
    }
  }
  throw std::invalid_argument("unknown family");
}

FamilyReport verify_family(FamilyId id, int n_samples, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(id));
  std::uniform_real_distribution<double> wide(-10, 10), open(0, 3);
  const bool bounded = id == FamilyId::Row4 || id == FamilyId::C;
  FamilyReport rep{id};
  for (int n = 0; n < n_samples; ++n) {
    FamilyParams p;
    do p.k = bounded ? open(rng) : wide(rng);
    while (bounded && !(p.k > 0 && p.k < 3));
    p.l = wide(rng);
    p.sign = n % 2 == 0 ? 1 : -1;
    FamilyParams printed = p, adjudicated = p;
    if (id == FamilyId::B) {
      if (printed.l * (2 * printed.k - 3) <= 0) printed.l = -printed.l;
      adjudicated.l = std::abs(adjudicated.l);
    }
    const InvariantTuple<double> Ip = family_tuple(id, printed, CoefficientSet::AsPrinted);
    const InvariantTuple<double> Ia = family_tuple(id, adjudicated, CoefficientSet::Adjudicated);
    rep.max_printed = std::max(rep.max_printed, max_structural_residual(Ip));
    rep.max_adjudicated = std::max(rep.max_adjudicated, max_structural_residual(Ia));
    for (int g = 0; g < kD3Order; ++g) rep.max_d3_image = std::max(rep.max_d3_image, max_structural_residual(d3_apply(Ia, g)));
    ++rep.samples;
  }
  rep.erratum = rep.max_printed > tol && rep.max_adjudicated <= tol;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct Fit {
  FamilyParams params;
  double residual = std::numeric_limits<double>::infinity();
};

double maxabs(std::initializer_list<double> v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

Fit fit_family(FamilyId id, const InvariantTuple<double>& x) {
  const double a = x(0), b = x(1), c = x(2), d = x(3), e = x(4);
  Fit f;
  switch (id) {
    case FamilyId::A1:
      f.params.k = a;
      f.residual = maxabs({b, c + 1, d, e - 3});
      break;
    case FamilyId::A2: {
      const double k = (a - e) / 12;  // I40 - I04 = 12k
      f.params.k = k;
      f.residual = maxabs({a - (-3 * k * k + 6 * k), b, c - (-k * k + 2 * k + 2), d, e - (-3 * k * k - 6 * k)});
      break;
    }
    case FamilyId::A3:
      f.params.k = a;
      f.residual = maxabs({b, c - a, d, e + 3 * a});
      break;
    case FamilyId::B:
      f.params.k = a;
      f.params.l = b;
      if (b > 0) f.residual = maxabs({c - a, d, e + 3 * a});
      break;
    case FamilyId::C: {
      const double q = std::sqrt(std::max(a * (3 - a), 0.0));
      f.params.k = a;
      f.residual = maxabs({b - q, c - (2 - a), d + q, e - a});
      break;
    }
    default:
      throw std::invalid_argument("not a canonical family");
  }
  return f;
}

}  // namespace

OrbitMatch orbit_reduce(const InvariantTuple<double>& I, double eps_fit) {
  OrbitMatch best;
  best.fit_residual = std::numeric_limits<double>::infinity();
  for (FamilyId id : kCanonicalFamilies)
    for (int g = 0; g < kD3Order; ++g) {
      const Fit f = fit_family(id, d3_apply(I, g));
      if (f.residual <= eps_fit) return {true, id, f.params, g, f.residual};
      if (f.residual < best.fit_residual) best = {false, id, f.params, g, f.residual};
    }
  return best;
}

// ---------------------------------------------------------------------------

namespace {

using Vector9 = Eigen::Matrix<double, 9, 1>;
using Jacobian = Eigen::Matrix<double, 9, 5>;

Vector9 residual_vector(const InvariantTuple<double>& I) {
  const Matrix3<double> E = structural_residuals(I);
  return Eigen::Map<const Vector9>(E.data());
}

Jacobian residual_jacobian(const InvariantTuple<double>& I) {
  Jacobian J;
  for (int j = 0; j < 5; ++j) {
    InvariantTuple<Dual> x;
    for (int k = 0; k < 5; ++k) x(k) = Dual(I(k), k == j ? 1.0 : 0.0);
    const Matrix3<Dual> E = structural_residuals(x);
    for (int c = 0; c < 3; ++c)
      for (int r = 0; r < 3; ++r) J(c * 3 + r, j) = E(r, c).d;
  }
  return J;
}

}  // namespace

SolveResult solve_constant_system(const InvariantTuple<double>& seed, int fixed_coordinate, const SolverOptions& options) {
  if (fixed_coordinate < 0 || fixed_coordinate > 4) throw std::out_of_range("fixed coordinate must be 0..4");
  SolveResult out;
  out.seed = seed;
  out.fixed_coordinate = fixed_coordinate;
  InvariantTuple<double> x = seed;
  for (int it = 0; it <= options.max_iterations; ++it) {
    const Vector9 r = residual_vector(x);
    out.iterations = it;
    out.residual = r.cwiseAbs().maxCoeff();
    if (!std::isfinite(out.residual)) break;
    if (out.residual <= options.tol) {
      out.converged = true;
      break;
    }
    if (it == options.max_iterations) break;
    Jacobian J = residual_jacobian(x);
    J.col(fixed_coordinate).setZero();
    const Eigen::Matrix<double, 5, 1> dx = -J.completeOrthogonalDecomposition().solve(r);
    double lambda = 1;
    InvariantTuple<double> next = x + lambda * dx.transpose();
    while (lambda > options.min_step) {
      next = x + lambda * dx.transpose();
      if (residual_vector(next).norm() < r.norm()) break;
      lambda *= options.damping;
    }
    x = next;
  }
  out.solution = x;
  if (out.converged) out.classification = orbit_reduce(x);
  return out;
}

std::vector<SolveResult> solve_multistart(int n, std::uint64_t seed, double box, int threads, const SolverOptions& options) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-box, box);
  std::vector<InvariantTuple<double>> seeds(n);
  for (auto& s : seeds)
    for (int k = 0; k < 5; ++k) s(k) = u(rng);

  std::vector<SolveResult> results(n);
  parallel_for(n, threads, [&](int i) { results[i] = solve_constant_system(seeds[i], i % 5, options); });
  return results;
}

// ---------------------------------------------------------------------------

Eigen::Matrix2d CoframeModel::at(double u, double v) const {
  Eigen::Matrix2d W;
  switch (kind) {
    case CoframeCase::Exact:
      W.setIdentity();
      break;
    case CoframeCase::Exponential:
      W << std::exp(-Y1 * v), 0, 0, 1;
      break;
    case CoframeCase::Reduced:
      // w1 = Y1 w1' - w2'/Y2, w2 = Y2 w1' with w1' = e^-v du, w2' = dv
      W << Y1 * std::exp(-v), -1 / Y2, Y2 * std::exp(-v), 0;
      break;
  }
  (void)u;
  return W;
}

CoframeModel canonical_coframe(double Y1, double Y2) {
  CoframeModel m;
  m.Y1 = Y1;
  m.Y2 = Y2;
  if (Y2 != 0) m.kind = CoframeCase::Reduced;
  else if (Y1 != 0) m.kind = CoframeCase::Exponential;
  else m.kind = CoframeCase::Exact;
  return m;
}

CoframeCheck check_coframe(const CoframeModel& model, double h, int n) {
  CoframeCheck c;
  c.min_volume = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double u = model.u0 + (model.u1 - model.u0) * i / std::max(n - 1, 1);
      const double v = model.v0 + (model.v1 - model.v0) * j / std::max(n - 1, 1);
      const Eigen::Matrix2d W = model.at(u, v);
      const Eigen::Matrix2d Wu = (model.at(u + h, v) - model.at(u - h, v)) / (2 * h);
      const Eigen::Matrix2d Wv = (model.at(u, v + h) - model.at(u, v - h)) / (2 * h);
      const double vol = W.determinant();
      // d(a du + b dv) = (b_u - a_v) du^dv
      const double r1 = Wu(0, 1) - Wv(0, 0) - model.Y1 * vol;
      const double r2 = Wu(1, 1) - Wv(1, 0) - model.Y2 * vol;
      c.residual1 = std::max(c.residual1, std::abs(r1));
      c.residual2 = std::max(c.residual2, std::abs(r2));
      c.min_volume = std::min(c.min_volume, std::abs(vol));
    }
  return c;
}

}  // namespace affgeo

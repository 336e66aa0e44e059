#pragma once
// Gauss-Jordan elimination over exact fields (Rational, Surd).

#include "affgeo/scalar.hpp"

#include <Eigen/Core>
#include <optional>

namespace affgeo {

template <typename S> using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S> using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Unique solution of A x = b (A may have more rows than columns); nullopt if the system
// is inconsistent or underdetermined.
template <typename S>
std::optional<VectorX<S>> solve_exact(MatrixX<S> A, VectorX<S> b) {
  const Eigen::Index rows = A.rows(), cols = A.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_exact_zero(A(p, c))) ++p;
    if (p == rows) return std::nullopt;
    if (p != r) { A.row(p).swap(A.row(r)); std::swap(b(p), b(r)); }
    const S inv = S(1) / A(r, c);
    for (Eigen::Index k = c; k < cols; ++k) A(r, k) *= inv;
    b(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_exact_zero(A(i, c))) continue;
      const S f = A(i, c);
      for (Eigen::Index k = c; k < cols; ++k) A(i, k) -= f * A(r, k);
      b(i) -= f * b(r);
    }
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i)
    if (!is_exact_zero(b(i))) return std::nullopt;
  return VectorX<S>(b.head(cols));
}

}  // namespace affgeo

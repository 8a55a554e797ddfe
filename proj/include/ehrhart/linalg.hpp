#pragma once

// Exact dense linear algebra over Eigen matrices with exact scalar types
// (Rational, Integer). Eigen's own decompositions rely on floating-point
// pivot thresholds, so elimination is done here.

#include "ehrhart/error.hpp"
#include "ehrhart/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ehrhart {

/// Fraction-free Bareiss determinant; valid for integral domains (every
/// intermediate division is exact).
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& matrix) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> a = matrix;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar previous = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Reduced row echelon form over a field; returns pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> reduce_rows(MatrixX<Scalar>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.row(row).swap(a.row(p));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Scalar f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& matrix) {
  MatrixX<Rational> a = matrix.template cast<Rational>();
  return static_cast<Eigen::Index>(reduce_rows(a).size());
}

/// Indices of a maximal linearly independent subset of rows, chosen greedily
/// in row order.
template <typename Derived>
std::vector<Eigen::Index> independent_rows(const Eigen::MatrixBase<Derived>& matrix) {
  std::vector<Eigen::Index> chosen;
  MatrixX<Rational> basis(0, matrix.cols());
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    MatrixX<Rational> trial(basis.rows() + 1, matrix.cols());
    trial.topRows(basis.rows()) = basis;
    trial.row(basis.rows()) = matrix.row(i).template cast<Rational>();
    if (rank(trial) == trial.rows()) {
      basis = std::move(trial);
      chosen.push_back(i);
      if (basis.rows() == matrix.cols()) break;
    }
  }
  return chosen;
}

/// Exact inverse over the rationals; empty when singular.
template <typename Derived>
std::optional<MatrixX<Rational>> try_inverse(const Eigen::MatrixBase<Derived>& matrix) {
  const Eigen::Index n = matrix.rows();
  if (n != matrix.cols()) return std::nullopt;
  if (n == 0) return MatrixX<Rational>(0, 0);
  MatrixX<Rational> aug(n, 2 * n);
  aug.leftCols(n) = matrix.template cast<Rational>();
  aug.rightCols(n) = MatrixX<Rational>::Identity(n, n);
  const auto pivots = reduce_rows(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots.back() >= n) return std::nullopt;
  return MatrixX<Rational>(aug.rightCols(n));
}

template <typename Derived>
MatrixX<Rational> inverse(const Eigen::MatrixBase<Derived>& matrix) {
  auto inv = try_inverse(matrix);
  if (!inv) throw Error(ErrorKind::SingularMap, "matrix is not invertible");
  return *std::move(inv);
}

/// Basis of the right null space, one vector per column of the result.
template <typename Derived>
MatrixX<Rational> null_space(const Eigen::MatrixBase<Derived>& matrix) {
  MatrixX<Rational> a = matrix.template cast<Rational>();
  const auto pivots = reduce_rows(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  MatrixX<Rational> basis(a.cols(), a.cols() - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorX<Rational> v = VectorX<Rational>::Zero(a.cols());
    v(free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -a(r, free);
    basis.col(k++) = v;
  }
  return basis;
}

}  // namespace ehrhart

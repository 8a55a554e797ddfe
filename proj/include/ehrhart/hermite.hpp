#pragma once

#include "ehrhart/scalar.hpp"

#include <vector>

namespace ehrhart {

template <typename Scalar>
struct HermiteDecomposition {
  MatrixX<Scalar> form;       // H = U * A
  MatrixX<Scalar> transform;  // U, unimodular
  std::vector<Eigen::Index> pivots;
};

namespace detail {

template <typename Scalar>
Scalar extended_gcd(const Scalar& a, const Scalar& b, Scalar& x, Scalar& y) {
  Scalar old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Scalar q = old_r / r;
    Scalar tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace detail

/// Row-style Hermite normal form of an integer matrix: H = U * A with U
/// unimodular, H in row echelon form, pivots positive and every entry above
/// a pivot reduced into [0, pivot).
template <typename Derived>
HermiteDecomposition<typename Derived::Scalar> hermite_normal_form(
    const Eigen::MatrixBase<Derived>& matrix) {
  using Scalar = typename Derived::Scalar;
  HermiteDecomposition<Scalar> out;
  MatrixX<Scalar>& h = out.form;
  MatrixX<Scalar>& u = out.transform;
  h = matrix;
  u = MatrixX<Scalar>::Identity(h.rows(), h.rows());

  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < h.cols() && row < h.rows(); ++col) {
    for (Eigen::Index i = row + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      Scalar a = h(row, col), b = h(i, col), x, y;
      const Scalar g = detail::extended_gcd(a, b, x, y);
      const Scalar ag = a / g, bg = b / g;
      // [x y; -b/g a/g] has determinant 1.
      MatrixX<Scalar> top = x * h.row(row) + y * h.row(i);
      MatrixX<Scalar> bottom = -bg * h.row(row) + ag * h.row(i);
      h.row(row) = top;
      h.row(i) = bottom;
      top = x * u.row(row) + y * u.row(i);
      bottom = -bg * u.row(row) + ag * u.row(i);
      u.row(row) = top;
      u.row(i) = bottom;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.row(row) = -h.row(row);
      u.row(row) = -u.row(row);
    }
    for (Eigen::Index i = 0; i < row; ++i) {
      const Scalar q = detail::floor_div(Scalar(h(i, col)), Scalar(h(row, col)));
      if (q == 0) continue;
      h.row(i) -= q * h.row(row);
      u.row(i) -= q * u.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

}  // namespace ehrhart

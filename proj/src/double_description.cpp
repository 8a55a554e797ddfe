#include "double_description.hpp"

#include "ehrhart/linalg.hpp"

#include <algorithm>

namespace ehrhart::detail {

namespace {

LatticePoint make_primitive(LatticePoint v) {
  const Integer g = content(v);
  if (g > 1)
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
  return v;
}

Integer dot(const IntegerMatrix& rows, Eigen::Index r, const LatticePoint& v) {
  Integer s = 0;
  for (Eigen::Index j = 0; j < v.size(); ++j) s += rows(r, j) * v(j);
  return s;
}

// Rows (b, -a) of the homogenized cone {(t, x) : b t - <a, x> >= 0}, scaled
// to integers, followed by t >= 0.
IntegerMatrix homogenize(Eigen::Index dim, const std::vector<HalfSpace>& system) {
  IntegerMatrix rows(static_cast<Eigen::Index>(system.size()) + 1, dim + 1);
  for (std::size_t i = 0; i < system.size(); ++i) {
    RationalPoint row(dim + 1);
    row(0) = system[i].offset;
    row.tail(dim) = -system[i].normal;
    Integer den = 1;
    for (Eigen::Index j = 0; j <= dim; ++j) den = lcm(den, denominator(row(j)));
    for (Eigen::Index j = 0; j <= dim; ++j) rows(i, j) = numerator(row(j) * den);
  }
  const Eigen::Index last = rows.rows() - 1;
  rows.row(last).setZero();
  rows(last, 0) = 1;
  return rows;
}

}  // namespace

std::vector<ConeRay> extreme_rays(const IntegerMatrix& rows) {
  const Eigen::Index d = rows.cols();
  const std::size_t m = static_cast<std::size_t>(rows.rows());
  const auto basis = independent_rows(rows);
  if (static_cast<Eigen::Index>(basis.size()) != d)
    throw std::logic_error("extreme_rays: cone is not pointed");

  IntegerMatrix b(d, d);
  for (Eigen::Index i = 0; i < d; ++i) b.row(i) = rows.row(basis[i]);
  const RationalMatrix binv = inverse(b);

  std::vector<ConeRay> rays;
  for (Eigen::Index j = 0; j < d; ++j) {
    ConeRay ray{primitive_direction(binv.col(j)), boost::dynamic_bitset<>(m)};
    for (Eigen::Index i = 0; i < d; ++i)
      if (i != j) ray.tight.set(basis[i]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(m, false);
  for (auto i : basis) processed[i] = true;

  for (std::size_t r = 0; r < m; ++r) {
    if (processed[r]) continue;
    processed[r] = true;

    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      value[k] = dot(rows, r, rays[k].direction);
      if (value[k] > 0) pos.push_back(k);
      else if (value[k] < 0) neg.push_back(k);
      else rays[k].tight.set(r);
    }
    if (neg.empty()) continue;

    std::vector<ConeRay> next;
    next.reserve(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (value[k] >= 0) next.push_back(rays[k]);

    for (auto p : pos) {
      for (auto n : neg) {
        boost::dynamic_bitset<> common = rays[p].tight & rays[n].tight;
        if (static_cast<Eigen::Index>(common.count()) < d - 2) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == n) continue;
          if (common.is_subset_of(rays[k].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        LatticePoint w(d);
        for (Eigen::Index j = 0; j < d; ++j)
          w(j) = value[p] * rays[n].direction(j) - value[n] * rays[p].direction(j);
        common.set(r);
        next.push_back(ConeRay{make_primitive(std::move(w)), std::move(common)});
      }
    }
    rays = std::move(next);
  }
  return rays;
}

VertexEnumeration enumerate_vertices(Eigen::Index dim, const std::vector<HalfSpace>& system) {
  VertexEnumeration out;
  RationalMatrix a(static_cast<Eigen::Index>(system.size()), dim);
  for (std::size_t i = 0; i < system.size(); ++i) a.row(i) = system[i].normal.transpose();
  const Eigen::Index r = system.empty() ? 0 : rank(a);

  if (r < dim) {
    // Lineality: the set is unbounded unless infeasible. Decide feasibility
    // in the column space of the constraint matrix.
    bool feasible;
    if (r == 0) {
      feasible = std::all_of(system.begin(), system.end(),
                             [](const HalfSpace& h) { return h.offset >= 0; });
    } else {
      const auto columns = independent_rows(RationalMatrix(a.transpose()));
      std::vector<HalfSpace> reduced;
      feasible = true;
      for (const auto& h : system) {
        RationalPoint n(r);
        for (Eigen::Index j = 0; j < r; ++j) n(j) = h.normal(columns[j]);
        if (is_zero(n)) {
          if (h.offset < 0) feasible = false;
          continue;
        }
        reduced.emplace_back(n, h.offset);
      }
      if (feasible) {
        const auto rays = extreme_rays(homogenize(r, reduced));
        feasible = std::any_of(rays.begin(), rays.end(),
                               [](const ConeRay& z) { return z.direction(0) > 0; });
      }
    }
    out.status = feasible ? Feasibility::Unbounded : Feasibility::Empty;
    return out;
  }

  bool recession = false;
  for (const auto& ray : extreme_rays(homogenize(dim, system))) {
    if (ray.direction(0) == 0) {
      recession = true;
      continue;
    }
    RationalPoint v(dim);
    for (Eigen::Index j = 0; j < dim; ++j) v(j) = Rational(ray.direction(j + 1), ray.direction(0));
    out.vertices.push_back(std::move(v));
  }
  if (out.vertices.empty()) {
    out.status = Feasibility::Empty;
  } else if (recession) {
    out.status = Feasibility::Unbounded;
    out.vertices.clear();
  } else {
    out.status = Feasibility::Bounded;
  }
  return out;
}

}  // namespace ehrhart::detail

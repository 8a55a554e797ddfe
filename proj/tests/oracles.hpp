#pragma once

// Independent reference computations used only by the test suites.

#include "ehrhart/polytope.hpp"

#include <algorithm>
#include <vector>

namespace ehrhart::oracle {

/// Twice-signed area via the shoelace formula after sorting the vertices
/// counterclockwise around their centroid (exact half-plane/cross ordering).
inline Rational shoelace_area(std::vector<RationalPoint> pts) {
  RationalPoint c = RationalPoint::Zero(2);
  for (const auto& p : pts) c += p;
  c /= Rational(static_cast<long>(pts.size()));
  auto upper = [&](const RationalPoint& p) {
    const Rational dy = p(1) - c(1), dx = p(0) - c(0);
    return dy > 0 || (dy == 0 && dx > 0);
  };
  std::sort(pts.begin(), pts.end(), [&](const RationalPoint& a, const RationalPoint& b) {
    const bool ua = upper(a), ub = upper(b);
    if (ua != ub) return ua;
    const Rational cross = (a(0) - c(0)) * (b(1) - c(1)) - (a(1) - c(1)) * (b(0) - c(0));
    return cross > 0;
  });
  Rational twice = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    twice += p(0) * q(1) - p(1) * q(0);
  }
  return abs(twice) / 2;
}

/// Volume as a sum of pyramids from an inner point over the facets; facet
/// measures come from coordinate projections, recursively.
inline Rational pyramid_volume(const std::vector<RationalPoint>& pts) {
  const Eigen::Index n = pts[0].size();
  if (n == 1) {
    Rational lo = pts[0](0), hi = pts[0](0);
    for (const auto& p : pts) {
      lo = std::min(lo, Rational(p(0)));
      hi = std::max(hi, Rational(p(0)));
    }
    return hi - lo;
  }
  const VPolytope poly = hull(pts);
  RationalPoint c = RationalPoint::Zero(n);
  for (const auto& v : poly.vertices()) c += v;
  c /= Rational(static_cast<long>(poly.num_vertices()));
  Rational total = 0;
  for (std::size_t f = 0; f < poly.facets().size(); ++f) {
    const auto& h = poly.facets()[f];
    Eigen::Index j = 0;
    while (h.normal(j) == 0) ++j;
    std::vector<RationalPoint> projected;
    for (int idx : poly.facet_vertices()[f]) {
      RationalPoint q(n - 1);
      for (Eigen::Index i = 0, k = 0; i < n; ++i)
        if (i != j) q(k++) = poly.vertex(idx)(i);
      projected.push_back(q);
    }
    total += (h.offset - h.normal.dot(c)) * pyramid_volume(projected) / abs(h.normal(j));
  }
  return total / n;
}

/// Integer points of [lo, hi]^n satisfying `pred`.
template <typename Pred>
std::size_t count_box(Eigen::Index n, long lo, long hi, Pred pred) {
  std::size_t count = 0;
  std::vector<long> x(n, lo);
  while (true) {
    RationalPoint p(n);
    for (Eigen::Index i = 0; i < n; ++i) p(i) = x[i];
    if (pred(p)) ++count;
    Eigen::Index i = 0;
    while (i < n && x[i] == hi) x[i++] = lo;
    if (i == n) break;
    ++x[i];
  }
  return count;
}

inline long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Sutherland-Hodgman clip of a convex polygon (vertices in any order) to
/// the half-plane <a, x> <= c; returns the clipped vertex list.
inline std::vector<RationalPoint> clip_polygon(std::vector<RationalPoint> pts, const RationalPoint& a,
                                               const Rational& c) {
  // Put the vertices in cyclic order first.
  RationalPoint ctr = RationalPoint::Zero(2);
  for (const auto& p : pts) ctr += p;
  ctr /= Rational(static_cast<long>(pts.size()));
  auto upper = [&](const RationalPoint& p) {
    const Rational dy = p(1) - ctr(1), dx = p(0) - ctr(0);
    return dy > 0 || (dy == 0 && dx > 0);
  };
  std::sort(pts.begin(), pts.end(), [&](const RationalPoint& p, const RationalPoint& q) {
    const bool up = upper(p), uq = upper(q);
    if (up != uq) return up;
    return (p(0) - ctr(0)) * (q(1) - ctr(1)) - (p(1) - ctr(1)) * (q(0) - ctr(0)) > 0;
  });
  std::vector<RationalPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    const Rational sp = a.dot(p) - c, sq = a.dot(q) - c;
    if (sp <= 0) out.push_back(p);
    if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) out.push_back(RationalPoint(p + (q - p) * (sp / (sp - sq))));
  }
  return out;
}

}  // namespace ehrhart::oracle

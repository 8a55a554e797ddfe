#include "ehrhart/random.hpp"

#include <cstdlib>
#include <string>

namespace ehrhart {

Rational RandomPolytopes::scalar(const Rational& half_width, long max_denominator) {
  std::uniform_int_distribution<long> den_dist(1, max_denominator);
  const long den = den_dist(rng_);
  const Integer span = floor(half_width * den);
  std::uniform_int_distribution<long> num_dist(-span.convert_to<long>(), span.convert_to<long>());
  return Rational(num_dist(rng_), den);
}

RationalPoint RandomPolytopes::point(Eigen::Index dim, const Rational& half_width,
                                     long max_denominator) {
  RationalPoint p(dim);
  for (Eigen::Index i = 0; i < dim; ++i) p(i) = scalar(half_width, max_denominator);
  return p;
}

VPolytope RandomPolytopes::polytope(const RandomPolytopeOptions& options) {
  std::uniform_int_distribution<int> count(options.min_points, options.max_points);
  while (true) {
    const int k = count(rng_);
    std::vector<RationalPoint> pts;
    for (int i = 0; i < k; ++i)
      pts.push_back(point(options.dim, options.half_width, options.max_denominator));
    try {
      return hull(pts);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateInput) throw;
    }
  }
}

HalfSpace RandomPolytopes::halfspace_through(const RationalPoint& p, long bound) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  RationalPoint n(p.size());
  do {
    for (Eigen::Index i = 0; i < p.size(); ++i) n(i) = coef(rng_);
  } while (is_zero(n));
  return HalfSpace(n, n.dot(p));
}

IntegerMatrix RandomPolytopes::unimodular(Eigen::Index dim, int steps) {
  IntegerMatrix m = IntegerMatrix::Identity(dim, dim);
  if (dim < 2) {
    if (std::uniform_int_distribution<int>(0, 1)(rng_)) m(0, 0) = -1;
    return m;
  }
  std::uniform_int_distribution<int> idx(0, static_cast<int>(dim) - 1), coef(-2, 2), flip(0, 3);
  for (int s = 0; s < steps; ++s) {
    const int i = idx(rng_), j = idx(rng_);
    if (i == j) continue;
    m.row(i) += Integer(coef(rng_)) * m.row(j);
    if (flip(rng_) == 0) m.row(i).swap(m.row(j));
  }
  return m;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("EHRHART_SEED");
  if (!s || !*s) return fallback;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace ehrhart

#pragma once

#include "ehrhart/polytope.hpp"

#include <cstdint>
#include <random>

namespace ehrhart {

struct RandomPolytopeOptions {
  Eigen::Index dim = 2;
  int min_points = 3;
  int max_points = 8;
  /// Coordinates are drawn from [-half_width, half_width].
  Rational half_width = 2;
  long max_denominator = 64;
};

/// Seeded source of random rational polytopes, half-spaces and unimodular
/// matrices for property suites. Deterministic for a given seed.
class RandomPolytopes {
 public:
  explicit RandomPolytopes(std::uint64_t seed) : rng_(seed) {}

  Rational scalar(const Rational& half_width, long max_denominator);
  RationalPoint point(Eigen::Index dim, const Rational& half_width, long max_denominator);
  /// Hull of k uniform points, k in [min_points, max_points]; degenerate
  /// draws are rejected and redrawn.
  VPolytope polytope(const RandomPolytopeOptions& options);
  /// Random nonzero integer normal in [-bound, bound]^n, boundary through `p`.
  HalfSpace halfspace_through(const RationalPoint& p, long bound = 5);
  /// Product of random elementary integer operations; determinant +-1.
  IntegerMatrix unimodular(Eigen::Index dim, int steps = 8);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Value of EHRHART_SEED when set and numeric, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace ehrhart

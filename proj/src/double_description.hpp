#pragma once

#include "ehrhart/polytope.hpp"

#include <boost/dynamic_bitset.hpp>

#include <vector>

namespace ehrhart::detail {

struct ConeRay {
  LatticePoint direction;  // primitive
  boost::dynamic_bitset<> tight;  // rows with <row, direction> = 0
};

/// Extreme rays of the pointed cone {z : rows * z >= 0} by incremental
/// double description. `rows` must have full column rank.
std::vector<ConeRay> extreme_rays(const IntegerMatrix& rows);

enum class Feasibility { Bounded, Empty, Unbounded };

struct VertexEnumeration {
  Feasibility status = Feasibility::Empty;
  std::vector<RationalPoint> vertices;  // only when Bounded
};

/// Vertices of {x : <a_i, x> <= b_i}.
VertexEnumeration enumerate_vertices(Eigen::Index dim, const std::vector<HalfSpace>& system);

}  // namespace ehrhart::detail

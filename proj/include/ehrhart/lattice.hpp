#pragma once

#include "ehrhart/polytope.hpp"
#include "ehrhart/report.hpp"

#include <optional>
#include <vector>

namespace ehrhart {

/// Integer points of P (interior only when `strict`), sorted lexicographically.
std::vector<LatticePoint> lattice_points(const HPolytope& p, bool strict = false);
std::vector<LatticePoint> lattice_points(const VPolytope& p, bool strict = false);

/// True when the only interior lattice point of P is the origin.
bool origin_is_only_interior_lattice_point(const VPolytope& p);

/// Q* = {x : <v, x> >= -1 for all vertices v of Q}. Throws OriginNotInterior.
VPolytope dual_polytope(const VPolytope& q);

/// Lattice polytope, origin strictly interior, every vertex primitive.
bool is_fano(const VPolytope& q);

/// True iff the dual of the lattice polytope Q is again a lattice polytope.
/// Throws NotLatticePolytope or OriginNotInterior.
bool is_reflexive(const VPolytope& q);

struct FacetLattice {
  HalfSpace facet;             // primitive outer normal
  Rational lattice_distance;   // offset of the primitive inequality
  std::vector<LatticePoint> relative_interior;
};

struct FacetLatticeData {
  std::vector<FacetLattice> facets;

  /// All relative-interior facet points, sorted.
  std::vector<LatticePoint> all_points() const;
};

/// Throws OriginNotInterior.
FacetLatticeData facet_lattice_data(const VPolytope& p);

/// Checks that the relatively interior facet lattice points of a reflexive
/// polytope with barycenter 0 form a centrally symmetric set. Status is
/// `equality` when the set equals its negation, `violation` otherwise.
CheckReport root_symmetry_check(const VPolytope& s);

inline constexpr Eigen::Index kNormalFormMaxDim = 4;

/// Canonical representative of a lattice polytope under affine unimodular
/// maps: the lexicographically least sorted vertex image over all maps that
/// send a vertex to 0 and n of its neighbours to the columns of a Hermite
/// normal form.
struct NormalForm {
  IntegerMatrix vertices;          // n x m, columns sorted lexicographically
  UnimodularAffineMap transform;   // maps Q onto conv(columns)

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.vertices.rows() == b.vertices.rows() && a.vertices.cols() == b.vertices.cols() &&
           a.vertices == b.vertices;
  }
};

/// Throws NotLatticePolytope, DimensionUnsupported (dim > kNormalFormMaxDim).
NormalForm normal_form(const VPolytope& q);

/// Map f with f(A) = B, verified by image comparison; empty if inequivalent.
std::optional<UnimodularAffineMap> are_equivalent(const VPolytope& a, const VPolytope& b);

/// Map carrying K onto multiplier * conv(0, e_1, ..., e_n), if one exists.
/// Works in every dimension.
std::optional<UnimodularAffineMap> is_multiple_of_unimodular_simplex(const VPolytope& k,
                                                                     const Integer& multiplier);

/// Vertex adjacency lists (edges of the polytope).
std::vector<std::vector<int>> vertex_neighbours(const VPolytope& p);

}  // namespace ehrhart

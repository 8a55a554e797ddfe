#pragma once

#include "ehrhart/error.hpp"
#include "ehrhart/scalar.hpp"

#include <optional>
#include <vector>

namespace ehrhart {

/// The closed half-space {x : <normal, x> <= offset}; normal is nonzero.
struct HalfSpace {
  RationalPoint normal;
  Rational offset;

  HalfSpace() = default;
  HalfSpace(RationalPoint n, Rational c);

  Eigen::Index dim() const { return normal.size(); }
  /// <normal, x> - offset: negative inside, zero on the boundary.
  Rational slack(const RationalPoint& x) const;
  bool contains(const RationalPoint& x, bool strict = false) const;
  /// Rescales to a primitive integer normal (positive factor).
  HalfSpace normalized() const;
  HalfSpace complement() const;  // closure of the complement

  friend bool operator==(const HalfSpace& a, const HalfSpace& b);
};

/// Parses "a1,...,an;c".
HalfSpace parse_halfspace(const std::string& text);

/// Full-dimensional polytope given by its vertices. Vertices are sorted
/// lexicographically; facets carry primitive integer normals and are sorted
/// lexicographically by (normal, offset). Equal polytopes compare equal.
class VPolytope {
 public:
  VPolytope() = default;

  /// Assembles from an already irredundant vertex list and facet list of the
  /// same full-dimensional polytope. Not validated.
  static VPolytope assemble(Eigen::Index dim, std::vector<RationalPoint> vertices,
                            std::vector<HalfSpace> facets);

  Eigen::Index dim() const { return dim_; }
  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  const RationalPoint& vertex(std::size_t i) const { return vertices_[i]; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<HalfSpace>& facets() const { return facets_; }
  /// Sorted vertex indices lying on each facet.
  const std::vector<std::vector<int>>& facet_vertices() const { return incidence_; }

  bool is_simplex() const { return vertices_.size() == static_cast<std::size_t>(dim_) + 1; }
  bool is_lattice() const;

  friend bool operator==(const VPolytope& a, const VPolytope& b);

 private:
  Eigen::Index dim_ = 0;
  std::vector<RationalPoint> vertices_;
  std::vector<HalfSpace> facets_;
  std::vector<std::vector<int>> incidence_;
};

/// Bounded polyhedron given by inequalities; may be empty or lower
/// dimensional (then `equations` spans the orthogonal complement of its
/// affine hull and `facets` are the relative facets).
class HPolytope {
 public:
  HPolytope() = default;

  /// Irredundant representation of {x : <a_i, x> <= b_i}. Throws Unbounded
  /// for a nonempty unbounded system; an infeasible system yields empty().
  static HPolytope from_inequalities(Eigen::Index dim, const std::vector<HalfSpace>& system);

  Eigen::Index dim() const { return dim_; }
  /// Affine dimension of the set; -1 when empty.
  Eigen::Index dimension() const { return dimension_; }
  bool empty() const { return dimension_ < 0; }
  bool full_dimensional() const { return dimension_ == dim_; }

  const std::vector<HalfSpace>& facets() const { return facets_; }
  /// Hyperplanes <normal, x> = offset containing the set.
  const std::vector<HalfSpace>& equations() const { return equations_; }
  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  /// Facets plus both directions of every equation.
  std::vector<HalfSpace> inequalities() const;

  friend bool operator==(const HPolytope& a, const HPolytope& b);

 private:
  friend HPolytope v_to_h(const VPolytope& p);
  Eigen::Index dim_ = 0;
  Eigen::Index dimension_ = -1;
  std::vector<HalfSpace> facets_;
  std::vector<HalfSpace> equations_;
  std::vector<RationalPoint> vertices_;
};

/// x -> matrix * x + translation with an invertible rational matrix.
struct RationalAffineMap {
  RationalMatrix matrix;
  RationalPoint translation;

  static RationalAffineMap identity(Eigen::Index n);
  static RationalAffineMap translation_by(const RationalPoint& t);
  static RationalAffineMap scaling(Eigen::Index n, const Rational& factor);

  Eigen::Index dim() const { return translation.size(); }
  RationalPoint operator()(const RationalPoint& x) const;
  Rational det() const;
  RationalAffineMap inverse() const;
  /// (*this) after `inner`.
  RationalAffineMap compose(const RationalAffineMap& inner) const;
};

/// Affine lattice automorphism x -> matrix * x + translation, |det| = 1.
class UnimodularAffineMap {
 public:
  UnimodularAffineMap() = default;
  /// Throws SingularMap when |det(matrix)| != 1.
  UnimodularAffineMap(IntegerMatrix matrix, LatticePoint translation);

  static UnimodularAffineMap identity(Eigen::Index n);

  const IntegerMatrix& matrix() const { return matrix_; }
  const LatticePoint& translation() const { return translation_; }
  Eigen::Index dim() const { return translation_.size(); }

  RationalPoint operator()(const RationalPoint& x) const;
  UnimodularAffineMap inverse() const;
  UnimodularAffineMap compose(const UnimodularAffineMap& inner) const;
  RationalAffineMap to_rational() const;

  friend bool operator==(const UnimodularAffineMap& a, const UnimodularAffineMap& b);

 private:
  IntegerMatrix matrix_;
  LatticePoint translation_;
};

/// Simplices as (n+1)-tuples of indices into `pool` (the polytope's vertices).
struct Triangulation {
  std::vector<RationalPoint> pool;
  std::vector<std::vector<int>> simplices;
};

/// Irredundant canonical convex hull. Throws DegenerateInput when the points
/// do not affinely span their ambient space.
VPolytope hull(const std::vector<RationalPoint>& points);
HPolytope v_to_h(const VPolytope& p);
/// Throws Empty, Unbounded, or DegenerateInput (lower dimensional).
VPolytope h_to_v(const HPolytope& p);

/// Fan from the first vertex over a recursive triangulation of the facets
/// avoiding it.
Triangulation triangulate(const VPolytope& p);
Rational volume(const VPolytope& p);
RationalPoint barycenter(const VPolytope& p);
/// Volume of a possibly lower dimensional polytope (zero unless full).
Rational volume(const HPolytope& p);

HPolytope intersect(const HPolytope& p, const HalfSpace& h);
HPolytope intersect_polytopes(const HPolytope& a, const HPolytope& b);
/// Throws SingularMap for a non-invertible map.
VPolytope affine_image(const VPolytope& p, const RationalAffineMap& f);
VPolytope affine_image(const VPolytope& p, const UnimodularAffineMap& f);

bool contains(const HPolytope& p, const RationalPoint& x, bool strict = false);
bool contains(const VPolytope& p, const RationalPoint& x, bool strict = false);
/// Every vertex of `inner` lies in `outer`.
bool is_subset(const VPolytope& inner, const VPolytope& outer);

// Constructions.
VPolytope translate(const VPolytope& p, const RationalPoint& t);
VPolytope scale(const VPolytope& p, const Rational& factor);
/// -P.
VPolytope negate(const VPolytope& p);
/// multiplier * conv(0, e_1, ..., e_n).
VPolytope standard_simplex(Eigen::Index n, const Rational& multiplier = 1);
/// [lo, hi]^n.
VPolytope cube(Eigen::Index n, const Rational& lo, const Rational& hi);
/// conv(+-e_1, ..., +-e_n).
VPolytope cross_polytope(Eigen::Index n);

/// Points from rows of integers, a convenience for literals.
RationalPoint point(std::initializer_list<Rational> coords);

}  // namespace ehrhart

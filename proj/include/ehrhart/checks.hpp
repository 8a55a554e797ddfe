#pragma once

#include "ehrhart/lattice.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ehrhart {

/// (n+1)^n / n!, the volume of (n+1) * Delta_n.
Rational ehrhart_bound(Eigen::Index n);
/// (n+1)^n / (n! R^n).
Rational generalized_ehrhart_bound(Eigen::Index n, const Rational& r);

struct RInvariantResult {
  RationalPoint barycenter;
  /// Where the ray from the barycenter through the origin leaves K; absent
  /// when the barycenter is the origin.
  std::optional<RationalPoint> boundary_point;
  Rational value;  // in (0, 1]
};

/// |x_K| / |x_K - b_K| via the smallest facet exit parameter along -b_K.
/// Throws OriginNotInterior.
RInvariantResult r_invariant(const VPolytope& k);

/// K' = R(K) * (K - b_K). The containment K' in K, the zero barycenter, the
/// volume ratio R^n and (when K has it) the lone interior lattice point are
/// verified before returning. Throws OriginNotInterior.
VPolytope shrink_to_barycenter(const VPolytope& k);

/// Ehrhart's bound and its R-weighted form for bodies whose only interior
/// lattice point is the origin. Equality cases carry a certificate onto
/// (n+1) * Delta_n.
CheckReport ehrhart_check(const VPolytope& k);

/// vol(K) <= 2^n vol(K cap -K) for barycenter 0.
CheckReport milman_pajor_check(const VPolytope& k);

/// vol(K cap -K) <= 2^n (Minkowski) and vol(K) <= 4^n.
CheckReport minkowski_combined_check(const VPolytope& k);

/// vol(K cap H) >= (n/(n+1))^n vol(K) for a closed half-space H containing
/// the barycenter. When the barycenter is on the boundary of H the pyramid
/// characterisation of equality is attached and cross-checked.
CheckReport grunbaum_check(const VPolytope& k, const HalfSpace& h);

/// Equality holds in Grunbaum's inequality iff K is a pyramid whose apex is
/// strictly inside H and whose base lies in a hyperplane parallel to the
/// boundary of H. Requires the boundary to pass through the barycenter.
CheckReport pyramid_equality_check(const VPolytope& k, const HalfSpace& h);

/// The affine map x -> (<l_1, x> + 1, ..., <l_n, x> + 1) built from n facets
/// of P = Q* through the vertex v, labelled by the vertices l_i of Q.
struct PhiConstruction {
  RationalPoint vertex;
  std::vector<HalfSpace> facets;     // facets of P through the vertex
  std::vector<LatticePoint> labels;  // matching vertices of Q
  RationalAffineMap map;
  Rational det;
};

/// Selects the lexicographically first set of n facets through v (in the
/// canonical facet order of P) whose labels are linearly independent.
/// Throws PreconditionFailed, NoSpanningSelection.
PhiConstruction construct_phi(const VPolytope& p, const VPolytope& q, const RationalPoint& v);

struct ChainStep {
  std::string relation;  // e.g. "vol(K) <= |det| vol(K)"
  Rational lhs;
  Rational rhs;
  bool is_equation = false;  // "=" rather than "<="
  Status status = Status::Strict;
};

/// One evaluation of the volume chain for a fixed vertex of P.
struct ProofChain {
  PhiConstruction phi;
  Rational volume;            // vol(K)
  Rational abs_det;           // |det(phi)|
  Rational image_volume;      // vol(phi(K))
  Rational grunbaum_term;     // (n/(n+1))^n vol(phi(K))
  Rational image_cut;         // vol(phi(K) cap eta^-)
  Rational polytope_cut;      // vol(phi(P) cap eta^-)
  Rational orthant_cut;       // vol(R^n_{>=0} cap eta^-)
  Rational simplex_volume;    // n^n / n!
  Rational bound;             // (n+1)^n / n!
  std::vector<ChainStep> steps;

  /// The eight chain values in order.
  std::vector<Rational> values() const;
  bool all_equalities() const;
  bool any_violation() const;
};

struct ProofTrace {
  std::vector<ProofChain> chains;  // one per vertex of P, in vertex order
  Rational volume;
  Rational bound;
  Status status = Status::Strict;  // of vol(K) <= bound
};

/// Evaluates the exact volume chain for every vertex of P = Q*. Requires Q
/// to be a lattice polytope with 0 interior, K inside Q* and barycenter 0;
/// throws PreconditionFailed otherwise.
ProofTrace proof_trace(const VPolytope& k, const VPolytope& q);

/// When vol(K) R(K)^n n! = (n+1)^n, returns a verified lattice automorphism
/// mapping K onto (n+1) * Delta_n; otherwise empty. Requires 0 to be the only
/// interior lattice point (PreconditionFailed). Throws
/// CertificationContradiction if the volume matches but no map exists.
std::optional<UnimodularAffineMap> certify_equality(const VPolytope& k);

/// True when K lies in the dual of some lattice polytope, i.e. the lattice
/// points of K* span a polytope with 0 in its interior.
bool contained_in_dual_of_lattice_polytope(const VPolytope& k);

}  // namespace ehrhart

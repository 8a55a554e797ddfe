#pragma once

#include "ehrhart/polytope.hpp"
#include "ehrhart/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ehrhart {

/// n! vol(Q*), the anticanonical degree of the toric Fano variety of Q.
/// Throws NotFano.
Rational anticanonical_degree(const VPolytope& q);

/// Kahler-Einstein criterion: barycenter of Q* is the origin. Throws NotFano.
bool ke_criterion(const VPolytope& q);

/// Every facet of Q is a simplex whose vertices form a lattice basis, i.e.
/// the face fan of Q is regular and the variety is smooth. Throws NotFano.
bool is_smooth_fano(const VPolytope& q);

struct ToricFanoReport {
  VPolytope fano;
  VPolytope dual;
  Rational degree;
  bool ke_exists = false;
  Rational r_value;
  bool smooth = false;
  /// R(Q*) equals R of the variety only in the smooth case.
  std::string r_label;

  Rational plain_bound;   // (n+1)^n, meaningful when ke_exists
  Status plain_status = Status::NotApplicable;
  Rational bb_bound;      // ((n+1)/R)^n
  Status bb_status = Status::Strict;

  bool is_projective_space = false;
  std::optional<UnimodularAffineMap> witness;  // Q* onto (n+1) Delta_n

  /// Cross-check results between the degree, the bounds, the KE flag and
  /// projective-space recognition. Empty when everything agrees.
  std::vector<std::string> inconsistencies;

  bool consistent() const { return inconsistencies.empty(); }
  /// Worst of the two bound statuses, Violation on any inconsistency.
  Status status() const;
};

/// Throws NotFano.
ToricFanoReport toric_report(const VPolytope& q);

/// The report as a generic check record ("toric").
CheckReport to_check_report(const ToricFanoReport& report);

}  // namespace ehrhart

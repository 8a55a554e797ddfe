#include "ehrhart/toric.hpp"

#include "ehrhart/checks.hpp"
#include "ehrhart/lattice.hpp"
#include "ehrhart/linalg.hpp"

namespace ehrhart {

namespace {

void require_fano(const VPolytope& q) {
  if (!is_fano(q)) throw Error(ErrorKind::NotFano, "not a Fano polytope");
}

}  // namespace

Rational anticanonical_degree(const VPolytope& q) {
  require_fano(q);
  return Rational(factorial(static_cast<unsigned>(q.dim()))) * volume(dual_polytope(q));
}

bool ke_criterion(const VPolytope& q) {
  require_fano(q);
  return is_zero(barycenter(dual_polytope(q)));
}

bool is_smooth_fano(const VPolytope& q) {
  require_fano(q);
  const Eigen::Index n = q.dim();
  for (const auto& on : q.facet_vertices()) {
    if (static_cast<Eigen::Index>(on.size()) != n) return false;
    RationalMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) m.col(j) = q.vertex(static_cast<std::size_t>(on[j]));
    if (abs(determinant(m)) != 1) return false;
  }
  return true;
}

Status ToricFanoReport::status() const {
  if (!consistent()) return Status::Violation;
  return plain_status == Status::NotApplicable ? bb_status : combine(plain_status, bb_status);
}

ToricFanoReport toric_report(const VPolytope& q) {
  require_fano(q);
  const Eigen::Index n = q.dim();
  const unsigned un = static_cast<unsigned>(n);
  ToricFanoReport r;
  r.fano = q;
  r.dual = dual_polytope(q);
  r.degree = Rational(factorial(un)) * volume(r.dual);
  r.ke_exists = is_zero(barycenter(r.dual));
  r.r_value = r_invariant(r.dual).value;
  r.smooth = is_smooth_fano(q);
  r.r_label = r.smooth ? "R of variety" : "R of dual polytope";

  r.plain_bound = pow(Rational(n + 1), un);
  r.plain_status = r.ke_exists ? upper_bound_status(r.degree, r.plain_bound) : Status::NotApplicable;
  r.bb_bound = pow(Rational(n + 1) / r.r_value, un);
  r.bb_status = upper_bound_status(r.degree, r.bb_bound);

  try {
    r.witness = certify_equality(r.dual);
    r.is_projective_space = r.witness.has_value();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CertificationContradiction && e.kind() != ErrorKind::PreconditionFailed) throw;
    r.inconsistencies.push_back(std::string("certification failed: ") + e.what());
  }

  auto expect = [&](bool ok, const char* what) {
    if (!ok) r.inconsistencies.push_back(what);
  };
  expect(r.bb_status != Status::Violation, "degree exceeds ((n+1)/R)^n");
  expect(r.plain_status != Status::Violation, "KE variety with degree above (n+1)^n");
  expect((r.bb_status == Status::Equality) == r.is_projective_space,
         "equality in the R-weighted bound disagrees with projective-space recognition");
  if (r.ke_exists)
    expect((r.plain_status == Status::Equality) == r.is_projective_space,
           "equality in the KE bound disagrees with projective-space recognition");
  expect(r.is_projective_space == (r.degree == r.plain_bound && r.ke_exists),
         "projective space iff degree (n+1)^n with a KE metric");
  expect((r.r_value == 1) == r.ke_exists, "R = 1 disagrees with the KE criterion");
  if (is_reflexive(q)) expect(is_integer(r.degree), "non-integral degree for a reflexive polytope");
  return r;
}

CheckReport to_check_report(const ToricFanoReport& t) {
  CheckReport rep;
  rep.check = "toric";
  rep.set("degree", t.degree);
  rep.set("ke", t.ke_exists);
  rep.set("R", t.r_value);
  rep.set("r_label", t.r_label);
  rep.set("smooth", t.smooth);
  rep.set("plain_bound", t.plain_bound);
  rep.set("plain_status", std::string(to_string(t.plain_status)));
  rep.set("bb_bound", t.bb_bound);
  rep.set("bb_status", std::string(to_string(t.bb_status)));
  rep.set("is_projective_space", t.is_projective_space);
  rep.bound = t.bb_bound;
  rep.status = t.status();
  if (t.witness) rep.witness = *t.witness;
  for (const auto& s : t.inconsistencies) rep.reason += (rep.reason.empty() ? "" : "; ") + s;
  return rep;
}

}  // namespace ehrhart

#include "ehrhart/checks.hpp"

#include "ehrhart/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ehrhart {

namespace {

unsigned udim(Eigen::Index n) { return static_cast<unsigned>(n); }

Rational rational_factorial(Eigen::Index n) { return Rational(factorial(udim(n))); }

void require_origin_interior(const VPolytope& k) {
  if (!contains(k, RationalPoint::Zero(k.dim()), true))
    throw Error(ErrorKind::OriginNotInterior, "the origin is not an interior point");
}

HPolytope as_h(const VPolytope& p) { return v_to_h(p); }

Rational cut_volume(const VPolytope& k, const HalfSpace& h) { return volume(intersect(as_h(k), h)); }

Rational symmetric_part_volume(const VPolytope& k) {
  return volume(intersect_polytopes(as_h(k), as_h(negate(k))));
}

// Grunbaum numbers shared by the check and the pyramid verdict.
struct GrunbaumData {
  Rational volume;
  Rational cut;
  Rational term;
};

GrunbaumData grunbaum_data(const VPolytope& k, const HalfSpace& h) {
  const Eigen::Index n = k.dim();
  GrunbaumData d;
  d.volume = volume(k);
  d.cut = cut_volume(k, h);
  d.term = pow(Rational(n, n + 1), udim(n)) * d.volume;
  return d;
}

// Apex index if K is a pyramid with apex strictly inside H and base on a
// hyperplane parallel to the boundary of H, strictly outside.
std::optional<std::size_t> pyramid_apex(const VPolytope& k, const HalfSpace& h) {
  const std::size_t m = k.num_vertices();
  for (std::size_t a = 0; a < m; ++a) {
    if (h.slack(k.vertex(a)) >= 0) continue;
    std::optional<Rational> level;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (i == a) continue;
      const Rational s = h.slack(k.vertex(i));
      if (!level) level = s;
      ok = s == *level;
    }
    if (ok && level && *level > 0) return a;
  }
  return std::nullopt;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorKind::PreconditionFailed, what);
}

}  // namespace

Rational ehrhart_bound(Eigen::Index n) {
  return pow(Rational(n + 1), udim(n)) / rational_factorial(n);
}

Rational generalized_ehrhart_bound(Eigen::Index n, const Rational& r) {
  return ehrhart_bound(n) / pow(r, udim(n));
}

RInvariantResult r_invariant(const VPolytope& k) {
  require_origin_interior(k);
  RInvariantResult out;
  out.barycenter = barycenter(k);
  if (is_zero(out.barycenter)) {
    out.value = 1;
    return out;
  }
  // Points b - s b of the ray; the exit parameter s* exceeds 1 since the
  // origin (s = 1) is interior.
  const RationalPoint& b = out.barycenter;
  std::optional<Rational> exit;
  for (const auto& f : k.facets()) {
    const Rational rate = -f.normal.dot(b);
    if (rate <= 0) continue;
    const Rational s = -f.slack(b) / rate;
    if (!exit || s < *exit) exit = s;
  }
  if (!exit) throw std::logic_error("r_invariant: ray does not leave a bounded polytope");
  out.boundary_point = RationalPoint(b * (Rational(1) - *exit));
  out.value = (*exit - 1) / *exit;
  return out;
}

VPolytope shrink_to_barycenter(const VPolytope& k) {
  const RInvariantResult r = r_invariant(k);
  const Eigen::Index n = k.dim();
  if (r.value == 1) return k;
  RationalAffineMap f = RationalAffineMap::scaling(n, r.value);
  f.translation = -(r.barycenter * r.value);
  VPolytope shrunk = affine_image(k, f);

  if (!is_subset(shrunk, k)) throw std::logic_error("shrink_to_barycenter: K' is not inside K");
  if (!is_zero(barycenter(shrunk))) throw std::logic_error("shrink_to_barycenter: barycenter of K' is not 0");
  if (volume(shrunk) != pow(r.value, udim(n)) * volume(k))
    throw std::logic_error("shrink_to_barycenter: volume ratio is not R^n");
  if (origin_is_only_interior_lattice_point(k) && !origin_is_only_interior_lattice_point(shrunk))
    throw std::logic_error("shrink_to_barycenter: K' gained interior lattice points");
  return shrunk;
}

bool contained_in_dual_of_lattice_polytope(const VPolytope& k) {
  require_origin_interior(k);
  const auto pts = lattice_points(dual_polytope(k));
  std::vector<RationalPoint> rp;
  for (const auto& x : pts) rp.push_back(to_rational(x));
  try {
    return contains(hull(rp), RationalPoint::Zero(k.dim()), true);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateInput) return false;
    throw;
  }
}

std::optional<UnimodularAffineMap> certify_equality(const VPolytope& k) {
  require(origin_is_only_interior_lattice_point(k), "interior lattice points are not exactly {0}");
  const Eigen::Index n = k.dim();
  const RInvariantResult r = r_invariant(k);
  if (volume(k) * pow(r.value, udim(n)) * rational_factorial(n) != pow(Rational(n + 1), udim(n)))
    return std::nullopt;

  const VPolytope shrunk = shrink_to_barycenter(k);
  const auto g = is_multiple_of_unimodular_simplex(shrunk, Integer(n + 1));
  if (!g)
    throw Error(ErrorKind::CertificationContradiction,
                "volume attains the bound but K' is not a unimodular image of (n+1)*Delta_n");
  if (r.value != 1)
    throw Error(ErrorKind::CertificationContradiction,
                "volume attains the bound but R(K) = " + to_string(r.value) + " < 1");
  if (!(affine_image(k, *g) == standard_simplex(n, n + 1)))
    throw Error(ErrorKind::CertificationContradiction, "certificate does not map K onto (n+1)*Delta_n");
  return g;
}

CheckReport ehrhart_check(const VPolytope& k) {
  const std::string name = "ehrhart";
  if (!origin_is_only_interior_lattice_point(k))
    return not_applicable(name, "interior lattice points are not exactly {0}");
  const Eigen::Index n = k.dim();

  CheckReport rep;
  rep.check = name;
  const Rational vol = volume(k);
  const RInvariantResult r = r_invariant(k);
  const Rational generalized = generalized_ehrhart_bound(n, r.value);
  rep.set("volume", vol);
  rep.set("barycenter", r.barycenter);
  rep.set("R", r.value);
  if (is_zero(r.barycenter)) {
    rep.set("classical_bound", ehrhart_bound(n));
    rep.set("classical_status", std::string(to_string(upper_bound_status(vol, ehrhart_bound(n)))));
  }
  rep.set("generalized_bound", generalized);
  rep.set("generalized_status", std::string(to_string(upper_bound_status(vol, generalized))));
  rep.bound = generalized;
  rep.status = upper_bound_status(vol, generalized);

  if (rep.status == Status::Equality) {
    try {
      const auto w = certify_equality(k);
      if (w) {
        rep.witness = *w;
      } else {
        rep.status = Status::Violation;
        rep.reason = "bound attained but the certificate search found no map";
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CertificationContradiction) throw;
      rep.status = Status::Violation;
      rep.reason = e.what();
    }
  } else if (rep.status == Status::Violation) {
    rep.reason = "volume exceeds the R-weighted bound";
  }
  return rep;
}

CheckReport milman_pajor_check(const VPolytope& k) {
  const std::string name = "milman-pajor";
  const RationalPoint b = barycenter(k);
  if (!is_zero(b)) return not_applicable(name, "barycenter " + to_string(b) + " is not the origin");
  const Eigen::Index n = k.dim();
  CheckReport rep;
  rep.check = name;
  const Rational vol = volume(k);
  const Rational sym = symmetric_part_volume(k);
  rep.set("volume", vol);
  rep.set("symmetric_volume", sym);
  rep.bound = pow(Rational(2), udim(n)) * sym;
  rep.status = upper_bound_status(vol, *rep.bound);
  if (rep.status == Status::Violation) rep.reason = "vol(K) exceeds 2^n vol(K cap -K)";
  return rep;
}

CheckReport minkowski_combined_check(const VPolytope& k) {
  const std::string name = "minkowski";
  if (!origin_is_only_interior_lattice_point(k))
    return not_applicable(name, "interior lattice points are not exactly {0}");
  const RationalPoint b = barycenter(k);
  if (!is_zero(b)) return not_applicable(name, "barycenter " + to_string(b) + " is not the origin");
  const Eigen::Index n = k.dim();
  CheckReport rep;
  rep.check = name;
  const Rational vol = volume(k);
  const Rational sym = symmetric_part_volume(k);
  const Rational two_n = pow(Rational(2), udim(n));
  const Rational four_n = pow(Rational(4), udim(n));
  const Status sym_status = upper_bound_status(sym, two_n);
  const Status vol_status = upper_bound_status(vol, four_n);
  rep.set("symmetric_volume", sym);
  rep.set("minkowski_bound", two_n);
  rep.set("minkowski_margin", two_n - sym);
  rep.set("minkowski_status", std::string(to_string(sym_status)));
  rep.set("volume", vol);
  rep.set("volume_margin", four_n - vol);
  rep.set("volume_status", std::string(to_string(vol_status)));
  rep.bound = four_n;
  rep.status = vol_status;
  if (sym_status == Status::Violation || vol_status == Status::Violation) {
    rep.status = Status::Violation;
    rep.reason = sym_status == Status::Violation ? "vol(K cap -K) exceeds 2^n" : "vol(K) exceeds 4^n";
  }
  return rep;
}

CheckReport pyramid_equality_check(const VPolytope& k, const HalfSpace& h) {
  const std::string name = "pyramid";
  const RationalPoint b = barycenter(k);
  if (h.slack(b) != 0) return not_applicable(name, "boundary hyperplane misses the barycenter " + to_string(b));
  const GrunbaumData g = grunbaum_data(k, h);
  const auto apex = pyramid_apex(k, h);
  const bool grunbaum_equal = g.cut == g.term;

  CheckReport rep;
  rep.check = name;
  rep.set("pyramid", apex.has_value());
  rep.set("volume_cut", g.cut);
  rep.set("grunbaum_term", g.term);
  rep.bound = g.term;
  if (apex) {
    rep.set("apex", k.vertex(*apex));
    rep.witness = k.vertex(*apex);
  }
  if (apex.has_value() != grunbaum_equal) {
    rep.status = Status::Violation;
    rep.reason = apex ? "pyramid without equality in Grunbaum's inequality"
                      : "equality in Grunbaum's inequality without a pyramid";
  } else {
    rep.status = apex ? Status::Equality : Status::Strict;
  }
  return rep;
}

CheckReport grunbaum_check(const VPolytope& k, const HalfSpace& h) {
  const std::string name = "grunbaum";
  const RationalPoint b = barycenter(k);
  if (!h.contains(b)) return not_applicable(name, "half-space misses the barycenter " + to_string(b));
  const GrunbaumData g = grunbaum_data(k, h);
  CheckReport rep;
  rep.check = name;
  rep.set("volume", g.volume);
  rep.set("volume_cut", g.cut);
  rep.bound = g.term;
  rep.status = lower_bound_status(g.cut, g.term);
  rep.witness = h;
  if (rep.status == Status::Violation) {
    rep.reason = "vol(K cap H) below (n/(n+1))^n vol(K)";
    return rep;
  }
  if (h.slack(b) == 0) {
    CheckReport pyramid = pyramid_equality_check(k, h);
    if (pyramid.status == Status::Violation) {
      rep.status = Status::Violation;
      rep.reason = pyramid.reason;
    }
    rep.attached.push_back(std::move(pyramid));
  } else if (rep.status == Status::Equality) {
    // Equality forces the boundary through the barycenter.
    rep.status = Status::Violation;
    rep.reason = "equality with the barycenter strictly inside H";
  }
  return rep;
}

PhiConstruction construct_phi(const VPolytope& p, const VPolytope& q, const RationalPoint& v) {
  require(q.is_lattice(), "Q is not a lattice polytope");
  require(contains(q, RationalPoint::Zero(q.dim()), true), "the origin is not interior to Q");
  require(p == dual_polytope(q), "P is not the dual of Q");
  const Eigen::Index n = p.dim();
  require(std::any_of(p.vertices().begin(), p.vertices().end(),
                      [&](const RationalPoint& w) { return vectors_equal(w, v); }),
          "v = " + to_string(v) + " is not a vertex of P");

  std::vector<std::size_t> through;
  for (std::size_t f = 0; f < p.facets().size(); ++f)
    if (p.facets()[f].slack(v) == 0) through.push_back(f);
  const std::size_t m = through.size();
  const std::size_t nn = static_cast<std::size_t>(n);
  if (m < nn) throw std::logic_error("construct_phi: fewer than n facets through a vertex");

  // A facet <a, x> <= c of P is <-l, x> <= 1 for the vertex l = -a/c of Q.
  auto label = [&](std::size_t f) {
    const HalfSpace& h = p.facets()[f];
    return RationalPoint(-h.normal / h.offset);
  };

  std::vector<std::size_t> pick(nn);
  for (std::size_t i = 0; i < nn; ++i) pick[i] = i;
  while (true) {
    RationalMatrix l(n, n);
    for (std::size_t i = 0; i < nn; ++i) l.row(static_cast<Eigen::Index>(i)) = label(through[pick[i]]).transpose();
    const Rational det = determinant(l);
    if (det != 0) {
      PhiConstruction phi;
      phi.vertex = v;
      for (std::size_t i = 0; i < nn; ++i) {
        phi.facets.push_back(p.facets()[through[pick[i]]]);
        phi.labels.push_back(to_lattice(label(through[pick[i]])));
      }
      phi.map = RationalAffineMap{l, RationalPoint::Ones(n)};
      phi.det = det;
      if (!is_zero(phi.map(v))) throw std::logic_error("construct_phi: phi(v) != 0");
      for (const auto& w : p.vertices())
        if ((phi.map(w).array() < 0).any()) throw std::logic_error("construct_phi: phi(P) leaves the orthant");
      if (abs(det) < 1) throw std::logic_error("construct_phi: |det| < 1 for lattice labels");
      return phi;
    }
    // Next n-subset in lexicographic order.
    std::size_t i = nn;
    while (i > 0 && pick[i - 1] == m - nn + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < nn; ++j) pick[j] = pick[j - 1] + 1;
  }
  throw Error(ErrorKind::NoSpanningSelection, "no n facets through " + to_string(v) + " have spanning labels");
}

std::vector<Rational> ProofChain::values() const {
  return {volume, abs_det, image_volume, grunbaum_term, image_cut, polytope_cut, simplex_volume, bound};
}

bool ProofChain::all_equalities() const {
  return std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.status == Status::Equality; });
}

bool ProofChain::any_violation() const {
  return std::any_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.status == Status::Violation; });
}

ProofTrace proof_trace(const VPolytope& k, const VPolytope& q) {
  require(q.is_lattice(), "Q is not a lattice polytope");
  require(contains(q, RationalPoint::Zero(q.dim()), true), "the origin is not interior to Q");
  require(k.dim() == q.dim(), "K and Q have different dimensions");
  const VPolytope p = dual_polytope(q);
  require(is_subset(k, p), "K is not contained in the dual of Q");
  const RationalPoint b = barycenter(k);
  require(is_zero(b), "barycenter of K is " + to_string(b) + ", not the origin");

  const Eigen::Index n = k.dim();
  const unsigned un = udim(n);
  ProofTrace trace;
  trace.volume = volume(k);
  trace.bound = ehrhart_bound(n);
  trace.status = upper_bound_status(trace.volume, trace.bound);

  const HalfSpace eta(RationalPoint::Ones(n), Rational(n));
  const HPolytope orthant_cut = [&] {
    std::vector<HalfSpace> sys{eta};
    for (Eigen::Index i = 0; i < n; ++i) sys.emplace_back(-unit_vector(n, i), 0);
    return HPolytope::from_inequalities(n, sys);
  }();

  for (const auto& v : p.vertices()) {
    ProofChain c;
    c.phi = construct_phi(p, q, v);
    const VPolytope image = affine_image(k, c.phi.map);
    c.volume = trace.volume;
    c.abs_det = abs(c.phi.det);
    c.image_volume = volume(image);
    c.grunbaum_term = pow(Rational(n, n + 1), un) * c.image_volume;
    c.image_cut = cut_volume(image, eta);
    c.polytope_cut = cut_volume(affine_image(p, c.phi.map), eta);
    c.orthant_cut = volume(orthant_cut);
    c.simplex_volume = pow(Rational(n), un) / rational_factorial(n);
    c.bound = trace.bound;

    auto le = [&](std::string rel, const Rational& a, const Rational& bb) {
      c.steps.push_back({std::move(rel), a, bb, false, upper_bound_status(a, bb)});
    };
    auto eq = [&](std::string rel, const Rational& a, const Rational& bb) {
      c.steps.push_back({std::move(rel), a, bb, true, a == bb ? Status::Equality : Status::Violation});
    };
    le("vol(K) <= |det phi| vol(K)", c.volume, c.abs_det * c.volume);
    eq("|det phi| vol(K) = vol(phi(K))", c.abs_det * c.volume, c.image_volume);
    le("(n/(n+1))^n vol(phi(K)) <= vol(phi(K) cap eta^-)", c.grunbaum_term, c.image_cut);
    le("vol(phi(K) cap eta^-) <= vol(phi(P) cap eta^-)", c.image_cut, c.polytope_cut);
    le("vol(phi(P) cap eta^-) <= vol(R^n_{>=0} cap eta^-)", c.polytope_cut, c.orthant_cut);
    eq("vol(R^n_{>=0} cap eta^-) = n^n/n!", c.orthant_cut, c.simplex_volume);

    // The conclusion follows from the steps: vol(K) <= ((n+1)/n)^n n^n/n! / |det|.
    const Rational implied = pow(Rational(n + 1, n), un) * c.simplex_volume / c.abs_det;
    if (!c.any_violation() && (implied > c.bound || c.volume > implied))
      throw std::logic_error("proof_trace: conclusion does not follow from the chain");
    le("vol(K) <= (n+1)^n/n!", c.volume, c.bound);

    if (c.any_violation()) trace.status = Status::Violation;
    trace.chains.push_back(std::move(c));
  }
  return trace;
}

}  // namespace ehrhart

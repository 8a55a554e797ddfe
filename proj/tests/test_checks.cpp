#include <doctest.h>

#include "ehrhart/checks.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <functional>

using namespace ehrhart;

namespace {

using Q = Rational;

VPolytope poly(std::initializer_list<std::initializer_list<Q>> rows) {
  std::vector<RationalPoint> pts;
  for (auto r : rows) pts.push_back(point(r));
  return hull(pts);
}

LatticePoint lp(std::initializer_list<long> c) {
  LatticePoint p(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (long x : c) p(i++) = x;
  return p;
}

VPolytope counterexample() {
  return poly({{Q(3, 2), Q(1, 4)}, {Q(-3, 2), Q(-1, 4)}, {Q(3, 2), Q(5, 4)}, {Q(-3, 2), Q(-5, 4)}});
}
VPolytope projective_plane() { return poly({{1, 0}, {0, 1}, {-1, -1}}); }
VPolytope reflexive_triangle() { return translate(standard_simplex(2, 3), -ones(2)); }
VPolytope segment(Q lo, Q hi) { return poly({{lo}, {hi}}); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an ehrhart::Error");
  return ErrorKind::ParseError;
}

Rational polygon_area(const std::vector<RationalPoint>& pts) {
  return pts.size() < 3 ? Rational(0) : oracle::shoelace_area(pts);
}

}  // namespace

TEST_CASE("bounds") {
  CHECK(ehrhart_bound(2) == Q(9, 2));
  CHECK(ehrhart_bound(3) == Q(64, 6));
  CHECK(generalized_ehrhart_bound(2, Q(1, 2)) == 18);
  for (Eigen::Index n = 1; n <= 6; ++n) CHECK(ehrhart_bound(n) == volume(standard_simplex(n, n + 1)));
}

TEST_CASE("R invariant") {
  const auto r = r_invariant(segment(-1, Q(1, 2)));
  CHECK(r.value == Q(2, 3));
  CHECK(r.barycenter == point({Q(-1, 4)}));
  REQUIRE(r.boundary_point.has_value());
  CHECK(*r.boundary_point == point({Q(1, 2)}));
  CHECK(*r.boundary_point == r.barycenter * (r.value / (r.value - 1)));

  const auto t = r_invariant(reflexive_triangle());
  CHECK(t.value == 1);
  CHECK_FALSE(t.boundary_point.has_value());
  CHECK(r_invariant(counterexample()).value == 1);
  CHECK(kind_of([] { r_invariant(standard_simplex(2)); }) == ErrorKind::OriginNotInterior);

  // R lies in (0, 1], equals 1 iff the barycenter is 0, the exit point is on
  // the boundary, and R is invariant under linear unimodular maps.
  RandomPolytopes rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    const VPolytope k = gen::lattice_free_but_origin(rng, n, 6);
    const auto res = r_invariant(k);
    CHECK(res.value > 0);
    CHECK(res.value <= 1);
    CHECK((res.value == 1) == is_zero(res.barycenter));
    if (res.boundary_point) {
      CHECK(contains(k, *res.boundary_point));
      CHECK_FALSE(contains(k, *res.boundary_point, true));
      CHECK(*res.boundary_point == res.barycenter * (res.value / (res.value - 1)));
    }
    const UnimodularAffineMap f(rng.unimodular(n), LatticePoint::Zero(n));
    CHECK(r_invariant(affine_image(k, f)).value == res.value);
  }
}

TEST_CASE("shrink to the barycenter") {
  CHECK(shrink_to_barycenter(segment(-1, Q(1, 2))) == segment(Q(-1, 2), Q(1, 2)));
  CHECK(shrink_to_barycenter(reflexive_triangle()) == reflexive_triangle());

  RandomPolytopes rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    const VPolytope k = gen::lattice_free_but_origin(rng, n, 6);
    const Rational r = r_invariant(k).value;
    const VPolytope s = shrink_to_barycenter(k);
    CHECK(is_subset(s, k));
    CHECK(is_zero(barycenter(s)));
    CHECK(volume(s) == pow(r, static_cast<unsigned>(n)) * volume(k));
    CHECK(origin_is_only_interior_lattice_point(s));
  }
}

TEST_CASE("ehrhart check") {
  const auto eq = ehrhart_check(reflexive_triangle());
  CHECK(eq.status == Status::Equality);
  CHECK(eq.rational("volume") == Q(9, 2));
  CHECK(*eq.bound == Q(9, 2));
  CHECK(eq.rational("classical_bound") == Q(9, 2));
  REQUIRE(eq.witness.has_value());
  const auto& w = std::get<UnimodularAffineMap>(*eq.witness);
  CHECK(w == UnimodularAffineMap(IntegerMatrix::Identity(2, 2), lp({1, 1})));
  CHECK(contained_in_dual_of_lattice_polytope(reflexive_triangle()));

  const auto sq = ehrhart_check(cube(2, -1, 1));
  CHECK(sq.status == Status::Strict);
  CHECK(sq.rational("volume") == 4);

  const auto ce = ehrhart_check(counterexample());
  CHECK(ce.status == Status::Strict);
  CHECK(ce.rational("volume") == 3);
  CHECK(ce.rational("R") == 1);
  CHECK(*ce.bound == Q(9, 2));
  CHECK_FALSE(contained_in_dual_of_lattice_polytope(counterexample()));

  // Not exactly {0} inside: not applicable.
  CHECK(ehrhart_check(standard_simplex(2, 3)).status == Status::NotApplicable);
  CHECK(ehrhart_check(cube(2, -2, 2)).status == Status::NotApplicable);

  // Off-center body: generalized bound only.
  const auto off = ehrhart_check(poly({{-1, -1}, {2, -1}, {-1, 1}}));
  CHECK(off.find("classical_bound") == nullptr);
  CHECK(off.status == Status::Strict);
  CHECK(*off.bound == generalized_ehrhart_bound(2, off.rational("R")));
}

TEST_CASE("certify equality") {
  const auto w = certify_equality(reflexive_triangle());
  REQUIRE(w.has_value());
  CHECK(w->translation() == lp({1, 1}));
  CHECK_FALSE(certify_equality(cube(2, -1, 1)).has_value());
  CHECK(kind_of([] { certify_equality(standard_simplex(2, 3)); }) == ErrorKind::PreconditionFailed);

  // Linear unimodular images of (n+1) Delta_n recentred at 0, n <= 4.
  RandomPolytopes rng(13);
  for (Eigen::Index n = 1; n <= 4; ++n) {
    const VPolytope base = translate(standard_simplex(n, n + 1), -ones(n));
    for (int trial = 0; trial < (n <= 2 ? 100 : 25); ++trial) {
      const UnimodularAffineMap f(rng.unimodular(n), LatticePoint::Zero(n));
      const VPolytope image = affine_image(base, f);
      const auto g = certify_equality(image);
      REQUIRE(g.has_value());
      CHECK(affine_image(image, *g) == standard_simplex(n, n + 1));
    }
  }
}

TEST_CASE("milman-pajor and minkowski") {
  const auto mp = milman_pajor_check(reflexive_triangle());
  CHECK(mp.status == Status::Strict);
  CHECK(mp.rational("symmetric_volume") == 3);
  CHECK(*mp.bound == 12);
  // Hexagon K cap -K against the polygon oracle.
  const auto hexagon = poly({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
  CHECK(oracle::shoelace_area(hexagon.vertices()) == 3);

  const auto sym = milman_pajor_check(counterexample());
  CHECK(sym.rational("symmetric_volume") == sym.rational("volume"));

  CHECK(milman_pajor_check(standard_simplex(2, 3)).status == Status::NotApplicable);

  const auto mk = minkowski_combined_check(reflexive_triangle());
  CHECK(mk.status == Status::Strict);
  CHECK(mk.rational("symmetric_volume") == 3);
  CHECK(mk.rational("minkowski_bound") == 4);
  CHECK(*mk.bound == 16);

  const auto sq = minkowski_combined_check(cube(2, -1, 1));
  CHECK(std::get<std::string>(*sq.find("minkowski_status")) == "equality");
  CHECK(sq.status == Status::Strict);
  CHECK(minkowski_combined_check(standard_simplex(2, 3)).status == Status::NotApplicable);

  RandomPolytopes rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const VPolytope k = gen::centered(rng, 2 + trial % 2, 7);
    const auto r = milman_pajor_check(k);
    CHECK(r.status != Status::Violation);
    if (k.dim() == 2)
      CHECK(r.rational("volume") == oracle::pyramid_volume(k.vertices()));
  }
}

TEST_CASE("grunbaum and pyramids") {
  const auto half = grunbaum_check(cube(2, 0, 1), HalfSpace(point({1, 0}), Q(1, 2)));
  CHECK(half.status == Status::Strict);
  CHECK(half.rational("volume_cut") == Q(1, 2));
  CHECK(*half.bound == Q(4, 9));

  const auto corner = grunbaum_check(standard_simplex(2, 3), HalfSpace(point({-1, 0}), -1));
  CHECK(corner.status == Status::Equality);
  CHECK(corner.rational("volume_cut") == 2);
  REQUIRE(corner.attached.size() == 1);
  const auto& pyr = corner.attached[0];
  CHECK(std::get<bool>(*pyr.find("pyramid")));
  CHECK(std::get<RationalPoint>(*pyr.find("apex")) == point({3, 0}));

  CHECK(grunbaum_check(standard_simplex(2, 3), HalfSpace(point({1, 0}), 0)).status == Status::NotApplicable);

  for (const auto& h : {HalfSpace(point({1, 0}), Q(1, 2)), HalfSpace(point({1, 1}), 1), HalfSpace(point({1, -2}), Q(-1, 2))}) {
    const auto p = pyramid_equality_check(cube(2, 0, 1), h);
    CHECK(p.status == Status::Strict);
    CHECK_FALSE(std::get<bool>(*p.find("pyramid")));
  }
  // Delta_2 cut through its barycenter along a direction parallel to no edge.
  const auto tilted = pyramid_equality_check(standard_simplex(2), HalfSpace(point({1, 2}), 1));
  CHECK_FALSE(std::get<bool>(*tilted.find("pyramid")));
  CHECK(tilted.status == Status::Strict);
  // Same simplex, complementary side: the apex is outside H so no equality.
  const auto base_side = pyramid_equality_check(standard_simplex(2, 3), HalfSpace(point({1, 0}), 1));
  CHECK_FALSE(std::get<bool>(*base_side.find("pyramid")));
  CHECK(base_side.status == Status::Strict);
  CHECK(pyramid_equality_check(cube(2, 0, 1), HalfSpace(point({1, 0}), 0)).status == Status::NotApplicable);

  // Cut volumes against a polygon clipping oracle.
  RandomPolytopes rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    RandomPolytopeOptions o;
    o.min_points = 3;
    o.max_points = trial % 3 == 0 ? 3 : 7;
    const VPolytope k = rng.polytope(o);
    const HalfSpace h = rng.halfspace_through(barycenter(k));
    const auto r = grunbaum_check(k, h);
    CHECK(r.status != Status::Violation);
    CHECK(r.rational("volume_cut") == polygon_area(oracle::clip_polygon(k.vertices(), h.normal, h.offset)));
  }
}

TEST_CASE("phi construction") {
  const VPolytope q = projective_plane();
  const VPolytope p = dual_polytope(q);
  REQUIRE(p == reflexive_triangle());

  const auto a = construct_phi(p, q, point({-1, -1}));
  RationalMatrix id = RationalMatrix::Identity(2, 2);
  CHECK(a.map.matrix == id);
  CHECK(a.map.translation == ones(2));
  CHECK(a.det == 1);
  CHECK(a.labels[0] == lp({1, 0}));
  CHECK(a.labels[1] == lp({0, 1}));

  const auto b = construct_phi(p, q, point({2, -1}));
  RationalMatrix m(2, 2);
  m << 0, 1, -1, -1;
  CHECK(b.map.matrix == m);
  CHECK(abs(b.det) == 1);
  CHECK(b.map(RationalPoint::Zero(2)) == ones(2));
  CHECK(is_zero(b.map(point({2, -1}))));

  CHECK(kind_of([&] { construct_phi(p, q, point({0, 0})); }) == ErrorKind::PreconditionFailed);
  CHECK(kind_of([&] { construct_phi(cube(2, -1, 1), q, point({1, 1})); }) == ErrorKind::PreconditionFailed);

  // Non-simple vertices: the dual of the 3-cube is the octahedron, whose
  // vertices lie on four facets each.
  const VPolytope oct = cross_polytope(3);
  const VPolytope cube3 = cube(3, -1, 1);
  REQUIRE(dual_polytope(cube3) == oct);
  for (const auto& v : oct.vertices()) {
    const auto phi = construct_phi(oct, cube3, v);
    CHECK(phi.facets.size() == 3);
    CHECK(abs(phi.det) >= 1);
    for (const auto& w : oct.vertices()) CHECK((phi.map(w).array() >= 0).all());
  }
}

TEST_CASE("proof trace") {
  const auto eq = proof_trace(reflexive_triangle(), projective_plane());
  CHECK(eq.status == Status::Equality);
  REQUIRE(eq.chains.size() == 3);
  const std::vector<Rational> expected{Q(9, 2), 1, Q(9, 2), 2, 2, 2, 2, Q(9, 2)};
  for (const auto& c : eq.chains) {
    CHECK(c.values() == expected);
    CHECK(c.all_equalities());
    CHECK(c.steps.size() == 7);
  }
  CHECK(eq.chains[0].phi.vertex == point({-1, -1}));

  const auto sq = proof_trace(cube(2, -1, 1), cross_polytope(2));
  CHECK(sq.status == Status::Strict);
  for (const auto& c : sq.chains) {
    CHECK_FALSE(c.all_equalities());
    CHECK_FALSE(c.any_violation());
    CHECK(c.grunbaum_term == Q(16, 9));
  }

  // Smaller body inside the same dual.
  const auto inner = proof_trace(cube(2, Q(-1, 2), Q(1, 2)), cross_polytope(2));
  CHECK(inner.status == Status::Strict);

  CHECK(kind_of([] { proof_trace(standard_simplex(2, 3), projective_plane()); }) == ErrorKind::PreconditionFailed);
  CHECK(kind_of([] { proof_trace(cube(2, -2, 2), cross_polytope(2)); }) == ErrorKind::PreconditionFailed);
  CHECK(kind_of([] { proof_trace(cube(2, -1, 1), counterexample()); }) == ErrorKind::PreconditionFailed);

  // Three dimensions: (4 Delta_3 - 1) against its dual.
  const VPolytope t3 = translate(standard_simplex(3, 4), -ones(3));
  const auto d3 = proof_trace(t3, dual_polytope(t3));
  CHECK(d3.status == Status::Equality);
  for (const auto& c : d3.chains) CHECK(c.all_equalities());
}

TEST_CASE("final counting contradiction") {
  for (long n = 2; n <= 8; ++n) {
    const Eigen::Index d = n;
    const unsigned un = static_cast<unsigned>(n);
    CHECK(pow(Rational(n + 1), un) > 2 * pow(Rational(n), un));
    // (n Delta_{n-1}) x [0, 2] as a hull of 2n points.
    std::vector<RationalPoint> pts;
    const VPolytope base = standard_simplex(d - 1, n);
    for (const auto& v : base.vertices())
      for (int z : {0, 2}) {
        RationalPoint x(d);
        x.head(d - 1) = v;
        x(d - 1) = z;
        pts.push_back(x);
      }
    const Rational expected = 2 * pow(Rational(n), un - 1) / Rational(factorial(un - 1));
    CHECK(volume(hull(pts)) == expected);
  }
}

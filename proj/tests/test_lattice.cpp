#include <doctest.h>

#include "ehrhart/lattice.hpp"
#include "ehrhart/random.hpp"
#include "oracles.hpp"

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

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an ehrhart::Error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("lattice points") {
  const auto inner = lattice_points(counterexample(), true);
  REQUIRE(inner.size() == 1);
  CHECK(is_zero(inner[0]));

  const auto dual = poly({{1, -2}, {-1, 2}, {Q(2, 3), 0}, {Q(-2, 3), 0}});
  const auto pts = lattice_points(dual, false);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == lp({-1, 2}));
  CHECK(pts[1] == lp({0, 0}));
  CHECK(pts[2] == lp({1, -2}));

  // Brute-force count over a box agrees with binomial(t + n, n).
  for (long t = 1; t <= 4; ++t)
    for (Eigen::Index n = 1; n <= 3; ++n) {
      const auto s = standard_simplex(n, t);
      const auto expected = oracle::count_box(n, -1, t + 1, [&](const RationalPoint& x) { return contains(s, x); });
      CHECK(lattice_points(s).size() == expected);
      CHECK(static_cast<long>(expected) == oracle::binomial(t + n, n));
    }
  CHECK(lattice_points(standard_simplex(2, 3)).size() == 10);

  // H-representation overload, including an empty polytope.
  CHECK(lattice_points(v_to_h(standard_simplex(2, 3)), true).size() == 1);
  CHECK(lattice_points(HPolytope::from_inequalities(1, {HalfSpace(point({1}), 0), HalfSpace(point({-1}), -1)})).empty());
}

TEST_CASE("dual polytope") {
  CHECK(dual_polytope(projective_plane()) == poly({{-1, -1}, {2, -1}, {-1, 2}}));
  CHECK(dual_polytope(counterexample()) == poly({{1, -2}, {-1, 2}, {Q(2, 3), 0}, {Q(-2, 3), 0}}));
  CHECK(dual_polytope(cross_polytope(2)) == cube(2, -1, 1));
  CHECK(kind_of([] { dual_polytope(standard_simplex(2)); }) == ErrorKind::OriginNotInterior);
  // Agrees with intersecting the defining half-spaces directly.
  const auto q = poly({{1, 0}, {0, 1}, {-1, -1}, {0, -1}});
  std::vector<HalfSpace> sys;
  for (const auto& v : q.vertices()) sys.emplace_back(-v, 1);
  CHECK(dual_polytope(q) == h_to_v(HPolytope::from_inequalities(2, sys)));
}

TEST_CASE("fano and reflexive predicates") {
  CHECK(is_fano(projective_plane()));
  CHECK_FALSE(is_fano(poly({{2, 0}, {0, 2}, {-2, -2}})));
  CHECK_FALSE(is_fano(standard_simplex(3)));
  CHECK_FALSE(is_fano(counterexample()));

  CHECK(is_reflexive(reflexive_triangle()));
  CHECK(is_reflexive(cube(2, -1, 1)));
  CHECK(is_reflexive(cube(3, -1, 1)));
  CHECK_FALSE(is_reflexive(poly({{2, 0}, {0, 2}, {-2, -2}})));
  CHECK(kind_of([] { is_reflexive(counterexample()); }) == ErrorKind::NotLatticePolytope);
  CHECK(kind_of([] { is_reflexive(standard_simplex(2)); }) == ErrorKind::OriginNotInterior);
}

TEST_CASE("facet lattice data") {
  const auto sq = facet_lattice_data(cube(2, -1, 1));
  REQUIRE(sq.facets.size() == 4);
  for (const auto& f : sq.facets) {
    CHECK(f.lattice_distance == 1);
    REQUIRE(f.relative_interior.size() == 1);
    CHECK(to_rational(f.relative_interior[0]) == f.facet.normal);
  }

  const auto t = facet_lattice_data(reflexive_triangle());
  bool found = false;
  for (const auto& f : t.facets)
    if (f.facet == HalfSpace(point({0, -1}), 1)) {
      found = true;
      REQUIRE(f.relative_interior.size() == 2);
      CHECK(f.relative_interior[0] == lp({0, -1}));
      CHECK(f.relative_interior[1] == lp({1, -1}));
    }
  CHECK(found);
  CHECK(t.all_points().size() == 6);

  CHECK(facet_lattice_data(projective_plane()).all_points().empty());
}

TEST_CASE("root symmetry") {
  const auto sq = root_symmetry_check(cube(2, -1, 1));
  CHECK(sq.status == Status::Equality);
  CHECK(sq.rational("root_count") == 4);

  const auto tri = root_symmetry_check(reflexive_triangle());
  CHECK(tri.status == Status::Equality);
  const auto& roots = std::get<std::vector<RationalPoint>>(*tri.find("roots"));
  CHECK(std::any_of(roots.begin(), roots.end(), [](const RationalPoint& m) { return vectors_equal(m, point({0, 1})); }));

  const auto pentagon = poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}});
  REQUIRE(is_reflexive(pentagon));
  CHECK(root_symmetry_check(pentagon).status == Status::NotApplicable);
}

TEST_CASE("normal form") {
  const auto t3 = standard_simplex(2, 3);
  IntegerMatrix m(2, 2);
  m << 1, 1, 0, 1;
  const UnimodularAffineMap f(m, lp({5, -7}));
  CHECK(normal_form(t3) == normal_form(affine_image(t3, f)));
  CHECK_FALSE(normal_form(t3) == normal_form(cube(2, 0, 2)));
  for (Eigen::Index n = 1; n <= 4; ++n)
    CHECK(normal_form(standard_simplex(n)) == normal_form(translate(standard_simplex(n), ones(n) * 3)));

  const auto nf = normal_form(t3);
  std::vector<RationalPoint> cols;
  for (Eigen::Index j = 0; j < nf.vertices.cols(); ++j) cols.push_back(to_rational(LatticePoint(nf.vertices.col(j))));
  CHECK(affine_image(t3, nf.transform) == hull(cols));

  CHECK(kind_of([] { normal_form(cube(5, 0, 1)); }) == ErrorKind::DimensionUnsupported);
  CHECK(kind_of([] { normal_form(standard_simplex(2, Q(1, 2))); }) == ErrorKind::NotLatticePolytope);
}

TEST_CASE("equivalence witnesses") {
  const auto a = reflexive_triangle();
  const auto b = standard_simplex(2, 3);
  const auto f = are_equivalent(a, b);
  REQUIRE(f.has_value());
  CHECK(affine_image(a, *f) == b);
  CHECK_FALSE(are_equivalent(b, cube(2, 0, 2)).has_value());
  const auto id = are_equivalent(b, b);
  REQUIRE(id.has_value());
  CHECK(*id == UnimodularAffineMap::identity(2));
}

TEST_CASE("multiples of the unimodular simplex") {
  const auto f = is_multiple_of_unimodular_simplex(reflexive_triangle(), 3);
  REQUIRE(f.has_value());
  CHECK(*f == UnimodularAffineMap(IntegerMatrix::Identity(2, 2), lp({1, 1})));
  CHECK_FALSE(is_multiple_of_unimodular_simplex(cube(2, -1, 1), 3).has_value());
  for (Eigen::Index n = 1; n <= 6; ++n) {
    const auto g = is_multiple_of_unimodular_simplex(standard_simplex(n, 4), 4);
    REQUIRE(g.has_value());
    CHECK(*g == UnimodularAffineMap::identity(n));
  }
  // Right volume but wrong lattice structure.
  CHECK_FALSE(is_multiple_of_unimodular_simplex(poly({{0, 0}, {4, 0}, {1, 4}}), 4).has_value());
  // Rational translate of 3*Delta_2 is not lattice-equivalent.
  CHECK_FALSE(is_multiple_of_unimodular_simplex(translate(standard_simplex(2, 3), point({Q(1, 2), 0})), 3).has_value());
}

TEST_CASE("lattice invariants under random unimodular maps") {
  RandomPolytopes gen(7);
  const std::vector<VPolytope> corpus{reflexive_triangle(), cube(2, -1, 1), projective_plane(),
                                      poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}}),
                                      poly({{-1, -1}, {3, -1}, {-1, 1}}), cross_polytope(3),
                                      translate(standard_simplex(3, 4), -ones(3))};
  for (const auto& q : corpus) {
    const Eigen::Index n = q.dim();
    CAPTURE(n);
    const auto dual = dual_polytope(q);
    if (dual.is_lattice()) {
      CHECK(dual_polytope(dual) == q);
      CHECK(is_reflexive(q) == is_reflexive(dual));
    }
    CHECK(dual_polytope(dual) == q);

    const auto data = facet_lattice_data(q);
    for (std::size_t f = 0; f < data.facets.size(); ++f)
      for (const auto& m : data.facets[f].relative_interior) {
        const RationalPoint x = to_rational(m);
        CHECK(data.facets[f].facet.slack(x) == 0);
        for (std::size_t g = 0; g < q.facets().size(); ++g)
          if (g != f) CHECK(q.facets()[g].slack(x) < 0);
      }

    const auto nf = normal_form(q);
    const auto count = lattice_points(q).size();
    for (int trial = 0; trial < 100; ++trial) {
      const UnimodularAffineMap f(gen.unimodular(n), to_lattice(gen.point(n, 4, 1)));
      const auto image = affine_image(q, f);
      CHECK(normal_form(image) == nf);
      CHECK(lattice_points(image).size() == count);
      if (trial % 20 == 0) {
        const auto w = are_equivalent(q, image);
        REQUIRE(w.has_value());
        CHECK(affine_image(q, *w) == image);
        const auto back = are_equivalent(image, q);
        REQUIRE(back.has_value());
        CHECK(affine_image(image, w->inverse()) == q);
      }
    }
  }
}

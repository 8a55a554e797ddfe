#include "ehrhart/lattice.hpp"

#include "ehrhart/hermite.hpp"
#include "ehrhart/linalg.hpp"

#include <algorithm>
#include <functional>

namespace ehrhart {

namespace {

template <typename Contains>
std::vector<LatticePoint> box_points(const std::vector<RationalPoint>& vertices, Eigen::Index n,
                                     Contains&& inside) {
  std::vector<LatticePoint> out;
  if (vertices.empty()) return out;
  LatticePoint lo(n), hi(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Rational mn = vertices[0](i), mx = vertices[0](i);
    for (const auto& v : vertices) {
      if (v(i) < mn) mn = v(i);
      if (v(i) > mx) mx = v(i);
    }
    lo(i) = ceil(mn);
    hi(i) = floor(mx);
    if (lo(i) > hi(i)) return out;
  }
  LatticePoint x = lo;
  RationalPoint q(n);
  while (true) {
    for (Eigen::Index i = 0; i < n; ++i) q(i) = Rational(x(i));
    if (inside(q)) out.push_back(x);
    Eigen::Index i = 0;
    while (i < n && x(i) == hi(i)) {
      x(i) = lo(i);
      ++i;
    }
    if (i == n) break;
    x(i) += 1;
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

void require_origin_interior(const VPolytope& p) {
  if (!contains(p, RationalPoint::Zero(p.dim()), true))
    throw Error(ErrorKind::OriginNotInterior, "the origin is not an interior point");
}

bool columns_less(const IntegerMatrix& a, const IntegerMatrix& b) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) < b(i, j)) return true;
      if (b(i, j) < a(i, j)) return false;
    }
  return false;
}

}  // namespace

std::vector<LatticePoint> lattice_points(const HPolytope& p, bool strict) {
  if (p.empty()) return {};
  return box_points(p.vertices(), p.dim(),
                    [&](const RationalPoint& x) { return contains(p, x, strict); });
}

std::vector<LatticePoint> lattice_points(const VPolytope& p, bool strict) {
  return box_points(p.vertices(), p.dim(),
                    [&](const RationalPoint& x) { return contains(p, x, strict); });
}

bool origin_is_only_interior_lattice_point(const VPolytope& p) {
  const auto inner = lattice_points(p, true);
  return inner.size() == 1 && is_zero(inner[0]);
}

VPolytope dual_polytope(const VPolytope& q) {
  require_origin_interior(q);
  // Facets <a, x> <= b (b > 0) of Q become vertices -a/b of Q*, and each
  // vertex v of Q becomes the facet <-v, x> <= 1.
  std::vector<RationalPoint> vertices;
  for (const auto& f : q.facets()) vertices.push_back(-f.normal / f.offset);
  std::vector<HalfSpace> facets;
  for (const auto& v : q.vertices()) facets.push_back(HalfSpace(-v, 1).normalized());
  return VPolytope::assemble(q.dim(), std::move(vertices), std::move(facets));
}

bool is_fano(const VPolytope& q) {
  if (q.num_vertices() == 0 || !q.is_lattice()) return false;
  if (!contains(q, RationalPoint::Zero(q.dim()), true)) return false;
  return std::all_of(q.vertices().begin(), q.vertices().end(),
                     [](const RationalPoint& v) { return content(to_lattice(v)) == 1; });
}

bool is_reflexive(const VPolytope& q) {
  if (!q.is_lattice()) throw Error(ErrorKind::NotLatticePolytope, "vertices are not integral");
  return dual_polytope(q).is_lattice();
}

std::vector<LatticePoint> FacetLatticeData::all_points() const {
  std::vector<LatticePoint> out;
  for (const auto& f : facets) out.insert(out.end(), f.relative_interior.begin(), f.relative_interior.end());
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

FacetLatticeData facet_lattice_data(const VPolytope& p) {
  require_origin_interior(p);
  FacetLatticeData data;
  for (const auto& f : p.facets()) data.facets.push_back({f, f.offset, {}});
  for (const auto& x : lattice_points(p, false)) {
    const RationalPoint q = to_rational(x);
    int on = -1, count = 0;
    for (std::size_t f = 0; f < p.facets().size(); ++f)
      if (p.facets()[f].slack(q) == 0) {
        on = static_cast<int>(f);
        ++count;
      }
    if (count == 1) data.facets[on].relative_interior.push_back(x);
  }
  return data;
}

CheckReport root_symmetry_check(const VPolytope& s) {
  const std::string name = "root-symmetry";
  if (!s.is_lattice()) return not_applicable(name, "not a lattice polytope");
  if (!contains(s, RationalPoint::Zero(s.dim()), true))
    return not_applicable(name, "origin is not interior");
  if (!is_reflexive(s)) return not_applicable(name, "not reflexive");
  const RationalPoint b = barycenter(s);
  if (!is_zero(b)) return not_applicable(name, "barycenter " + to_string(b) + " is not the origin");

  CheckReport r;
  r.check = name;
  const auto roots = facet_lattice_data(s).all_points();
  std::vector<RationalPoint> offenders;
  for (const auto& m : roots) {
    const LatticePoint neg = -m;
    if (!std::binary_search(roots.begin(), roots.end(), neg, LexLess{}))
      offenders.push_back(to_rational(m));
  }
  std::vector<RationalPoint> as_points;
  for (const auto& m : roots) as_points.push_back(to_rational(m));
  r.set("roots", as_points);
  r.set("root_count", Rational(static_cast<long>(roots.size())));
  if (offenders.empty()) {
    r.status = Status::Equality;
  } else {
    r.status = Status::Violation;
    r.set("offenders", offenders);
    r.reason = "relatively interior facet point whose negative is not a facet interior point";
  }
  return r;
}

std::vector<std::vector<int>> vertex_neighbours(const VPolytope& p) {
  const std::size_t m = p.num_vertices();
  std::vector<std::vector<int>> on_facets(m);
  for (std::size_t f = 0; f < p.facet_vertices().size(); ++f)
    for (int v : p.facet_vertices()[f]) on_facets[v].push_back(static_cast<int>(f));

  std::vector<std::vector<int>> adj(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<int> common;
      std::set_intersection(on_facets[i].begin(), on_facets[i].end(), on_facets[j].begin(),
                            on_facets[j].end(), std::back_inserter(common));
      // i and j span an edge iff no third vertex lies on all their common facets.
      bool edge = true;
      for (std::size_t k = 0; k < m && edge; ++k) {
        if (k == i || k == j) continue;
        edge = !std::includes(on_facets[k].begin(), on_facets[k].end(), common.begin(), common.end());
      }
      if (edge) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
    }
  return adj;
}

NormalForm normal_form(const VPolytope& q) {
  if (!q.is_lattice()) throw Error(ErrorKind::NotLatticePolytope, "vertices are not integral");
  const Eigen::Index n = q.dim();
  if (n > kNormalFormMaxDim)
    throw Error(ErrorKind::DimensionUnsupported,
                "normal form is configured for dimension <= " + std::to_string(kNormalFormMaxDim));

  const std::size_t m = q.num_vertices();
  std::vector<LatticePoint> verts;
  for (const auto& v : q.vertices()) verts.push_back(to_lattice(v));
  const auto adj = vertex_neighbours(q);

  std::optional<NormalForm> best;
  std::vector<int> chosen;
  for (std::size_t base = 0; base < m; ++base) {
    std::function<void()> extend = [&]() {
      if (static_cast<Eigen::Index>(chosen.size()) == n) {
        IntegerMatrix b(n, n);
        for (Eigen::Index j = 0; j < n; ++j) b.col(j) = verts[chosen[j]] - verts[base];
        if (determinant(b) == 0) return;
        const auto hnf = hermite_normal_form(b);
        const IntegerMatrix& u = hnf.transform;
        std::vector<LatticePoint> images;
        for (const auto& v : verts) images.push_back(u * (v - verts[base]));
        std::sort(images.begin(), images.end(), LexLess{});
        IntegerMatrix key(n, static_cast<Eigen::Index>(m));
        for (std::size_t j = 0; j < m; ++j) key.col(j) = images[j];
        if (!best || columns_less(key, best->vertices)) {
          LatticePoint t = -(u * verts[base]);
          best = NormalForm{std::move(key), UnimodularAffineMap(u, t)};
        }
        return;
      }
      for (int nb : adj[base]) {
        if (std::find(chosen.begin(), chosen.end(), nb) != chosen.end()) continue;
        chosen.push_back(nb);
        extend();
        chosen.pop_back();
      }
    };
    extend();
  }
  if (!best) throw std::logic_error("normal_form: no spanning edge frame found");
  return *std::move(best);
}

std::optional<UnimodularAffineMap> are_equivalent(const VPolytope& a, const VPolytope& b) {
  if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices()) {
    if (!a.is_lattice() || !b.is_lattice())
      throw Error(ErrorKind::NotLatticePolytope, "vertices are not integral");
    return std::nullopt;
  }
  const NormalForm na = normal_form(a);
  const NormalForm nb = normal_form(b);
  if (!(na == nb)) return std::nullopt;
  const UnimodularAffineMap f = nb.transform.inverse().compose(na.transform);
  if (!(affine_image(a, f) == b)) throw std::logic_error("are_equivalent: witness does not map A onto B");
  return f;
}

std::optional<UnimodularAffineMap> is_multiple_of_unimodular_simplex(const VPolytope& k,
                                                                     const Integer& multiplier) {
  if (!k.is_simplex() || multiplier <= 0) return std::nullopt;
  const Eigen::Index n = k.dim();
  // Base at the lexicographically first vertex; the others in descending
  // order, so that multiplier * Delta_n itself gets the identity.
  const RationalPoint& base = k.vertex(0);
  RationalMatrix edges(n, n);
  for (Eigen::Index j = 0; j < n; ++j) edges.col(j) = k.vertex(static_cast<std::size_t>(n - j)) - base;
  const Rational det = determinant(edges);
  if (abs(det) != pow(Rational(multiplier), static_cast<unsigned>(n))) return std::nullopt;
  const RationalMatrix m = inverse(edges) * Rational(multiplier);
  const RationalPoint t = -(m * base);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!is_integer(t(i))) return std::nullopt;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!is_integer(m(i, j))) return std::nullopt;
  }
  UnimodularAffineMap f(to_integer(m), to_lattice(t));
  if (!(affine_image(k, f) == standard_simplex(n, Rational(multiplier)))) return std::nullopt;
  return f;
}

}  // namespace ehrhart

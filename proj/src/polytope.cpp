#include "ehrhart/polytope.hpp"

#include "double_description.hpp"
#include "ehrhart/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace ehrhart {

// ---------------------------------------------------------------- HalfSpace

HalfSpace::HalfSpace(RationalPoint n, Rational c) : normal(std::move(n)), offset(std::move(c)) {
  if (is_zero(normal)) throw Error(ErrorKind::PreconditionFailed, "half-space with zero normal");
}

Rational HalfSpace::slack(const RationalPoint& x) const { return normal.dot(x) - offset; }

bool HalfSpace::contains(const RationalPoint& x, bool strict) const {
  const Rational s = slack(x);
  return strict ? s < 0 : s <= 0;
}

HalfSpace HalfSpace::normalized() const {
  Rational factor;
  const LatticePoint n = primitive_direction(normal, &factor);
  return HalfSpace(to_rational(n), offset * factor);
}

HalfSpace HalfSpace::complement() const { return HalfSpace(-normal, -offset); }

bool operator==(const HalfSpace& a, const HalfSpace& b) {
  return a.offset == b.offset && vectors_equal(a.normal, b.normal);
}

HalfSpace parse_halfspace(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("half-space must look like 'a1,...,an;c'");
  std::vector<Rational> coeffs;
  std::stringstream ss(text.substr(0, semi));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    coeffs.push_back(parse_rational(item));
  }
  std::string rhs = text.substr(semi + 1);
  rhs.erase(std::remove_if(rhs.begin(), rhs.end(), ::isspace), rhs.end());
  RationalPoint n(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) n(i) = coeffs[i];
  return HalfSpace(n, parse_rational(rhs));
}

namespace {

bool facet_less(const HalfSpace& a, const HalfSpace& b) {
  const auto c = lex_compare(a.normal, b.normal);
  if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  return a.offset < b.offset;
}

void sort_unique_points(std::vector<RationalPoint>& points) {
  std::sort(points.begin(), points.end(), LexLess{});
  points.erase(std::unique(points.begin(), points.end(),
                           [](const RationalPoint& a, const RationalPoint& b) {
                             return vectors_equal(a, b);
                           }),
               points.end());
}

Eigen::Index affine_rank(const std::vector<RationalPoint>& points) {
  if (points.empty()) return -1;
  RationalMatrix d(static_cast<Eigen::Index>(points.size()) - 1, points[0].size());
  for (std::size_t i = 1; i < points.size(); ++i) d.row(i - 1) = (points[i] - points[0]).transpose();
  return d.rows() == 0 ? 0 : rank(d);
}

}  // namespace

// ---------------------------------------------------------------- VPolytope

VPolytope VPolytope::assemble(Eigen::Index dim, std::vector<RationalPoint> vertices,
                              std::vector<HalfSpace> facets) {
  VPolytope p;
  p.dim_ = dim;
  sort_unique_points(vertices);
  std::sort(facets.begin(), facets.end(), facet_less);
  p.vertices_ = std::move(vertices);
  p.facets_ = std::move(facets);
  p.incidence_.resize(p.facets_.size());
  for (std::size_t f = 0; f < p.facets_.size(); ++f)
    for (std::size_t v = 0; v < p.vertices_.size(); ++v)
      if (p.facets_[f].slack(p.vertices_[v]) == 0) p.incidence_[f].push_back(static_cast<int>(v));
  return p;
}

bool VPolytope::is_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RationalPoint& v) { return is_integral(v); });
}

bool operator==(const VPolytope& a, const VPolytope& b) {
  if (a.dim_ != b.dim_ || a.vertices_.size() != b.vertices_.size()) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i)
    if (!vectors_equal(a.vertices_[i], b.vertices_[i])) return false;
  return true;
}

// ---------------------------------------------------------------- HPolytope

HPolytope HPolytope::from_inequalities(Eigen::Index dim, const std::vector<HalfSpace>& system) {
  auto found = detail::enumerate_vertices(dim, system);
  if (found.status == detail::Feasibility::Unbounded)
    throw Error(ErrorKind::Unbounded, "inequality system has an unbounded solution set");

  HPolytope p;
  p.dim_ = dim;
  if (found.status == detail::Feasibility::Empty) return p;

  sort_unique_points(found.vertices);
  p.vertices_ = std::move(found.vertices);
  p.dimension_ = affine_rank(p.vertices_);

  const std::size_t nv = p.vertices_.size();
  std::vector<boost::dynamic_bitset<>> tight;
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < system.size(); ++i) {
    boost::dynamic_bitset<> t(nv);
    for (std::size_t v = 0; v < nv; ++v)
      if (system[i].slack(p.vertices_[v]) == 0) t.set(v);
    tight.push_back(t);
    if (t.any() && !t.all()) candidates.push_back(i);
  }
  std::vector<boost::dynamic_bitset<>> seen;
  for (auto i : candidates) {
    bool maximal = true;
    for (auto j : candidates)
      if (tight[i].is_proper_subset_of(tight[j])) {
        maximal = false;
        break;
      }
    if (!maximal || std::find(seen.begin(), seen.end(), tight[i]) != seen.end()) continue;
    seen.push_back(tight[i]);
    p.facets_.push_back(system[i].normalized());
  }
  std::sort(p.facets_.begin(), p.facets_.end(), facet_less);

  if (p.dimension_ < dim) {
    RationalMatrix d(static_cast<Eigen::Index>(nv), dim);
    for (std::size_t v = 0; v < nv; ++v) d.row(v) = (p.vertices_[v] - p.vertices_[0]).transpose();
    const RationalMatrix normals = null_space(d);
    for (Eigen::Index k = 0; k < normals.cols(); ++k) {
      const RationalPoint w = to_rational(primitive_direction(normals.col(k)));
      p.equations_.emplace_back(w, w.dot(p.vertices_[0]));
    }
  }
  return p;
}

std::vector<HalfSpace> HPolytope::inequalities() const {
  std::vector<HalfSpace> all = facets_;
  for (const auto& e : equations_) {
    all.push_back(e);
    all.push_back(e.complement());
  }
  return all;
}

bool operator==(const HPolytope& a, const HPolytope& b) {
  if (a.dim_ != b.dim_ || a.dimension_ != b.dimension_ || a.vertices_.size() != b.vertices_.size())
    return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i)
    if (!vectors_equal(a.vertices_[i], b.vertices_[i])) return false;
  return true;
}

// ---------------------------------------------------------------- maps

RationalAffineMap RationalAffineMap::identity(Eigen::Index n) {
  return {RationalMatrix::Identity(n, n), RationalPoint::Zero(n)};
}

RationalAffineMap RationalAffineMap::translation_by(const RationalPoint& t) {
  return {RationalMatrix::Identity(t.size(), t.size()), t};
}

RationalAffineMap RationalAffineMap::scaling(Eigen::Index n, const Rational& factor) {
  return {RationalMatrix::Identity(n, n) * factor, RationalPoint::Zero(n)};
}

RationalPoint RationalAffineMap::operator()(const RationalPoint& x) const {
  return matrix * x + translation;
}

Rational RationalAffineMap::det() const { return determinant(matrix); }

RationalAffineMap RationalAffineMap::inverse() const {
  RationalMatrix inv = ehrhart::inverse(matrix);
  RationalPoint t = -(inv * translation);
  return {std::move(inv), std::move(t)};
}

RationalAffineMap RationalAffineMap::compose(const RationalAffineMap& inner) const {
  return {matrix * inner.matrix, matrix * inner.translation + translation};
}

UnimodularAffineMap::UnimodularAffineMap(IntegerMatrix matrix, LatticePoint translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() != translation_.size())
    throw Error(ErrorKind::SingularMap, "shape mismatch");
  const Integer d = determinant(matrix_);
  if (d != 1 && d != -1) throw Error(ErrorKind::SingularMap, "determinant " + d.str() + " is not +-1");
}

UnimodularAffineMap UnimodularAffineMap::identity(Eigen::Index n) {
  return UnimodularAffineMap(IntegerMatrix::Identity(n, n), LatticePoint::Zero(n));
}

RationalPoint UnimodularAffineMap::operator()(const RationalPoint& x) const {
  return to_rational() (x);
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
  const IntegerMatrix inv = to_integer(ehrhart::inverse(ehrhart::to_rational(matrix_)));
  LatticePoint t = -(inv * translation_);
  return UnimodularAffineMap(inv, t);
}

UnimodularAffineMap UnimodularAffineMap::compose(const UnimodularAffineMap& inner) const {
  return UnimodularAffineMap(matrix_ * inner.matrix_,
                             LatticePoint(matrix_ * inner.translation_ + translation_));
}

RationalAffineMap UnimodularAffineMap::to_rational() const {
  return {ehrhart::to_rational(matrix_), ehrhart::to_rational(translation_)};
}

bool operator==(const UnimodularAffineMap& a, const UnimodularAffineMap& b) {
  return a.matrix_ == b.matrix_ && a.translation_ == b.translation_;
}

// ---------------------------------------------------------------- conversions

VPolytope hull(const std::vector<RationalPoint>& input) {
  if (input.empty()) throw Error(ErrorKind::DegenerateInput, "no points");
  const Eigen::Index n = input[0].size();
  if (n == 0) throw Error(ErrorKind::DegenerateInput, "zero ambient dimension");
  for (const auto& p : input)
    if (p.size() != n) throw Error(ErrorKind::DegenerateInput, "points of mixed dimension");

  std::vector<RationalPoint> points = input;
  sort_unique_points(points);
  if (static_cast<Eigen::Index>(points.size()) < n + 1 || affine_rank(points) < n)
    throw Error(ErrorKind::DegenerateInput, "points do not span an " + std::to_string(n) +
                                                "-dimensional affine space");

  RationalPoint center = RationalPoint::Zero(n);
  for (const auto& p : points) center += p;
  center /= Rational(static_cast<long>(points.size()));

  // Facets of the hull are the vertices of the polar of (points - center).
  std::vector<HalfSpace> polar;
  for (const auto& p : points) {
    RationalPoint d = p - center;
    if (!is_zero(d)) polar.emplace_back(std::move(d), Rational(1));
  }
  const auto dual = detail::enumerate_vertices(n, polar);
  if (dual.status != detail::Feasibility::Bounded)
    throw std::logic_error("hull: polar of a full-dimensional point set is not bounded");

  std::vector<HalfSpace> facets;
  for (const auto& y : dual.vertices) facets.push_back(HalfSpace(y, 1 + y.dot(center)).normalized());

  std::vector<RationalPoint> vertices;
  for (const auto& p : points) {
    std::vector<RationalPoint> normals;
    for (const auto& f : facets)
      if (f.slack(p) == 0) normals.push_back(f.normal);
    if (static_cast<Eigen::Index>(normals.size()) < n) continue;
    RationalMatrix m(static_cast<Eigen::Index>(normals.size()), n);
    for (std::size_t i = 0; i < normals.size(); ++i) m.row(i) = normals[i].transpose();
    if (rank(m) == n) vertices.push_back(p);
  }
  return VPolytope::assemble(n, std::move(vertices), std::move(facets));
}

HPolytope v_to_h(const VPolytope& p) {
  HPolytope h;
  h.dim_ = p.dim();
  h.dimension_ = p.dim();
  h.facets_ = p.facets();
  h.vertices_ = p.vertices();
  return h;
}

VPolytope h_to_v(const HPolytope& p) {
  if (p.empty()) throw Error(ErrorKind::Empty, "polytope is empty");
  if (!p.full_dimensional())
    throw Error(ErrorKind::DegenerateInput,
                "polytope has dimension " + std::to_string(p.dimension()) + " in R^" +
                    std::to_string(p.dim()));
  return VPolytope::assemble(p.dim(), p.vertices(), p.facets());
}

// ---------------------------------------------------------------- measure

namespace {

using Face = std::vector<int>;

std::vector<Face> facets_of_face(const VPolytope& p, const Face& face) {
  std::vector<Face> candidates;
  for (const auto& facet : p.facet_vertices()) {
    Face meet;
    std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(),
                          std::back_inserter(meet));
    if (meet.empty() || meet.size() == face.size()) continue;
    if (std::find(candidates.begin(), candidates.end(), meet) == candidates.end())
      candidates.push_back(std::move(meet));
  }
  std::vector<Face> maximal;
  for (const auto& c : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const Face& o) {
      return o.size() > c.size() && std::includes(o.begin(), o.end(), c.begin(), c.end());
    });
    if (!dominated) maximal.push_back(c);
  }
  return maximal;
}

void triangulate_face(const VPolytope& p, const Face& face, Eigen::Index k,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<Eigen::Index>(face.size()) == k + 1) {
    out.push_back(face);
    return;
  }
  const int apex = face.front();
  for (const auto& sub : facets_of_face(p, face)) {
    if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
    std::vector<std::vector<int>> cells;
    triangulate_face(p, sub, k - 1, cells);
    for (auto& cell : cells) {
      cell.insert(cell.begin(), apex);
      out.push_back(std::move(cell));
    }
  }
}

Rational simplex_det(const std::vector<RationalPoint>& pool, const std::vector<int>& cell) {
  const Eigen::Index n = pool[0].size();
  RationalMatrix e(n, n);
  for (Eigen::Index j = 0; j < n; ++j) e.col(j) = pool[cell[j + 1]] - pool[cell[0]];
  return abs(determinant(e));
}

}  // namespace

Triangulation triangulate(const VPolytope& p) {
  if (p.num_vertices() == 0) throw Error(ErrorKind::DegenerateInput, "empty polytope");
  Triangulation t;
  t.pool = p.vertices();
  Face all(p.num_vertices());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  triangulate_face(p, all, p.dim(), t.simplices);
  return t;
}

Rational volume(const VPolytope& p) {
  const Triangulation t = triangulate(p);
  Rational sum = 0;
  for (const auto& cell : t.simplices) sum += simplex_det(t.pool, cell);
  return sum / Rational(factorial(static_cast<unsigned>(p.dim())));
}

RationalPoint barycenter(const VPolytope& p) {
  const Triangulation t = triangulate(p);
  const Eigen::Index n = p.dim();
  RationalPoint weighted = RationalPoint::Zero(n);
  Rational total = 0;
  for (const auto& cell : t.simplices) {
    const Rational w = simplex_det(t.pool, cell);
    RationalPoint sum = RationalPoint::Zero(n);
    for (int idx : cell) sum += t.pool[idx];
    weighted += sum * w;
    total += w;
  }
  return weighted / (total * (n + 1));
}

Rational volume(const HPolytope& p) {
  if (!p.full_dimensional()) return 0;
  return volume(h_to_v(p));
}

// ---------------------------------------------------------------- operations

HPolytope intersect(const HPolytope& p, const HalfSpace& h) {
  if (p.empty()) return p;
  auto system = p.inequalities();
  system.push_back(h);
  return HPolytope::from_inequalities(p.dim(), system);
}

HPolytope intersect_polytopes(const HPolytope& a, const HPolytope& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::PreconditionFailed, "dimension mismatch");
  if (a.empty()) return a;
  if (b.empty()) return b;
  auto system = a.inequalities();
  for (auto& h : b.inequalities()) system.push_back(std::move(h));
  return HPolytope::from_inequalities(a.dim(), system);
}

VPolytope affine_image(const VPolytope& p, const RationalAffineMap& f) {
  if (f.dim() != p.dim()) throw Error(ErrorKind::PreconditionFailed, "dimension mismatch");
  const auto inv = try_inverse(f.matrix);
  if (!inv) throw Error(ErrorKind::SingularMap, "affine map is not invertible");
  const RationalMatrix inv_t = inv->transpose();
  std::vector<RationalPoint> vertices;
  for (const auto& v : p.vertices()) vertices.push_back(f(v));
  std::vector<HalfSpace> facets;
  for (const auto& h : p.facets()) {
    RationalPoint n = inv_t * h.normal;
    Rational c = h.offset + n.dot(f.translation);
    facets.push_back(HalfSpace(std::move(n), std::move(c)).normalized());
  }
  return VPolytope::assemble(p.dim(), std::move(vertices), std::move(facets));
}

VPolytope affine_image(const VPolytope& p, const UnimodularAffineMap& f) {
  return affine_image(p, f.to_rational());
}

bool contains(const HPolytope& p, const RationalPoint& x, bool strict) {
  if (p.empty()) return false;
  for (const auto& e : p.equations())
    if (e.slack(x) != 0) return false;
  if (strict && !p.full_dimensional()) return false;
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [&](const HalfSpace& h) { return h.contains(x, strict); });
}

bool contains(const VPolytope& p, const RationalPoint& x, bool strict) {
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [&](const HalfSpace& h) { return h.contains(x, strict); });
}

bool is_subset(const VPolytope& inner, const VPolytope& outer) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const RationalPoint& v) { return contains(outer, v); });
}

// ---------------------------------------------------------------- constructions

VPolytope translate(const VPolytope& p, const RationalPoint& t) {
  return affine_image(p, RationalAffineMap::translation_by(t));
}

VPolytope scale(const VPolytope& p, const Rational& factor) {
  return affine_image(p, RationalAffineMap::scaling(p.dim(), factor));
}

VPolytope negate(const VPolytope& p) { return scale(p, Rational(-1)); }

VPolytope standard_simplex(Eigen::Index n, const Rational& multiplier) {
  std::vector<RationalPoint> pts{RationalPoint::Zero(n)};
  for (Eigen::Index i = 0; i < n; ++i) pts.push_back(unit_vector(n, i) * multiplier);
  return hull(pts);
}

VPolytope cube(Eigen::Index n, const Rational& lo, const Rational& hi) {
  std::vector<RationalPoint> pts;
  for (long mask = 0; mask < (1L << n); ++mask) {
    RationalPoint v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = (mask >> i) & 1 ? hi : lo;
    pts.push_back(v);
  }
  return hull(pts);
}

VPolytope cross_polytope(Eigen::Index n) {
  std::vector<RationalPoint> pts;
  for (Eigen::Index i = 0; i < n; ++i) {
    pts.push_back(unit_vector(n, i));
    pts.push_back(-unit_vector(n, i));
  }
  return hull(pts);
}

RationalPoint point(std::initializer_list<Rational> coords) {
  RationalPoint p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) p(i++) = c;
  return p;
}

}  // namespace ehrhart

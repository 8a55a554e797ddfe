#include "ehrhart/corpus.hpp"

#include "ehrhart/checks.hpp"
#include "ehrhart/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

namespace ehrhart {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

long parse_count(const std::string& tok, std::size_t line, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || v < 1) throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  return v;
}

struct Block {
  PolytopeRecord record;
  std::size_t header_line = 0;
  long dim = 0;
  long count = 0;
  std::vector<std::vector<Rational>> rows;
};

class Parser {
 public:
  explicit Parser(const ParseOptions& o) : options_(o) {}

  void line(const std::string& raw, std::size_t no) {
    const std::string t = trim(raw);
    if (!t.empty() && t[0] == '#') {
      directive(t.substr(1), no);
      return;
    }
    const std::string body = trim(raw.substr(0, raw.find('#')));
    if (body.empty()) {
      if (in_block_) throw ParseError(no, "block ended after " + std::to_string(block_.rows.size()) + " of " +
                                              std::to_string(rows_wanted()) + " rows");
      finished_ = false;
      return;
    }
    if (finished_)
      throw ParseError(no, "unexpected row; the block declares " + std::to_string(block_.count) + " vertices");
    if (!in_block_) {
      header(body, no);
      return;
    }
    row(body, no);
  }

  void finish(std::size_t last_line) {
    if (in_block_)
      throw ParseError(last_line, "input ended after " + std::to_string(block_.rows.size()) + " of " +
                                      std::to_string(rows_wanted()) + " rows");
  }

  std::vector<PolytopeRecord> records;

 private:
  long rows_wanted() const { return options_.transpose ? block_.dim : block_.count; }
  long row_length() const { return options_.transpose ? block_.count : block_.dim; }

  void directive(const std::string& text, std::size_t no) {
    const std::string t = trim(text);
    auto value = [&](const std::string& key) -> std::optional<std::string> {
      if (t.rfind(key, 0) != 0) return std::nullopt;
      return trim(t.substr(key.size()));
    };
    PolytopeRecord& target = in_block_ ? block_.record : pending_;
    if (auto id = value("id:")) {
      if (id->empty()) throw ParseError(no, "empty id");
      target.id = *id;
    } else if (auto tags = value("tags:")) {
      target.tags = tokens(*tags);
    }
  }

  void header(const std::string& body, std::size_t no) {
    const auto tok = tokens(body);
    if (tok.size() != 2) throw ParseError(no, "expected header 'dim nverts'");
    block_ = Block{};
    block_.record = std::move(pending_);
    pending_ = PolytopeRecord{};
    block_.header_line = no;
    block_.dim = parse_count(tok[0], no, "dimension");
    block_.count = parse_count(tok[1], no, "vertex count");
    if (block_.count < block_.dim + 1)
      throw ParseError(no, std::to_string(block_.count) + " points cannot span dimension " +
                               std::to_string(block_.dim));
    in_block_ = true;
  }

  void row(const std::string& body, std::size_t no) {
    const auto tok = tokens(body);
    if (static_cast<long>(tok.size()) != row_length())
      throw ParseError(no, "expected " + std::to_string(row_length()) + " entries, found " +
                               std::to_string(tok.size()));
    std::vector<Rational> r;
    for (const auto& t : tok) {
      try {
        r.push_back(parse_rational(t));
      } catch (const std::invalid_argument&) {
        throw ParseError(no, "bad rational '" + t + "'");
      }
    }
    block_.rows.push_back(std::move(r));
    if (static_cast<long>(block_.rows.size()) == rows_wanted()) complete();
  }

  void complete() {
    PolytopeRecord rec = std::move(block_.record);
    const std::size_t no = block_.header_line;
    rec.dim = block_.dim;
    for (long v = 0; v < block_.count; ++v) {
      RationalPoint p(block_.dim);
      for (long i = 0; i < block_.dim; ++i) p(i) = options_.transpose ? block_.rows[i][v] : block_.rows[v][i];
      rec.points.push_back(std::move(p));
    }
    if (rec.id.empty()) rec.id = options_.id_prefix + std::to_string(records.size() + 1);
    for (const auto& other : records)
      if (other.id == rec.id) throw ParseError(no, "duplicate id '" + rec.id + "'");
    try {
      (void)rec.polytope();
    } catch (const Error& e) {
      throw ParseError(no, std::string("invalid polytope: ") + e.what());
    }
    records.push_back(std::move(rec));
    in_block_ = false;
    finished_ = true;
  }

  ParseOptions options_;
  PolytopeRecord pending_;
  Block block_;
  bool in_block_ = false;
  bool finished_ = false;
};

nlohmann::ordered_json integer_json(const Integer& z) { return z.str(); }

std::string key_of(const NormalForm& nf) {
  std::string k;
  for (Eigen::Index j = 0; j < nf.vertices.cols(); ++j)
    for (Eigen::Index i = 0; i < nf.vertices.rows(); ++i) k += nf.vertices(i, j).str() + ",";
  return k;
}

}  // namespace

bool operator==(const PolytopeRecord& a, const PolytopeRecord& b) {
  if (a.id != b.id || a.dim != b.dim || a.tags != b.tags || a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    if (!vectors_equal(a.points[i], b.points[i])) return false;
  return true;
}

std::vector<PolytopeRecord> parse_polytopes(std::istream& in, const ParseOptions& options) {
  Parser parser(options);
  std::size_t no = 0;
  for (std::string raw; std::getline(in, raw);) parser.line(raw, ++no);
  parser.finish(no);
  return std::move(parser.records);
}

std::vector<PolytopeRecord> parse_polytopes(const std::string& text, const ParseOptions& options) {
  std::istringstream in(text);
  return parse_polytopes(in, options);
}

std::vector<PolytopeRecord> read_polytope_file(const std::string& path, const ParseOptions& options) {
  if (path == "-") return parse_polytopes(std::cin, options);
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_polytopes(in, options);
}

void write_polytopes(std::ostream& out, const std::vector<PolytopeRecord>& records) {
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (r > 0) out << '\n';
    out << "# id: " << rec.id << '\n';
    if (!rec.tags.empty()) {
      out << "# tags:";
      for (const auto& t : rec.tags) out << ' ' << t;
      out << '\n';
    }
    out << rec.dim << ' ' << rec.points.size() << '\n';
    for (const auto& p : rec.points) {
      for (Eigen::Index i = 0; i < p.size(); ++i) out << (i ? " " : "") << to_string(p(i));
      out << '\n';
    }
  }
}

std::string write_polytopes(const std::vector<PolytopeRecord>& records) {
  std::ostringstream out;
  write_polytopes(out, records);
  return out.str();
}

PolytopeRecord make_record(std::string id, const VPolytope& p, std::vector<std::string> tags) {
  return PolytopeRecord{std::move(id), p.dim(), p.vertices(), std::move(tags)};
}

std::vector<VPolytope> enumerate_fano_2d(long bound) {
  if (bound < 3) throw Error(ErrorKind::PreconditionFailed, "bound must be at least 3");
  struct P {
    long x, y;
  };
  auto cross = [](P a, P b) { return a.x * b.y - a.y * b.x; };
  auto sub = [](P a, P b) { return P{a.x - b.x, a.y - b.y}; };

  // Vertices of such a polygon are primitive: otherwise a lattice point of
  // the open segment from 0 would be interior.
  std::vector<P> pts;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y)
      if (std::gcd(x, y) == 1) pts.push_back({x, y});
  auto upper = [](P p) { return p.y > 0 || (p.y == 0 && p.x > 0); };
  std::sort(pts.begin(), pts.end(), [&](P a, P b) {
    if (upper(a) != upper(b)) return upper(a);
    return cross(a, b) > 0;
  });
  const std::size_t m = pts.size();

  // fan[i][j]: the triangle (0, p_i, p_j) turns left and has no lattice point
  // apart from 0 off the edge p_i p_j.
  std::vector<std::vector<char>> fan(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const P a = pts[i], b = pts[j];
      if (cross(a, b) <= 0) continue;
      bool ok = true;
      const long x0 = std::min({0L, a.x, b.x}), x1 = std::max({0L, a.x, b.x});
      const long y0 = std::min({0L, a.y, b.y}), y1 = std::max({0L, a.y, b.y});
      for (long x = x0; x <= x1 && ok; ++x)
        for (long y = y0; y <= y1 && ok; ++y) {
          const P p{x, y};
          if (x == 0 && y == 0) continue;
          const long e = cross(sub(b, a), sub(p, a));
          if (cross(a, p) >= 0 && cross(p, b) >= 0 && e >= 0 && e != 0) ok = false;
        }
      fan[i][j] = ok;
    }

  std::vector<std::pair<std::string, VPolytope>> found;
  std::vector<std::string> seen;
  std::vector<std::size_t> chain;
  auto record = [&] {
    std::vector<RationalPoint> verts;
    for (std::size_t k : chain) verts.push_back(point({Rational(pts[k].x), Rational(pts[k].y)}));
    VPolytope poly = hull(verts);
    const std::string key = key_of(normal_form(poly));
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
    seen.push_back(key);
    found.emplace_back(key, std::move(poly));
  };
  std::function<void()> extend = [&] {
    const std::size_t last = chain.back();
    if (chain.size() >= 3) {
      const std::size_t s = chain.front(), prev = chain[chain.size() - 2];
      if (fan[last][s] && cross(sub(pts[last], pts[prev]), sub(pts[s], pts[last])) > 0 &&
          cross(sub(pts[s], pts[last]), sub(pts[chain[1]], pts[s])) > 0)
        record();
    }
    for (std::size_t j = last + 1; j < m; ++j) {
      if (!fan[last][j]) continue;
      if (chain.size() >= 2 && cross(sub(pts[last], pts[chain[chain.size() - 2]]), sub(pts[j], pts[last])) <= 0)
        continue;
      chain.push_back(j);
      extend();
      chain.pop_back();
    }
  };
  for (std::size_t s = 0; s < m; ++s) {
    chain = {s};
    extend();
  }

  std::vector<std::size_t> order(found.size());
  std::vector<Rational> areas;
  for (std::size_t i = 0; i < found.size(); ++i) {
    order[i] = i;
    areas.push_back(volume(found[i].second));
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = found[a].second;
    const auto& pb = found[b].second;
    if (pa.num_vertices() != pb.num_vertices()) return pa.num_vertices() < pb.num_vertices();
    if (areas[a] != areas[b]) return areas[a] < areas[b];
    return found[a].first < found[b].first;
  });
  std::vector<VPolytope> out;
  for (std::size_t i : order) out.push_back(found[i].second);
  return out;
}

nlohmann::ordered_json to_json(const Rational& x) { return to_string(x); }

nlohmann::ordered_json to_json(const RationalPoint& x) {
  auto a = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) a.push_back(to_string(x(i)));
  return a;
}

nlohmann::ordered_json to_json(const Witness& w) {
  nlohmann::ordered_json j;
  if (const auto* u = std::get_if<UnimodularAffineMap>(&w)) {
    j["type"] = "unimodular-map";
    auto rows = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < u->matrix().rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (Eigen::Index k = 0; k < u->matrix().cols(); ++k) row.push_back(integer_json(u->matrix()(i, k)));
      rows.push_back(row);
    }
    j["matrix"] = rows;
    auto t = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < u->translation().size(); ++i) t.push_back(integer_json(u->translation()(i)));
    j["translation"] = t;
  } else if (const auto* f = std::get_if<RationalAffineMap>(&w)) {
    j["type"] = "affine-map";
    auto rows = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < f->matrix.rows(); ++i) rows.push_back(to_json(RationalPoint(f->matrix.row(i).transpose())));
    j["matrix"] = rows;
    j["translation"] = to_json(f->translation);
  } else if (const auto* h = std::get_if<HalfSpace>(&w)) {
    j["type"] = "halfspace";
    j["normal"] = to_json(h->normal);
    j["offset"] = to_json(h->offset);
  } else {
    j["type"] = "point";
    j["point"] = to_json(std::get<RationalPoint>(w));
  }
  return j;
}

nlohmann::ordered_json to_json(const CheckReport& report, const std::string& id) {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["check"] = report.check;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (const auto& [name, v] : report.values) {
    std::visit(
        [&, &key = name](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, RationalPoint>) {
            values[key] = to_json(x);
          } else if constexpr (std::is_same_v<T, std::vector<RationalPoint>>) {
            auto a = nlohmann::ordered_json::array();
            for (const auto& p : x) a.push_back(to_json(p));
            values[key] = a;
          } else {
            values[key] = x;
          }
        },
        v);
  }
  j["values"] = values;
  j["bound"] = report.bound ? to_json(*report.bound) : nlohmann::ordered_json(nullptr);
  j["status"] = to_string(report.status);
  j["witness"] = report.witness ? to_json(*report.witness) : nlohmann::ordered_json(nullptr);
  if (!report.reason.empty()) j["reason"] = report.reason;
  if (!report.attached.empty()) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& sub : report.attached) a.push_back(to_json(sub, id));
    j["attached"] = a;
  }
  return j;
}

std::string emit_report(const std::vector<LabeledReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += to_json(r.report, r.id).dump() + "\n";
  return out;
}

std::string emit_report(const std::vector<std::pair<std::string, ToricFanoReport>>& reports) {
  std::vector<LabeledReport> labeled;
  for (const auto& [id, t] : reports) labeled.push_back({id, to_check_report(t)});
  return emit_report(labeled);
}

const char* to_string(ScanCheck check) {
  switch (check) {
    case ScanCheck::Ehrhart: return "ehrhart";
    case ScanCheck::MilmanPajor: return "milman-pajor";
    case ScanCheck::Minkowski: return "minkowski";
    case ScanCheck::RootSymmetry: return "root-symmetry";
    case ScanCheck::Toric: return "toric";
  }
  return "unknown";
}

std::vector<ScanCheck> parse_scan_checks(const std::string& list) {
  static const ScanCheck all[] = {ScanCheck::Ehrhart, ScanCheck::MilmanPajor, ScanCheck::Minkowski,
                                  ScanCheck::RootSymmetry, ScanCheck::Toric};
  std::vector<ScanCheck> out;
  std::istringstream in(list);
  for (std::string name; std::getline(in, name, ',');) {
    name = trim(name);
    if (name.empty()) continue;
    if (name == "all") {
      out.assign(std::begin(all), std::end(all));
      continue;
    }
    const auto it = std::find_if(std::begin(all), std::end(all), [&](ScanCheck c) { return name == to_string(c); });
    if (it == std::end(all)) throw std::invalid_argument("unknown check '" + name + "'");
    if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
  }
  return out;
}

nlohmann::ordered_json ScanSummary::to_json() const {
  nlohmann::ordered_json j;
  j["records"] = records;
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  for (const auto& [check, by_status] : counts)
    for (const auto& [status, n] : by_status) c[check][status] = n;
  j["counts"] = c;
  auto entry = [](const std::optional<ScanEntry>& e) {
    if (!e) return nlohmann::ordered_json(nullptr);
    return nlohmann::ordered_json{{"id", e->id}, {"value", ehrhart::to_json(e->value)}};
  };
  j["max_volume"] = entry(max_volume);
  j["max_degree"] = entry(max_degree);
  j["min_r"] = entry(min_r);
  auto v = nlohmann::ordered_json::array();
  for (const auto& r : violations) v.push_back({{"id", r.id}, {"check", r.report.check}, {"reason", r.report.reason}});
  j["violations"] = v;
  auto e = nlohmann::ordered_json::array();
  for (const auto& [id, msg] : errors) e.push_back({{"id", id}, {"error", msg}});
  j["errors"] = e;
  return j;
}

ScanSummary scan(const std::vector<PolytopeRecord>& corpus, const std::vector<ScanCheck>& checks) {
  ScanSummary s;
  s.records = corpus.size();
  for (ScanCheck c : checks) s.counts[to_string(c)];
  auto improve = [](std::optional<ScanEntry>& slot, const std::string& id, const Rational& v, bool larger) {
    if (!slot || (larger ? v > slot->value : v < slot->value)) slot = ScanEntry{id, v};
  };

  for (const auto& rec : corpus) {
    std::optional<VPolytope> p;
    try {
      p = rec.polytope();
      improve(s.max_volume, rec.id, volume(*p), true);
    } catch (const std::exception& e) {
      for (ScanCheck c : checks) ++s.counts[to_string(c)]["error"];
      s.errors.emplace_back(rec.id, e.what());
      continue;
    }
    for (ScanCheck c : checks) {
      try {
        CheckReport r;
        switch (c) {
          case ScanCheck::Ehrhart: r = ehrhart_check(*p); break;
          case ScanCheck::MilmanPajor: r = milman_pajor_check(*p); break;
          case ScanCheck::Minkowski: r = minkowski_combined_check(*p); break;
          case ScanCheck::RootSymmetry: r = root_symmetry_check(*p); break;
          case ScanCheck::Toric:
            r = is_fano(*p) ? to_check_report(toric_report(*p)) : not_applicable("toric", "not a Fano polytope");
            break;
        }
        r.input = rec.id;
        if (c == ScanCheck::Ehrhart && r.find("R")) improve(s.min_r, rec.id, r.rational("R"), false);
        if (c == ScanCheck::Toric && r.find("degree")) improve(s.max_degree, rec.id, r.rational("degree"), true);
        ++s.counts[to_string(c)][to_string(r.status)];
        if (r.status == Status::Violation) s.violations.push_back({rec.id, r});
        s.reports.push_back({rec.id, std::move(r)});
      } catch (const std::exception& e) {
        ++s.counts[to_string(c)]["error"];
        s.errors.emplace_back(rec.id, std::string(to_string(c)) + ": " + e.what());
      }
    }
  }
  std::stable_sort(s.reports.begin(), s.reports.end(),
                   [](const LabeledReport& a, const LabeledReport& b) { return a.id < b.id; });
  return s;
}

}  // namespace ehrhart

#pragma once

#include "ehrhart/polytope.hpp"
#include "ehrhart/report.hpp"
#include "ehrhart/toric.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace ehrhart {

/// One polytope of a corpus file. Rows of `points` are vertices (redundant
/// points are tolerated; the hull is taken).
struct PolytopeRecord {
  std::string id;
  Eigen::Index dim = 0;
  std::vector<RationalPoint> points;
  std::vector<std::string> tags;

  VPolytope polytope() const { return hull(points); }

  friend bool operator==(const PolytopeRecord& a, const PolytopeRecord& b);
};

struct ParseOptions {
  /// Rows of a block are coordinates and columns are vertices.
  bool transpose = false;
  /// Records without an "# id:" line get `<prefix><block number>`.
  std::string id_prefix = "poly-";
};

/// Block format:
///
///   # id: p2
///   # tags: reflexive smooth
///   2 3
///   1 0
///   0 1
///   -1 -1
///
/// A header "dim nverts" followed by nverts rows of dim rationals ("p/q" or
/// integers); blocks are separated by blank lines and `#` starts a comment.
/// Throws ParseError with the offending 1-based line.
std::vector<PolytopeRecord> parse_polytopes(std::istream& in, const ParseOptions& options = {});
std::vector<PolytopeRecord> parse_polytopes(const std::string& text, const ParseOptions& options = {});
/// "-" reads standard input.
std::vector<PolytopeRecord> read_polytope_file(const std::string& path, const ParseOptions& options = {});

/// Inverse of parse_polytopes (row convention, ids and tags as comments).
void write_polytopes(std::ostream& out, const std::vector<PolytopeRecord>& records);
std::string write_polytopes(const std::vector<PolytopeRecord>& records);

PolytopeRecord make_record(std::string id, const VPolytope& p, std::vector<std::string> tags = {});

/// Lattice polygons with vertices in [-bound, bound]^2 whose only interior
/// lattice point is the origin, one representative per unimodular class,
/// ordered by (vertex count, area, normal form). Requires bound >= 3.
std::vector<VPolytope> enumerate_fano_2d(long bound);

// Serialisation. Rationals are exact strings ("p/q", or "p" when integral).
nlohmann::ordered_json to_json(const Rational& x);
nlohmann::ordered_json to_json(const RationalPoint& x);
nlohmann::ordered_json to_json(const Witness& w);
nlohmann::ordered_json to_json(const CheckReport& report, const std::string& id);

struct LabeledReport {
  std::string id;
  CheckReport report;
};

/// Newline-delimited objects with fields id, check, values, bound, status,
/// witness (then reason and attached when present). Empty input gives "".
std::string emit_report(const std::vector<LabeledReport>& reports);
std::string emit_report(const std::vector<std::pair<std::string, ToricFanoReport>>& reports);

enum class ScanCheck { Ehrhart, MilmanPajor, Minkowski, RootSymmetry, Toric };

const char* to_string(ScanCheck check);
/// Comma separated names; throws std::invalid_argument on unknown names.
std::vector<ScanCheck> parse_scan_checks(const std::string& list);

struct ScanEntry {
  std::string id;
  Rational value;
};

struct ScanSummary {
  std::size_t records = 0;
  /// check name -> status name ("error" for records that threw) -> count.
  std::map<std::string, std::map<std::string, std::size_t>> counts;
  std::optional<ScanEntry> max_volume;
  std::optional<ScanEntry> max_degree;
  std::optional<ScanEntry> min_r;
  std::vector<LabeledReport> violations;
  std::vector<std::pair<std::string, std::string>> errors;  // id, message
  /// Every report, sorted by id (check order within an id).
  std::vector<LabeledReport> reports;

  bool ok() const { return violations.empty() && errors.empty(); }
  nlohmann::ordered_json to_json() const;
};

/// Runs the selected checks on every record; per-record errors are
/// collected, not thrown.
ScanSummary scan(const std::vector<PolytopeRecord>& corpus, const std::vector<ScanCheck>& checks);

}  // namespace ehrhart

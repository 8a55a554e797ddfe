// Command-line front end. Inputs are polytope block files ("-" for stdin);
// results are written as newline-delimited JSON or as polytope blocks.
//
// Exit codes: 0 ok, 1 a proved theorem reported a violation, 2 bad input or
// usage.

#include "ehrhart/checks.hpp"
#include "ehrhart/corpus.hpp"
#include "ehrhart/lattice.hpp"
#include "ehrhart/random.hpp"
#include "ehrhart/toric.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace ehrhart;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Input {
  std::string path;
  bool transpose = false;

  std::vector<PolytopeRecord> read() const {
    ParseOptions o;
    o.transpose = transpose;
    return read_polytope_file(path, o);
  }
};

void add_input(CLI::App* cmd, Input& in, const std::string& name = "file") {
  cmd->add_option(name, in.path, "polytope file, '-' for stdin")->required();
  cmd->add_flag("--transpose", in.transpose, "rows are coordinates, columns are vertices");
}

void print(const json& j) { std::cout << j.dump() << '\n'; }

int exit_for(const std::vector<LabeledReport>& reports) {
  for (const auto& r : reports)
    if (r.report.status == Status::Violation) return kViolation;
  return kOk;
}

json lattice_json(const std::vector<LatticePoint>& pts) {
  auto a = json::array();
  for (const auto& p : pts) a.push_back(to_json(to_rational(p)));
  return a;
}

json chain_json(const ProofChain& c) {
  json j;
  j["vertex"] = to_json(c.phi.vertex);
  j["phi"] = to_json(Witness(c.phi.map));
  j["det"] = to_json(c.phi.det);
  auto labels = json::array();
  for (const auto& l : c.phi.labels) labels.push_back(to_json(to_rational(l)));
  j["labels"] = labels;
  auto values = json::array();
  for (const auto& v : c.values()) values.push_back(to_json(v));
  j["values"] = values;
  auto steps = json::array();
  for (const auto& s : c.steps)
    steps.push_back({{"relation", s.relation}, {"lhs", to_json(s.lhs)}, {"rhs", to_json(s.rhs)},
                     {"status", to_string(s.status)}});
  j["steps"] = steps;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks around Ehrhart's volume conjecture for rational polytopes"};
  app.require_subcommand(1);

  Input in;
  Input in_b;
  bool strict = false;
  std::string halfspace;
  std::string check_name;
  std::string q_path, k_path;
  long dim = 2, bound = 3, count = 10;
  bool reflexive_only = false;
  bool lattice_free = false;
  std::string checks = "ehrhart,milman-pajor,minkowski,root-symmetry,toric";
  std::string suite;

  auto* dual = app.add_subcommand("dual", "polar dual of each polytope");
  add_input(dual, in);
  auto* vol = app.add_subcommand("volume", "exact volume");
  add_input(vol, in);
  auto* bary = app.add_subcommand("barycenter", "exact barycenter");
  add_input(bary, in);
  auto* lpts = app.add_subcommand("lattice-points", "integer points");
  add_input(lpts, in);
  lpts->add_flag("--strict", strict, "interior points only");
  auto* rinv = app.add_subcommand("r-invariant", "R(K), the barycenter and the exit point x_K");
  add_input(rinv, in);
  auto* shrink = app.add_subcommand("shrink", "K' = R(K) (K - b_K)");
  add_input(shrink, in);
  auto* nf = app.add_subcommand("normal-form", "unimodular normal form (dimension <= 4)");
  add_input(nf, in);
  auto* equiv = app.add_subcommand("equiv", "unimodular equivalence of the first polytopes of A and B");
  equiv->add_option("a", in.path, "file A")->required();
  equiv->add_option("b", in_b.path, "file B")->required();
  auto* check = app.add_subcommand("check", "run a theorem check on each polytope");
  check->add_option("name", check_name, "ehrhart | milman-pajor | minkowski | grunbaum")
      ->required()
      ->check(CLI::IsMember({"ehrhart", "milman-pajor", "minkowski", "grunbaum"}));
  add_input(check, in);
  check->add_option("--halfspace", halfspace, "\"a1,...,an;c\" for <a,x> <= c (grunbaum)");
  auto* grun = app.add_subcommand("grunbaum", "Grunbaum's inequality for one half-space");
  add_input(grun, in);
  grun->add_option("--halfspace", halfspace, "\"a1,...,an;c\" for <a,x> <= c")->required();
  auto* trace = app.add_subcommand("proof-trace", "evaluate the volume chain for K inside Q*");
  trace->add_option("--q", q_path, "lattice polytope Q")->required();
  trace->add_option("--k", k_path, "body K with barycenter 0 inside Q*")->required();
  auto* cert = app.add_subcommand("certify-equality", "map onto (n+1) Delta_n when the bound is attained");
  add_input(cert, in);
  auto* toric = app.add_subcommand("toric-report", "degree, KE criterion and degree bounds of Fano polytopes");
  add_input(toric, in);
  auto* enumf = app.add_subcommand("enum-fano", "lattice polygons with the origin as only interior point");
  enumf->add_option("--dim", dim, "dimension (only 2)")->check(CLI::IsMember({2L}));
  enumf->add_option("--bound", bound, "vertex box [-B, B]^2")->check(CLI::Range(3L, 50L));
  enumf->add_flag("--reflexive", reflexive_only, "keep reflexive polygons only");
  auto* scan_cmd = app.add_subcommand("scan", "run checks over a corpus and summarise");
  add_input(scan_cmd, in);
  scan_cmd->add_option("--checks", checks, "comma separated: ehrhart, milman-pajor, minkowski, root-symmetry, toric, all");
  auto* rnd = app.add_subcommand("random", "seeded random polytopes (EHRHART_SEED)");
  rnd->add_option("--dim", dim, "dimension")->check(CLI::Range(1L, 6L));
  rnd->add_option("--count", count, "number of polytopes")->check(CLI::Range(0L, 100000L));
  rnd->add_flag("--lattice-free", lattice_free, "only bodies whose one interior lattice point is 0");
  auto* prop = app.add_subcommand("property", "seeded property suite (EHRHART_SEED)");
  prop->add_option("suite", suite, "grunbaum | milman-pajor | shrink")
      ->required()
      ->check(CLI::IsMember({"grunbaum", "milman-pajor", "shrink"}));
  prop->add_option("--dim", dim, "dimension")->check(CLI::Range(1L, 4L));
  prop->add_option("--count", count, "number of polytopes")->check(CLI::Range(0L, 100000L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (dual->parsed()) {
      std::vector<PolytopeRecord> out;
      for (const auto& r : in.read()) out.push_back(make_record(r.id, dual_polytope(r.polytope()), r.tags));
      write_polytopes(std::cout, out);
    } else if (vol->parsed()) {
      for (const auto& r : in.read()) print({{"id", r.id}, {"volume", to_json(volume(r.polytope()))}});
    } else if (bary->parsed()) {
      for (const auto& r : in.read()) print({{"id", r.id}, {"barycenter", to_json(barycenter(r.polytope()))}});
    } else if (lpts->parsed()) {
      for (const auto& r : in.read()) {
        const auto pts = lattice_points(r.polytope(), strict);
        print({{"id", r.id}, {"strict", strict}, {"count", pts.size()}, {"points", lattice_json(pts)}});
      }
    } else if (rinv->parsed()) {
      for (const auto& r : in.read()) {
        const auto res = r_invariant(r.polytope());
        json j{{"id", r.id}, {"barycenter", to_json(res.barycenter)}};
        j["boundary_point"] = res.boundary_point ? to_json(*res.boundary_point) : json(nullptr);
        j["R"] = to_json(res.value);
        print(j);
      }
    } else if (shrink->parsed()) {
      std::vector<PolytopeRecord> out;
      for (const auto& r : in.read()) out.push_back(make_record(r.id, shrink_to_barycenter(r.polytope()), r.tags));
      write_polytopes(std::cout, out);
    } else if (nf->parsed()) {
      for (const auto& r : in.read()) {
        const auto form = normal_form(r.polytope());
        auto cols = json::array();
        for (Eigen::Index j = 0; j < form.vertices.cols(); ++j)
          cols.push_back(to_json(to_rational(LatticePoint(form.vertices.col(j)))));
        print({{"id", r.id}, {"vertices", cols}, {"transform", to_json(Witness(form.transform))}});
      }
    } else if (equiv->parsed()) {
      const auto a = in.read();
      const auto b = in_b.read();
      if (a.empty() || b.empty()) throw ParseError(0, "each file needs at least one polytope");
      const auto w = are_equivalent(a[0].polytope(), b[0].polytope());
      print({{"a", a[0].id}, {"b", b[0].id}, {"equivalent", w.has_value()},
             {"witness", w ? to_json(Witness(*w)) : json(nullptr)}});
    } else if (check->parsed() || grun->parsed()) {
      const std::string name = grun->parsed() ? "grunbaum" : check_name;
      std::vector<LabeledReport> reports;
      std::optional<HalfSpace> h;
      if (name == "grunbaum") {
        if (halfspace.empty()) throw CLI::RequiredError("--halfspace");
        try {
          h = parse_halfspace(halfspace);
        } catch (const std::exception& e) {
          throw ParseError(0, std::string("bad --halfspace: ") + e.what());
        }
      }
      for (const auto& r : in.read()) {
        const VPolytope p = r.polytope();
        if (name == "ehrhart") reports.push_back({r.id, ehrhart_check(p)});
        else if (name == "milman-pajor") reports.push_back({r.id, milman_pajor_check(p)});
        else if (name == "minkowski") reports.push_back({r.id, minkowski_combined_check(p)});
        else {
          if (h->dim() != p.dim()) throw ParseError(0, "half-space dimension does not match " + r.id);
          reports.push_back({r.id, grunbaum_check(p, *h)});
        }
      }
      std::cout << emit_report(reports);
      return exit_for(reports);
    } else if (trace->parsed()) {
      const auto qs = read_polytope_file(q_path);
      const auto ks = read_polytope_file(k_path);
      if (qs.empty() || ks.empty()) throw ParseError(0, "each file needs at least one polytope");
      const auto t = proof_trace(ks[0].polytope(), qs[0].polytope());
      auto chains = json::array();
      for (const auto& c : t.chains) chains.push_back(chain_json(c));
      print({{"k", ks[0].id}, {"q", qs[0].id}, {"volume", to_json(t.volume)}, {"bound", to_json(t.bound)},
             {"status", to_string(t.status)}, {"chains", chains}});
      return t.status == Status::Violation ? kViolation : kOk;
    } else if (cert->parsed()) {
      int code = kOk;
      for (const auto& r : in.read()) {
        try {
          const auto w = certify_equality(r.polytope());
          print({{"id", r.id}, {"certified", w.has_value()}, {"witness", w ? to_json(Witness(*w)) : json(nullptr)}});
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::CertificationContradiction) throw;
          print({{"id", r.id}, {"certified", false}, {"error", e.what()}});
          code = kViolation;
        }
      }
      return code;
    } else if (toric->parsed()) {
      std::vector<std::pair<std::string, ToricFanoReport>> reports;
      for (const auto& r : in.read()) reports.emplace_back(r.id, toric_report(r.polytope()));
      std::cout << emit_report(reports);
      for (const auto& [id, t] : reports)
        if (t.status() == Status::Violation) return kViolation;
    } else if (enumf->parsed()) {
      std::vector<PolytopeRecord> out;
      for (const auto& p : enumerate_fano_2d(bound)) {
        const bool refl = is_reflexive(p);
        if (reflexive_only && !refl) continue;
        std::vector<std::string> tags;
        if (refl) tags.push_back("reflexive");
        char id[32];
        std::snprintf(id, sizeof id, "fano2-%02zu", out.size() + 1);
        out.push_back(make_record(id, p, tags));
      }
      write_polytopes(std::cout, out);
    } else if (scan_cmd->parsed()) {
      std::vector<ScanCheck> selected;
      try {
        selected = parse_scan_checks(checks);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
      }
      const auto summary = scan(in.read(), selected);
      std::cout << emit_report(summary.reports);
      std::cerr << summary.to_json().dump(2) << '\n';
      return summary.ok() ? kOk : kViolation;
    } else if (rnd->parsed()) {
      RandomPolytopes rng(seed_from_env(1));
      RandomPolytopeOptions o;
      o.dim = dim;
      o.min_points = static_cast<int>(dim) + 1;
      o.max_points = static_cast<int>(dim) + 6;
      std::vector<PolytopeRecord> out;
      for (long i = 0; i < count; ++i) {
        VPolytope p = rng.polytope(o);
        if (lattice_free) {
          RandomPolytopeOptions lf = o;
          lf.half_width = Rational(3, 2);
          lf.max_denominator = 16;
          do p = rng.polytope(lf);
          while (!origin_is_only_interior_lattice_point(p));
        }
        out.push_back(make_record("random-" + std::to_string(i + 1), p));
      }
      write_polytopes(std::cout, out);
    } else if (prop->parsed()) {
      RandomPolytopes rng(seed_from_env(1));
      RandomPolytopeOptions o;
      o.dim = dim;
      o.min_points = static_cast<int>(dim) + 1;
      o.max_points = static_cast<int>(dim) + 5;
      std::size_t runs = 0, equalities = 0, violations = 0;
      for (long i = 0; i < count; ++i) {
        VPolytope k = rng.polytope(o);
        std::vector<CheckReport> reps;
        if (suite == "grunbaum") {
          for (int j = 0; j < 5; ++j) reps.push_back(grunbaum_check(k, rng.halfspace_through(barycenter(k))));
        } else if (suite == "milman-pajor") {
          reps.push_back(milman_pajor_check(translate(k, -barycenter(k))));
        } else {
          RandomPolytopeOptions lf = o;
          lf.half_width = Rational(3, 2);
          lf.max_denominator = 16;
          do k = rng.polytope(lf);
          while (!origin_is_only_interior_lattice_point(k));
          const auto r = ehrhart_check(k);
          const auto c = ehrhart_check(shrink_to_barycenter(k));
          CheckReport agree = r;
          if (std::get<std::string>(*r.find("generalized_status")) !=
              std::get<std::string>(*c.find("classical_status")))
            agree.status = Status::Violation;
          reps.push_back(agree);
        }
        for (const auto& r : reps) {
          ++runs;
          equalities += r.status == Status::Equality;
          violations += r.status == Status::Violation;
        }
      }
      print({{"suite", suite}, {"seed", seed_from_env(1)}, {"runs", runs}, {"equalities", equalities},
             {"violations", violations}});
      return violations ? kViolation : kOk;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

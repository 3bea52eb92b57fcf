#include "flowalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "flowalg/circulation.hpp"
#include "flowalg/corpus.hpp"
#include "flowalg/flow_lattice.hpp"
#include "flowalg/graph_file.hpp"
#include "flowalg/kirchhoff.hpp"
#include "flowalg/tutte.hpp"

namespace flowalg::cli {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json to_json(const Rational& v) { return v.get_num().get_str() + "/" + v.get_den().get_str(); }

Json to_json(const UniPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

Json to_json(const BiPoly& p) {
  Json rows = Json::array();
  for (const auto& row : p.coefficients()) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(to_json(c));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const QSeries& s) {
  Json a = Json::array();
  for (const auto& [e, c] : s.terms())
    a.push_back(Json::array({e.get_den() == 1 ? to_json(Integer(e.get_num())) : to_json(e), to_json(c)}));
  return a;
}

Json sequence(const std::vector<std::size_t>& d) {
  std::vector<Integer> c;
  for (auto x : d) c.emplace_back(static_cast<unsigned long>(x));
  return to_json(UniPoly(std::move(c)));
}

class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); doc_["inputs"] = Json::array(); }

  Graph load(const std::string& path) {
    const std::string bytes = read_file(path);
    Graph g;
    try {
      g = parse_graph_text(bytes);
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
    doc_["inputs"].push_back(Json{{"path", path},
                                  {"digest", "fnv1a64:" + fnv1a_hex(bytes)},
                                  {"vertices", g.vertex_count()},
                                  {"edges", g.edge_count()}});
    return g;
  }

  Json& results() { return doc_["results"]; }

  void check(const std::string& name, bool passed, const std::string& detail = {}, bool exploratory = false) {
    Json c{{"name", name}, {"status", exploratory ? "exploratory" : passed ? "pass" : "fail"}};
    if (exploratory) c["holds"] = passed;
    if (!detail.empty()) c["detail"] = detail;
    checks_.push_back(std::move(c));
    if (!passed && !exploratory) failed_ = true;
  }

  bool failed() const { return failed_; }

  std::string finish(double seconds) {
    if (!doc_.contains("results")) doc_["results"] = Json::object();
    doc_["checks"] = checks_;
    doc_["timings"] = Json{{"total_ms", static_cast<long>(seconds * 1000.0 + 0.5)}};
    return doc_.dump(2) + "\n";
  }

 private:
  Json doc_;
  Json checks_ = Json::array();
  bool failed_ = false;
};

void add_verify_checks(Report& r, const Graph& g, bool all) {
  const CheckReport inequalities = verify_inequalities(g);
  for (const Check& c : inequalities.checks) r.check(c.name, c.passed, c.detail, c.exploratory);
  r.results()["d"] = sequence(rank_sequence(g));
  if (!all) return;

  const UniPoly by_tutte = poincare(g);
  const auto d = rank_sequence(g);
  std::vector<Integer> dc;
  for (auto x : d) dc.emplace_back(static_cast<unsigned long>(x));
  std::vector<Integer> mc;
  for (auto x : monomial_dimensions(g)) mc.emplace_back(static_cast<unsigned long>(x));
  r.check("three_oracles", by_tutte == UniPoly(dc) && UniPoly(mc) == UniPoly(dc));

  bool torsion_free = true;
  for (std::size_t j = 0; j <= g.edge_count(); ++j) torsion_free = torsion_free && torsion_check(g, j);
  r.check("torsion_free", torsion_free);

  const MembershipReport membership = relation_membership_check(g);
  r.check("relation_membership", membership.passed(),
          std::to_string(membership.generators) + " flows, " + std::to_string(membership.vanishing_checks) +
              " vanishing checks" + (membership.full_family ? "" : ", fundamental cycles and pairs only"));

  bool lattice_ok = true;
  try {
    lattice(g);
  } catch (const std::logic_error&) {
    lattice_ok = false;
  }
  r.check("lattice_determinant", lattice_ok);

  bool norms = true, potentials = true;
  for (const Edge& e : g.edges()) {
    if (is_cut_edge(g, e.id)) continue;
    norms = norms && norm_identity_check(g, e.id).holds;
    for (bool reversed : {false, true})
      potentials = potentials && potential_identities_hold(g, characteristic_flow(g, e.id, reversed));
  }
  r.check("norm_identity", norms);
  r.check("potential_identities", potentials);

  const Integer bound = 12;
  const QSeries theta = theta_enumerate(g, bound);
  r.check("theta_routes", theta_product(g, bound) == theta, "max norm 12");

  std::mt19937 rng(7);
  bool invariant = true;
  const std::size_t m = g.edge_count();
  for (int trial = 0; trial < 10 && invariant; ++trial) {
    const Graph f = g.with_flipped(EdgeSubset(m == 0 ? 0 : rng() & ((std::uint64_t{1} << m) - 1)));
    invariant = rank_sequence(f) == d && lattice(f).determinant == lattice(g).determinant &&
                theta_enumerate(f, bound) == theta;
  }
  r.check("orientation_invariance", invariant, "10 random flips");
}

struct Flags {
  std::vector<std::string> files;
  std::string output;
  std::string oracle = "all";
  std::string method = "both";
  long max_norm = 12;
  long norm = 0;
  unsigned edge = 0;
  bool reversed = false;
  std::string degrees;
  bool all = false;
  std::size_t max_edges = 7;
  std::size_t flip_trials = 50;
  std::uint32_t seed = 20240101;
};

void execute(const std::string& command, const Flags& f, Report& r) {
  auto& res = r.results();
  if (command == "corpus") {
    corpus::Options o;
    o.max_edges = f.max_edges;
    o.max_norm = f.max_norm;
    o.flip_trials = f.flip_trials;
    o.seed = f.seed;
    const corpus::Report rep = corpus::run(o);
    res["max_edges"] = f.max_edges;
    res["graphs"] = rep.graphs;
    res["tallies"] = Json::array();
    for (const auto& t : rep.tallies) {
      res["tallies"].push_back(Json{{"name", t.name}, {"cases", t.cases}, {"failures", t.failures}, {"examples", t.examples}});
      r.check(t.name, t.failures == 0, std::to_string(t.cases) + " cases", t.exploratory);
    }
    return;
  }
  if (command == "compare") {
    const Graph a = r.load(f.files.at(0)), b = r.load(f.files.at(1));
    const auto rep = codichromatic_compare(a, b, f.max_norm);
    res["tutte_equal"] = rep.tutte_equal;
    res["theta_first"] = to_json(rep.theta_first);
    res["theta_second"] = to_json(rep.theta_second);
    res["first_difference"] = rep.first_difference ? to_json(*rep.first_difference) : Json(nullptr);
    return;
  }

  const Graph g = r.load(f.files.at(0));
  if (command == "tutte") {
    const BiPoly t = tutte(g);
    res["tutte"] = to_json(t);
    res["complexity"] = to_json(t.evaluate(1, 1));
    if (g.edge_count() <= 12) r.check("corank_nullity_agrees", tutte_corank_nullity(g) == t);
  } else if (command == "poincare") {
    const BiPoly t = tutte(g);
    const UniPoly d = poincare_from_tutte(t, graph_rank(g));
    res["poincare"] = to_json(d);
    r.check("value_at_one_equals_T12", d.evaluate(1) == t.evaluate(1, 2));
  } else if (command == "ranks") {
    std::vector<Json> seen;
    if (f.oracle == "tutte" || f.oracle == "all") seen.push_back(res["tutte"] = to_json(poincare(g)));
    if (f.oracle == "relations" || f.oracle == "all") seen.push_back(res["relations"] = sequence(rank_sequence(g)));
    if (f.oracle == "monomials" || f.oracle == "all")
      seen.push_back(res["monomials"] = sequence(monomial_dimensions(g)));
    if (seen.size() > 1)
      r.check("oracles_agree", std::all_of(seen.begin(), seen.end(), [&](const Json& s) { return s == seen[0]; }));
  } else if (command == "lattice") {
    const FlowLattice lat = lattice(g);
    Json edges = Json::array(), chords = Json::array(), basis = Json::array(), gram = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(e.id);
    for (std::size_t c : lat.chords) chords.push_back(g.edges()[c].id);
    for (const auto& b : lat.basis) basis.push_back(b);
    for (std::size_t i = 0; i < lat.gram.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < lat.gram.cols(); ++k) row.push_back(to_json(lat.gram(i, k)));
      gram.push_back(std::move(row));
    }
    res["edge_order"] = edges;
    res["chords"] = chords;
    res["basis"] = basis;
    res["gram"] = gram;
    res["determinant"] = to_json(lat.determinant);
    r.check("determinant_equals_forest_count", lat.determinant == count_maximal_forests(g));
  } else if (command == "char-flow") {
    const CharacteristicFlow chi = characteristic_flow(g, f.edge, f.reversed);
    Json values = Json::object(), potential = Json::object();
    for (std::size_t i = 0; i < g.edge_count(); ++i) values[std::to_string(g.edges()[i].id)] = to_json(chi.values[i]);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) potential[std::to_string(g.vertices()[v])] = to_json(chi.potential[v]);
    res["edge"] = f.edge;
    res["reversed"] = f.reversed;
    res["values"] = values;
    res["potential"] = potential;
    res["norm"] = to_json(chi.norm);
    res["index"] = to_json(denominator_lcm(chi.values));
    const NormIdentity id = norm_identity_check(g, f.edge);
    r.check("potential_identities", potential_identities_hold(g, chi));
    r.check("norm_equals_complexity_ratio", id.holds,
            id.complexity.get_str() + "/" + id.complexity_deleted.get_str());
  } else if (command == "theta") {
    const Integer bound(f.max_norm);
    std::optional<QSeries> product, enumerated;
    if (f.method != "enumerate") res["product"] = to_json(*(product = theta_product(g, bound)));
    if (f.method != "product") res["enumerate"] = to_json(*(enumerated = theta_enumerate(g, bound)));
    if (product && enumerated) r.check("methods_agree", *product == *enumerated);
  } else if (command == "flows-of-norm") {
    res["norm"] = f.norm;
    res["count"] = to_json(flows_of_norm(g, f.norm));
  } else if (command == "torsion") {
    const auto comma = f.degrees.find(',');
    std::size_t i = 0, j = 0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument("");
      i = std::stoul(f.degrees.substr(0, comma));
      j = std::stoul(f.degrees.substr(comma + 1));
    } catch (const std::exception&) {
      throw InputError("--degrees expects two integers 'i,j'");
    }
    const GroupStructure s = product_torsion(g, i, j);
    res["degrees"] = Json::array({i, j});
    Json torsion = Json::array();
    for (const auto& t : s.torsion) torsion.push_back(to_json(t));
    res["torsion"] = torsion;
    res["free_rank"] = s.free_rank;
  } else if (command == "verify") {
    add_verify_checks(r, g, f.all);
  }
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Kirchhoff groups, flow lattices and Tutte invariants of multigraphs", "flowalg"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("-o,--output", f.output, "Write the report to a file instead of stdout");

  auto graph_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("graph", f.files, "Graph file")->required()->expected(1);
    return c;
  };
  graph_cmd("tutte", "Tutte polynomial, rows indexed by the power of x");
  graph_cmd("poincare", "Poincare polynomial of the Kirchhoff group");
  graph_cmd("ranks", "Graded ranks d_j")
      ->add_option("--oracle", f.oracle, "tutte, relations, monomials or all")
      ->check(CLI::IsMember({"tutte", "relations", "monomials", "all"}));
  graph_cmd("lattice", "Basic-flow basis, Gram matrix and determinant");
  auto* cf = graph_cmd("char-flow", "Characteristic flow of an edge");
  cf->add_option("--edge", f.edge, "Edge id")->required();
  cf->add_flag("--reversed", f.reversed, "Use the arc opposite to the stored direction");
  auto* th = graph_cmd("theta", "Theta series of the flow lattice");
  th->add_option("--max-norm", f.max_norm, "Largest exponent kept")->check(CLI::NonNegativeNumber);
  th->add_option("--method", f.method, "product, enumerate or both")
      ->check(CLI::IsMember({"product", "enumerate", "both"}));
  graph_cmd("flows-of-norm", "Number of integer flows of a given squared norm")
      ->add_option("--norm", f.norm, "Squared norm")
      ->required()
      ->check(CLI::NonNegativeNumber);
  auto* cmp = app.add_subcommand("compare", "Tutte polynomials and theta series of two graphs");
  cmp->add_option("graphs", f.files, "Two graph files")->required()->expected(2);
  cmp->add_option("--max-norm", f.max_norm, "Largest exponent kept")->check(CLI::NonNegativeNumber);
  graph_cmd("torsion", "Torsion of the top degree modulo products of lower degrees")
      ->add_option("--degrees", f.degrees, "i,j")
      ->required();
  graph_cmd("verify", "Inequality suite; --all adds the identity checks")->add_flag("--all", f.all);
  auto* co = app.add_subcommand("corpus", "Cross-check every connected multigraph up to a size");
  co->add_option("--max-edges", f.max_edges, "Edge cap")->check(CLI::Range(0, 20));
  co->add_option("--max-norm", f.max_norm, "Theta bound")->check(CLI::NonNegativeNumber);
  co->add_option("--flip-trials", f.flip_trials, "Random re-orientations per graph");
  co->add_option("--seed", f.seed, "Seed for the random choices");

  Outcome out;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, err;
    const int code = app.exit(e, o, err);
    out.report = o.str();
    out.error = err.str();
    out.exit_code = code == 0 ? kOk : kInputError;
    return out;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Report report(command);
  const auto start = std::chrono::steady_clock::now();
  try {
    execute(command, f, report);
  } catch (const CapacityError& e) {
    out.error = e.what();
    out.exit_code = kCapacityError;
    return out;
  } catch (const InputError& e) {
    out.error = e.what();
    out.exit_code = kInputError;
    return out;
  } catch (const DomainError& e) {
    out.error = e.what();
    out.exit_code = kInputError;
    return out;
  } catch (const InfeasibleError& e) {
    out.error = e.what();
    out.exit_code = kInputError;
    return out;
  } catch (const std::exception& e) {
    // Internal identities are asserted with logic_error.
    out.error = std::string("check failed: ") + e.what();
    out.exit_code = kCheckFailed;
    return out;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.report = report.finish(seconds);
  out.exit_code = report.failed() ? kCheckFailed : kOk;
  if (!f.output.empty()) {
    std::ofstream file(f.output);
    if (!file) {
      out.error = "cannot write " + f.output;
      out.exit_code = kInputError;
      return out;
    }
    file << out.report;
    out.report.clear();
  }
  return out;
}

int main(int argc, char** argv) {
  const Outcome out = run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << out.report;
  if (!out.error.empty()) std::cerr << out.error << (out.error.back() == '\n' ? "" : "\n");
  return out.exit_code;
}

}  // namespace flowalg::cli

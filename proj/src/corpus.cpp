#include "flowalg/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "flowalg/circulation.hpp"
#include "flowalg/flow_lattice.hpp"
#include "flowalg/kirchhoff.hpp"
#include "flowalg/named_graphs.hpp"
#include "flowalg/tutte.hpp"

namespace flowalg::corpus {

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

CanonicalForm plain_form(const Graph& g) {
  CanonicalForm f;
  f.vertices = g.vertex_count();
  for (const Edge& e : g.edges()) {
    const auto a = static_cast<std::uint32_t>(g.vertex_index(e.tail));
    const auto b = static_cast<std::uint32_t>(g.vertex_index(e.head));
    f.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return f;
}

// Stable colour classes, numbered by the sorted order of their signatures
// so the numbering itself is isomorphism invariant.
std::vector<std::size_t> refine(const CanonicalForm& f) {
  const std::size_t n = f.vertices;
  std::vector<std::vector<std::size_t>> adj(n, std::vector<std::size_t>(n, 0));
  for (auto [a, b] : f.edges) {
    ++adj[a][b];
    if (a != b) ++adj[b][a];
  }
  std::vector<std::size_t> color(n, 0);
  std::size_t classes = 1;
  while (true) {
    using Signature = std::pair<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>>;
    std::vector<Signature> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = {color[v], adj[v][v]};
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && adj[v][u] > 0) sig[v].second.emplace_back(color[u], adj[v][u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v)
      color[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

CanonicalForm least_over_cells(const CanonicalForm& f, std::vector<std::vector<std::uint32_t>> cells) {
  std::vector<std::uint32_t> label(f.vertices);
  CanonicalForm best;
  bool have = false;
  std::vector<Pair> candidate(f.edges.size());
  while (true) {
    std::uint32_t next = 0;
    for (const auto& cell : cells)
      for (std::uint32_t v : cell) label[v] = next++;
    for (std::size_t i = 0; i < f.edges.size(); ++i) {
      const std::uint32_t a = label[f.edges[i].first], b = label[f.edges[i].second];
      candidate[i] = {std::min(a, b), std::max(a, b)};
    }
    std::sort(candidate.begin(), candidate.end());
    if (!have || candidate < best.edges) {
      best.edges = candidate;
      have = true;
    }
    std::size_t i = cells.size();
    while (i > 0 && !std::next_permutation(cells[i - 1].begin(), cells[i - 1].end())) --i;
    if (i == 0) break;
  }
  best.vertices = f.vertices;
  return best;
}

CanonicalForm canonical_of(const CanonicalForm& f) {
  const auto color = refine(f);
  const std::size_t classes = f.vertices == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<std::uint32_t>> cells(classes);
  for (std::uint32_t v = 0; v < f.vertices; ++v) cells[color[v]].push_back(v);
  return least_over_cells(f, std::move(cells));
}

UniPoly as_poly(const std::vector<std::size_t>& d) {
  std::vector<Integer> c;
  for (std::size_t x : d) c.emplace_back(static_cast<unsigned long>(x));
  return UniPoly(std::move(c));
}

UniPoly shift(const UniPoly& p, std::size_t k) { return p * UniPoly::monomial(k); }

enum Slot {
  kThreeOracles,
  kTorsionFree,
  kDeletionContraction,
  kDoubledEdge,
  kOnePointUnion,
  kCutSums,
  kLatticeDeterminant,
  kNormIdentity,
  kPotentialIdentities,
  kThetaRoutes,
  kInequalities,
  kLogConcave,
  kOrientationInvariance,
  kSlotCount
};

void record(std::vector<Tally>& t, Slot s, bool ok, const Graph& g) {
  Tally& tally = t[s];
  ++tally.cases;
  if (ok) return;
  ++tally.failures;
  if (tally.examples.size() < 5) tally.examples.push_back(describe(g));
}

std::vector<Tally> fresh_tallies() {
  std::vector<Tally> t;
  for (const auto& name : check_names()) t.push_back(Tally{name, name == "log_concave", 0, 0, {}});
  return t;
}

void merge(std::vector<Tally>& into, const std::vector<Tally>& from) {
  for (std::size_t i = 0; i < into.size(); ++i) {
    into[i].cases += from[i].cases;
    into[i].failures += from[i].failures;
    for (const auto& ex : from[i].examples)
      if (into[i].examples.size() < 5) into[i].examples.push_back(ex);
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return canonical_of(plain_form(g)); }

CanonicalForm brute_canonical_form(const Graph& g) {
  const CanonicalForm f = plain_form(g);
  std::vector<std::uint32_t> all(f.vertices);
  for (std::uint32_t v = 0; v < f.vertices; ++v) all[v] = v;
  return least_over_cells(f, {all});
}

Graph to_graph(const CanonicalForm& form) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (auto [a, b] : form.edges) pairs.emplace_back(a + 1, b + 1);
  return Graph::from_pairs(form.vertices, pairs);
}

std::vector<Graph> connected_multigraphs(std::size_t max_edges) {
  require_subset_capacity(max_edges, "corpus");
  std::vector<Graph> out;
  std::set<CanonicalForm> level{CanonicalForm{1, {}}};
  for (std::size_t m = 0;; ++m) {
    for (const auto& f : level) out.push_back(to_graph(f));
    if (m == max_edges) break;
    // Every connected graph with m+1 edges arises from one with m edges by
    // adding a non-bridge edge or a pendant edge with a new vertex.
    std::set<CanonicalForm> next;
    for (const auto& f : level) {
      const auto n = static_cast<std::uint32_t>(f.vertices);
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = a; b <= n; ++b) {
          CanonicalForm g = f;
          g.edges.emplace_back(a, b);
          if (b == n) g.vertices = n + 1;
          next.insert(canonical_of(g));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "three_oracles",   "torsion_free",        "deletion_contraction", "doubled_edge",
      "one_point_union", "cut_sums",            "lattice_determinant",  "norm_identity",
      "potential_identities", "theta_routes",   "inequalities",         "log_concave",
      "orientation_invariance"};
  return names;
}

bool Report::passed() const {
  return std::all_of(tallies.begin(), tallies.end(),
                     [](const Tally& t) { return t.exploratory || t.failures == 0; });
}

const Tally& Report::tally(const std::string& name) const {
  for (const auto& t : tallies)
    if (t.name == name) return t;
  throw std::out_of_range("no corpus tally named " + name);
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "V" << g.vertex_count() << " E[";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    os << (i ? " " : "") << e.tail << ">" << e.head;
  }
  os << "]";
  return os.str();
}

void check_graph(const Graph& g, const Options& options, std::uint32_t seed, std::vector<Tally>& t) {
  constexpr Exec serial = Exec::Serial;
  std::mt19937 rng(seed);
  const std::size_t m = g.edge_count();
  const Integer bound(options.max_norm);

  const UniPoly by_tutte = poincare(g);
  const auto d = rank_sequence(g, serial);
  const UniPoly by_relations = as_poly(d);
  record(t, kThreeOracles, by_tutte == by_relations && as_poly(monomial_dimensions(g, serial)) == by_relations, g);

  bool torsion_free = true;
  for (std::size_t j = 0; j <= m; ++j) torsion_free = torsion_free && torsion_check(g, j);
  record(t, kTorsionFree, torsion_free, g);

  for (const Edge& e : g.edges()) {
    const UniPoly del = as_poly(rank_sequence(delete_edge(g, e.id), serial));
    if (is_cut_edge(g, e.id)) {
      record(t, kDeletionContraction, del == by_relations, g);
    } else {
      const UniPoly con = as_poly(rank_sequence(contract_edge(g, e.id), serial));
      record(t, kDeletionContraction, by_relations == del + shift(con, 1), g);
    }
    const Graph doubled = double_edge(g, e.id, 1000);
    const UniPoly con = as_poly(rank_sequence(contract_edge(g, e.id), serial));
    record(t, kDoubledEdge,
           as_poly(rank_sequence(doubled, serial)) == by_relations + (shift(con, 1) + shift(con, 2)), g);
  }

  for (const Graph& h : {named::loop(), named::bond(2), named::path(2)}) {
    const UniPoly dh = as_poly(rank_sequence(h, serial));
    const VertexId at = g.vertices()[rng() % g.vertex_count()];
    record(t, kOnePointUnion, as_poly(rank_sequence(join(g, h, std::pair{at, VertexId{1}}), serial)) == by_relations * dh, g);
  }

  {
    const auto n = g.vertex_count();
    const std::uint64_t u = n >= 64 ? rng() : rng() & ((std::uint64_t{1} << n) - 1);
    std::vector<int> sum(m, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (!((u >> v) & 1U)) continue;
      const auto row = incidence_row(g, g.vertices()[v]);
      for (std::size_t e = 0; e < m; ++e) sum[e] += row[e];
    }
    bool ok = true;
    for (std::size_t e = 0; e < m; ++e) {
      const Edge& edge = g.edges()[e];
      const bool tail_in = (u >> g.vertex_index(edge.tail)) & 1U, head_in = (u >> g.vertex_index(edge.head)) & 1U;
      ok = ok && sum[e] == static_cast<int>(head_in) - static_cast<int>(tail_in);
    }
    record(t, kCutSums, ok, g);
  }

  Integer determinant;
  try {
    determinant = lattice(g).determinant;
    record(t, kLatticeDeterminant,
           determinant == tutte(g).evaluate(1, 1) && determinant == count_maximal_forests(g), g);
  } catch (const std::logic_error&) {
    record(t, kLatticeDeterminant, false, g);
  }

  for (const Edge& e : g.edges()) {
    if (is_cut_edge(g, e.id)) continue;
    record(t, kNormIdentity, norm_identity_check(g, e.id).holds, g);
    for (bool reversed : {false, true})
      record(t, kPotentialIdentities, potential_identities_hold(g, characteristic_flow(g, e.id, reversed)), g);
  }

  const QSeries theta = theta_enumerate(g, bound, serial);
  record(t, kThetaRoutes, theta_product(g, bound) == theta, g);

  const CheckReport report = verify_inequalities(g);
  for (const Check& c : report.checks) record(t, c.exploratory ? kLogConcave : kInequalities, c.passed, g);

  for (std::size_t trial = 0; trial < options.flip_trials; ++trial) {
    const std::uint64_t mask = m == 0 ? 0 : rng() & ((std::uint64_t{1} << m) - 1);
    const Graph f = g.with_flipped(EdgeSubset(mask));
    bool ok = poincare(f) == by_tutte && as_poly(rank_sequence(f, serial)) == by_relations &&
              lattice(f).determinant == determinant && theta_enumerate(f, bound, serial) == theta;
    if (trial % 10 == 0)
      for (std::size_t j = 0; ok && j <= m; ++j) ok = torsion_check(f, j);
    record(t, kOrientationInvariance, ok, g);
  }
}

Report run(const Options& options) { return run(connected_multigraphs(options.max_edges), options); }

Report run(const std::vector<Graph>& graphs, const Options& options) {
  Report report;
  report.graphs = graphs.size();
  report.tallies = fresh_tallies();
  const long count = static_cast<long>(graphs.size());
#pragma omp parallel if (options.exec == Exec::Parallel)
  {
    std::vector<Tally> local = fresh_tallies();
#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i)
      check_graph(graphs[i], options, options.seed + static_cast<std::uint32_t>(i), local);
#pragma omp critical
    merge(report.tallies, local);
  }
  // Examples from different threads arrive in arbitrary order.
  for (auto& t : report.tallies) std::sort(t.examples.begin(), t.examples.end());
  return report;
}

}  // namespace flowalg::corpus

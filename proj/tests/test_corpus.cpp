#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "flowalg/corpus.hpp"
#include "flowalg/named_graphs.hpp"

using namespace flowalg;

namespace {

Graph relabelled(const Graph& g, std::mt19937& rng) {
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : g.edges()) {
    const VertexId a = perm[g.vertex_index(e.tail)], b = perm[g.vertex_index(e.head)];
    pairs.emplace_back(rng() % 2 ? a : b, rng() % 2 ? b : a);
    if (pairs.back().first == pairs.back().second && a != b) pairs.back() = {a, b};
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  return Graph::from_pairs(g.vertex_count(), pairs);
}

// Classes of connected multigraphs with exactly m edges, by listing every
// multiset of vertex pairs on up to m + 1 vertices.
std::size_t brute_class_count(std::size_t m) {
  std::set<corpus::CanonicalForm> seen;
  for (std::size_t n = 1; n <= m + 1; ++n) {
    std::vector<std::pair<VertexId, VertexId>> slots;
    for (VertexId a = 1; a <= n; ++a)
      for (VertexId b = a; b <= n; ++b) slots.emplace_back(a, b);
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (std::size_t i : pick) pairs.push_back(slots[i]);
      const Graph g = Graph::from_pairs(n, pairs);
      if (components(g).count == 1) seen.insert(corpus::brute_canonical_form(g));
      // next nondecreasing index sequence
      std::size_t i = m;
      while (i > 0 && pick[i - 1] == slots.size() - 1) --i;
      if (i == 0) break;
      const std::size_t v = pick[i - 1] + 1;
      for (std::size_t k = i - 1; k < m; ++k) pick[k] = v;
    }
    if (m == 0) break;
  }
  return seen.size();
}

}  // namespace

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937 rng(71);
  for (const Graph& g : corpus::connected_multigraphs(5)) {
    const auto form = corpus::canonical_form(g);
    for (int t = 0; t < 5; ++t) ASSERT_EQ(corpus::canonical_form(relabelled(g, rng)), form);
  }
}

TEST(Canonical, SameClassesAsBruteForce) {
  std::mt19937 rng(72);
  const auto graphs = corpus::connected_multigraphs(5);
  for (std::size_t i = 0; i < 400; ++i) {
    const Graph& a = graphs[rng() % graphs.size()];
    const Graph b = rng() % 2 ? relabelled(a, rng) : graphs[rng() % graphs.size()];
    ASSERT_EQ(corpus::canonical_form(a) == corpus::canonical_form(b),
              corpus::brute_canonical_form(a) == corpus::brute_canonical_form(b));
  }
}

TEST(Canonical, SeparatesNonIsomorphic) {
  const auto graphs = corpus::connected_multigraphs(6);
  std::set<corpus::CanonicalForm> brute;
  for (const Graph& g : graphs) brute.insert(corpus::brute_canonical_form(g));
  EXPECT_EQ(brute.size(), graphs.size());
}

TEST(Corpus, ClassCounts) {
  const auto graphs = corpus::connected_multigraphs(4);
  std::map<std::size_t, std::size_t> by_edges;
  for (const Graph& g : graphs) ++by_edges[g.edge_count()];
  // single vertex; loop and edge; two loops, loop on an edge end, double edge, path
  EXPECT_EQ(by_edges[0], 1u);
  EXPECT_EQ(by_edges[1], 2u);
  EXPECT_EQ(by_edges[2], 4u);
  for (std::size_t m = 0; m <= 4; ++m) EXPECT_EQ(by_edges[m], brute_class_count(m)) << m;
}

TEST(Corpus, SmallRunPasses) {
  corpus::Options options;
  options.max_edges = 4;
  options.flip_trials = 5;
  const auto serial_options = [&] {
    auto o = options;
    o.exec = Exec::Serial;
    return o;
  }();
  const auto report = corpus::run(options);
  EXPECT_EQ(report.graphs, 48u);
  EXPECT_TRUE(report.passed());
  for (const auto& t : report.tallies) {
    EXPECT_GT(t.cases, 0u) << t.name;
    EXPECT_EQ(t.failures, 0u) << t.name;
  }
  const auto serial = corpus::run(serial_options);
  for (std::size_t i = 0; i < serial.tallies.size(); ++i)
    EXPECT_EQ(serial.tallies[i].cases, report.tallies[i].cases);
}

TEST(Corpus, AcceptsDisconnectedInput) {
  corpus::Options options;
  options.flip_trials = 2;
  const auto report = corpus::run({join(named::cycle(3), named::loop())}, options);
  EXPECT_TRUE(report.passed());
}

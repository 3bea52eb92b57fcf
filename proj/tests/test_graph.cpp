#include <gtest/gtest.h>

#include <random>

#include "flowalg/graph.hpp"

using namespace flowalg;

namespace {

Graph triangle() { return Graph::from_pairs(3, {{1, 2}, {2, 3}, {1, 3}}); }
Graph k4() { return Graph::from_pairs(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }
Graph loop() { return Graph::from_pairs(1, {{1, 1}}); }

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Graph random_graph(std::mt19937& rng, std::size_t n, std::size_t m) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    pairs.emplace_back(1 + rng() % n, 1 + rng() % n);
  return Graph::from_pairs(n, pairs);
}

}  // namespace

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph({1, 2}, {{1, 1, 3}}), InputError);
  EXPECT_THROW(Graph({1, 2}, {{1, 1, 2}, {1, 2, 1}}), InputError);
  EXPECT_THROW(Graph({1, 1}, {}), InputError);
  EXPECT_THROW(triangle().subset({9}), InputError);
}

TEST(Graph, EdgesSortedById) {
  Graph g({3, 1, 2}, {{5, 1, 2}, {2, 2, 3}});
  EXPECT_EQ(g.edges()[0].id, 2u);
  EXPECT_EQ(g.vertices(), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(g.ids(g.subset({5})), std::vector<EdgeId>{5});
}

TEST(Contract, Examples) {
  auto t = contract(triangle(), triangle().subset({1}));
  EXPECT_EQ(t.graph.vertex_count(), 2u);
  EXPECT_EQ(t.graph.edge_count(), 2u);
  EXPECT_EQ(t.graph.vertices(), (std::vector<VertexId>{1, 3}));
  EXPECT_EQ(t.vertex_map.at(2), 1u);

  auto l = contract(loop(), loop().all_edges());
  EXPECT_EQ(l.graph.vertex_count(), 1u);
  EXPECT_EQ(l.graph.edge_count(), 0u);

  Graph k = contract_edge(k4(), 1);
  EXPECT_EQ(k.vertex_count(), 3u);
  EXPECT_EQ(k.edge_count(), 5u);
  // Edges 2 (1-3) and 4 (2-3) become parallel.
  EXPECT_EQ(k.edge(2).tail, k.edge(4).tail);
  EXPECT_EQ(k.edge(2).head, k.edge(4).head);
}

TEST(Contract, OrderIndependent) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(rng, 1 + rng() % 4, rng() % 7);
    const std::uint64_t all = g.edge_count() ? g.all_edges().bits() : 0;
    const std::uint64_t a = rng() & all;
    const std::uint64_t b = rng() & all & ~a;
    Graph step = contract(g, EdgeSubset(a)).graph;
    std::vector<EdgeId> rest = g.ids(EdgeSubset(b));
    Graph twice = contract(step, step.subset(rest)).graph;
    EXPECT_EQ(twice, contract(g, EdgeSubset(a | b)).graph);
  }
}

TEST(Delete, Examples) {
  Graph p = delete_edge(triangle(), 3);
  EXPECT_EQ(p.vertex_count(), 3u);
  EXPECT_EQ(p.edge_count(), 2u);
  EXPECT_EQ(delete_edges(triangle(), EdgeSubset()), triangle());
  EXPECT_EQ(delete_edge(k4(), 6).edge_count(), 5u);
}

TEST(Components, Examples) {
  EXPECT_EQ(components(join(triangle(), triangle())).count, 2u);
  EXPECT_EQ(components(Graph()).count, 0u);
  EXPECT_EQ(components(k4()).count, 1u);
  EXPECT_EQ(components(Graph::from_pairs(3, {{2, 2}})).count, 3u);
}

TEST(CutEdge, Examples) {
  Graph path = Graph::from_pairs(3, {{1, 2}, {2, 3}});
  EXPECT_TRUE(is_cut_edge(path, 1));
  EXPECT_FALSE(is_cut_edge(triangle(), 2));
  EXPECT_FALSE(is_cut_edge(loop(), 1));
  EXPECT_EQ(cut_edge_count(join(triangle(), triangle(), std::pair<VertexId, VertexId>{1, 1})), 0u);
  EXPECT_THROW(is_cut_edge(path, 7), InputError);
}

TEST(Forest, Examples) {
  Graph path = Graph::from_pairs(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(maximal_forest(path), path.all_edges());
  EXPECT_EQ(triangle().ids(maximal_forest(triangle())), (std::vector<EdgeId>{1, 2}));
  EXPECT_TRUE(maximal_forest(loop()).empty());
}

TEST(BasicFlow, Examples) {
  Graph t = triangle();
  auto f = basic_flow(t, maximal_forest(t), 3);
  // Chord 1->3 returns 3->2->1 against edges 2 and 1.
  EXPECT_EQ(f, (std::vector<int>{-1, -1, 1}));
  EXPECT_EQ(basic_flow(loop(), EdgeSubset(), 1), std::vector<int>{1});
  Graph theta = Graph::from_pairs(2, {{1, 2}, {1, 2}, {1, 2}});
  EXPECT_EQ(basic_flow(theta, theta.subset({1}), 2), (std::vector<int>{-1, 1, 0}));
  EXPECT_THROW(basic_flow(t, maximal_forest(t), 1), InputError);
  EXPECT_THROW(basic_flow(t, t.subset({1}), 3), InputError);
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(k4()), 3u);
  EXPECT_EQ(girth(join(k4(), loop())), 1u);
  EXPECT_EQ(girth(Graph::from_pairs(3, {{1, 2}, {2, 3}})), std::nullopt);
  EXPECT_EQ(girth(Graph::from_pairs(2, {{1, 2}, {2, 1}})), 2u);
}

TEST(Incidence, Examples) {
  Graph e = Graph::from_pairs(2, {{1, 2}});
  EXPECT_EQ(incidence_row(e, 2), std::vector<int>{1});
  EXPECT_EQ(incidence_row(loop(), 1), std::vector<int>{0});
  EXPECT_THROW(incidence_row(e, 9), InputError);
}

TEST(GraphProperties, RandomGraphs) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Graph g = random_graph(rng, n, rng() % 8);
    const std::size_t k = components(g).count;
    const EdgeSubset forest = maximal_forest(g);
    EXPECT_EQ(forest.size(), n - k);

    // Summing rows over a vertex set U gives the signed cut indicator.
    const std::uint64_t u_mask = rng();
    std::vector<int> sum(g.edge_count(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if ((u_mask >> i) & 1U) sum = add(sum, incidence_row(g, g.vertices()[i]));
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[i];
      const bool t_in = (u_mask >> g.vertex_index(e.tail)) & 1U;
      const bool h_in = (u_mask >> g.vertex_index(e.head)) & 1U;
      EXPECT_EQ(sum[i], (h_in && !t_in) ? 1 : (t_in && !h_in) ? -1 : 0);
    }

    for (std::size_t c = 0; c < g.edge_count(); ++c) {
      if (forest.contains(c)) continue;
      auto flow = basic_flow(g, forest, g.edges()[c].id);
      EXPECT_EQ(flow[c], 1);
      for (VertexId v : g.vertices()) {
        auto row = incidence_row(g, v);
        int s = 0;
        for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * flow[i];
        EXPECT_EQ(s, 0);
      }
    }
    for (const Edge& e : g.edges()) {
      const bool cut = is_cut_edge(g, e.id);
      EXPECT_EQ(cut, components(delete_edge(g, e.id)).count > k);
    }
  }
}

TEST(Join, GlueAndDouble) {
  Graph j = join(triangle(), triangle(), std::pair<VertexId, VertexId>{3, 1});
  EXPECT_EQ(j.vertex_count(), 5u);
  EXPECT_EQ(j.edge_count(), 6u);
  Graph d = double_edge(triangle(), 2, 4);
  EXPECT_EQ(d.edge(4).tail, 2u);
  EXPECT_EQ(d.edge(4).head, 3u);
  EXPECT_EQ(triangle().with_flipped(triangle().subset({1})).edge(1).tail, 2u);
}

#include <gtest/gtest.h>

#include <random>

#include "flowalg/tutte.hpp"

using namespace flowalg;

namespace {

Graph cycle(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId i = 1; i <= n; ++i) pairs.emplace_back(i, i % n + 1);
  return Graph::from_pairs(n, pairs);
}

Graph k4() { return Graph::from_pairs(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

Graph random_graph(std::mt19937& rng, std::size_t n, std::size_t m) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < m; ++i) pairs.emplace_back(1 + rng() % n, 1 + rng() % n);
  return Graph::from_pairs(n, pairs);
}

}  // namespace

TEST(Tutte, Examples) {
  EXPECT_EQ(tutte(Graph::from_pairs(1, {{1, 1}})), BiPoly::y_power(1));
  EXPECT_EQ(tutte(Graph::from_pairs(2, {{1, 2}})), BiPoly::x_power(1));
  const BiPoly tri = BiPoly::x_power(2) + BiPoly::x_power(1) + BiPoly::y_power(1);
  EXPECT_EQ(tutte(cycle(3)), tri);
  EXPECT_EQ(tutte_corank_nullity(cycle(3)), tri);
  EXPECT_EQ(tutte(Graph()), BiPoly::constant(1));
  EXPECT_EQ(tutte_corank_nullity(Graph()), BiPoly::constant(1));
}

TEST(Tutte, RoutesAgreeOnRandomGraphs) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = random_graph(rng, 1 + rng() % 6, rng() % 11);
    const BiPoly dc = tutte(g);
    EXPECT_EQ(dc, tutte_corank_nullity(g, Exec::Serial));
    EXPECT_EQ(dc, tutte_corank_nullity(g, Exec::Parallel));
  }
}

TEST(Tutte, ProductOverComponents) {
  Graph two = join(k4(), cycle(3));
  EXPECT_EQ(tutte(two), tutte(k4()) * tutte(cycle(3)));
}

TEST(Poincare, Examples) {
  EXPECT_EQ(poincare(k4()), UniPoly({1, 3, 6, 10, 11, 6, 1}));
  EXPECT_EQ(poincare(Graph::from_pairs(4, {{1, 2}, {2, 3}, {2, 4}})), UniPoly({1}));
  EXPECT_EQ(poincare(Graph::from_pairs(3, {})), UniPoly({1}));
  for (std::size_t n = 1; n <= 7; ++n)
    EXPECT_EQ(poincare(cycle(n)), UniPoly(std::vector<Integer>(n + 1, Integer(1))));
}

TEST(Poincare, EvaluatesToTutteAtOneTwo) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 1 + rng() % 5, rng() % 9);
    EXPECT_EQ(poincare(g).evaluate(1), tutte(g).evaluate(1, 2));
  }
}

TEST(Complexity, Examples) {
  EXPECT_EQ(complexity(Graph::from_pairs(3, {{1, 2}, {2, 3}})), 1);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(complexity(cycle(n)), n);
  EXPECT_EQ(complexity(k4()), 16);
  EXPECT_EQ(count_maximal_forests(k4()), 16);
  EXPECT_EQ(complexity(Graph()), 1);
}

TEST(Complexity, RoutesAgreeAndIgnoreLoops) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = random_graph(rng, 1 + rng() % 6, rng() % 12);
    const Integer k = complexity(g);
    EXPECT_GE(k, 1);
    EXPECT_EQ(k, count_maximal_forests(g));
    EXPECT_EQ(k, complexity(join(g, Graph::from_pairs(1, {{1, 1}}), std::pair<VertexId, VertexId>{1, 1})));
  }
}

#include <gtest/gtest.h>

#include <random>

#include "flowalg/kirchhoff.hpp"
#include "flowalg/subsets.hpp"
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

std::vector<std::size_t> coefficients(const UniPoly& p, std::size_t length) {
  std::vector<std::size_t> out(length, 0);
  for (std::size_t i = 0; i < length; ++i) out[i] = p[i].get_ui();
  return out;
}

}  // namespace

TEST(Subsets, ColexRankMatchesListing) {
  for (std::size_t m = 0; m <= 9; ++m)
    for (std::size_t k = 0; k <= m; ++k) {
      const auto list = subsets_of_size(m, k);
      ASSERT_EQ(list.size(), small_binomial(m, k));
      for (std::size_t i = 0; i < list.size(); ++i) {
        EXPECT_EQ(colex_rank(list[i]), i);
        EXPECT_EQ(__builtin_popcountll(list[i]), static_cast<int>(k));
        if (i > 0) EXPECT_LT(list[i - 1], list[i]);
      }
    }
}

TEST(Subsets, SubmaskEnumeration) {
  std::size_t count = 0;
  for_each_submask_of_size(0b101101, 2, [&](std::uint64_t t) {
    EXPECT_EQ(t & ~std::uint64_t{0b101101}, 0u);
    EXPECT_EQ(__builtin_popcountll(t), 2);
    ++count;
  });
  EXPECT_EQ(count, 6u);
}

TEST(RelationMatrix, Shapes) {
  const Graph t = cycle(3);
  const auto r0 = relation_matrix(t, 0);
  EXPECT_EQ(r0.matrix.rows(), 0u);
  EXPECT_EQ(r0.matrix.cols(), 1u);

  const auto r1 = relation_matrix(t, 1);
  EXPECT_EQ(r1.matrix.rows(), 3u);
  EXPECT_EQ(rank(r1.matrix), 2u);

  const auto r2 = relation_matrix(t, 2);
  EXPECT_EQ(r2.matrix.rows(), 6u);
  EXPECT_EQ(r2.matrix.cols(), 3u);
  EXPECT_EQ(rank(r2.matrix), 2u);
  EXPECT_EQ(graded_basis(t, 2).size(), 3u);
}

TEST(RelationMatrix, RowsSupportedOnExtensionsAndSumToZero) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, 1 + rng() % 4, rng() % 7);
    for (std::size_t j = 1; j <= g.edge_count(); ++j) {
      const auto r = relation_matrix(g, j);
      const auto basis = graded_basis(g, j);
      std::vector<std::int64_t> block(r.matrix.cols(), 0);
      for (std::size_t row = 0; row < r.rows.size(); ++row) {
        const EdgeSubset s = r.rows[row].sigma;
        for (std::size_t c = 0; c < basis.size(); ++c)
          if (r.matrix(row, c) != 0) EXPECT_EQ((basis[c] & s), s);
        for (std::size_t c = 0; c < basis.size(); ++c) block[c] += r.matrix(row, c);
        if (row + 1 == r.rows.size() || !(r.rows[row + 1].sigma == s)) {
          for (auto& x : block) {
            EXPECT_EQ(x, 0);
            x = 0;
          }
        }
      }
    }
  }
}

TEST(RankSequence, Examples) {
  EXPECT_EQ(rank_sequence(cycle(3)), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(rank_sequence(k4()), (std::vector<std::size_t>{1, 3, 6, 10, 11, 6, 1}));
  EXPECT_EQ(rank_sequence(Graph::from_pairs(3, {{1, 2}, {2, 3}})), (std::vector<std::size_t>{1, 0, 0}));
}

TEST(RankSequence, AgreesWithTutteRoute) {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(rng, 1 + rng() % 5, rng() % 8);
    const auto d = rank_sequence(g, Exec::Serial);
    EXPECT_EQ(d, rank_sequence(g, Exec::Parallel));
    EXPECT_EQ(d, coefficients(poincare(g), g.edge_count() + 1));
  }
}

TEST(RankSequence, SplitAndCutEdgeRecurrences) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, 1 + rng() % 4, 1 + rng() % 6);
    const auto d = rank_sequence(g);
    for (const Edge& e : g.edges()) {
      const auto del = rank_sequence(delete_edge(g, e.id));
      if (is_cut_edge(g, e.id)) {
        for (std::size_t j = 0; j < del.size(); ++j) EXPECT_EQ(d[j], del[j]);
        EXPECT_EQ(d.back(), 0u);
      } else {
        const auto con = rank_sequence(contract_edge(g, e.id));
        for (std::size_t j = 0; j < d.size(); ++j) {
          const std::size_t a = j < del.size() ? del[j] : 0;
          const std::size_t b = j >= 1 && j - 1 < con.size() ? con[j - 1] : 0;
          EXPECT_EQ(d[j], a + b);
        }
      }
    }
  }
}

TEST(Torsion, Examples) {
  EXPECT_TRUE(torsion_check(cycle(3), 2));
  EXPECT_TRUE(torsion_check(cycle(3), 0));
  for (std::size_t j = 0; j <= 6; ++j) EXPECT_TRUE(torsion_check(k4(), j));
}

TEST(IntegralCirculations, Examples) {
  const MatrixZ tri = integral_circulations(cycle(3), 1);
  ASSERT_EQ(tri.rows(), 1u);
  EXPECT_EQ(abs(tri(0, 0)), 1);
  EXPECT_EQ(abs(tri(0, 1)), 1);
  EXPECT_EQ(abs(tri(0, 2)), 1);
  EXPECT_EQ(integral_circulations(Graph::from_pairs(3, {{1, 2}, {2, 3}}), 1).rows(), 0u);

  const MatrixZ k = integral_circulations(k4(), 1);
  ASSERT_EQ(k.rows(), 3u);
  MatrixZ gram(3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t e = 0; e < 6; ++e) gram(a, b) += k(a, e) * k(b, e);
  EXPECT_EQ(determinant(gram), 16);
  EXPECT_EQ(integral_circulations(k4(), 0).rows(), 1u);
}

TEST(ProductTorsion, Cycles) {
  const auto c3 = product_torsion(cycle(3), 1, 1);
  EXPECT_EQ(c3.torsion, std::vector<Integer>{2});
  EXPECT_EQ(c3.free_rank, 0u);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; i + j <= n; ++j) {
        const auto t = product_torsion(cycle(n), i, j);
        const Integer expected = binomial(static_cast<long>(i + j), static_cast<long>(i));
        EXPECT_EQ(t.torsion, expected == 1 ? std::vector<Integer>{} : std::vector<Integer>{expected});
        EXPECT_EQ(t.free_rank, 0u);
      }
  const auto forest = product_torsion(Graph::from_pairs(3, {{1, 2}, {2, 3}}), 1, 1);
  EXPECT_TRUE(forest.torsion.empty());
  EXPECT_THROW(product_torsion(cycle(3), 2, 2), DomainError);
}

#include <gtest/gtest.h>

#include <random>

#include "flowalg/exact.hpp"

using namespace flowalg;

namespace {

MatrixI64 triangle_incidence() {
  // Edges 1->2, 2->3, 1->3; rows are vertices 1..3.
  MatrixI64 m(3, 3);
  m(0, 0) = -1; m(0, 2) = -1;
  m(1, 0) = 1;  m(1, 1) = -1;
  m(2, 1) = 1;  m(2, 2) = 1;
  return m;
}

MatrixI64 random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int spread) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  MatrixI64 m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST(Rank, SmallCases) {
  EXPECT_EQ(rank(MatrixI64::identity(2)), 2u);
  EXPECT_EQ(rank(MatrixI64(3, 4)), 0u);
  EXPECT_EQ(rank(triangle_incidence()), 2u);
  EXPECT_EQ(rank(to_rational(triangle_incidence())), 2u);
  EXPECT_EQ(rank(to_integer(triangle_incidence())), 2u);
}

TEST(Rank, TransposeAndRoutesAgree) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    MatrixI64 m = random_matrix(rng, r, c, 2);
    // Force some dependence.
    if (r > 2)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) - 2 * m(1, j);
    const auto k = rank(m);
    EXPECT_EQ(k, rank(m.transpose()));
    EXPECT_EQ(k, rank(to_rational(m)));
    EXPECT_EQ(k, smith_normal_form(m).size());
  }
}

TEST(Rank, OverflowFallsBackToBigIntegers) {
  MatrixI64 m(3, 3);
  const std::int64_t big = std::int64_t{1} << 40;
  m(0, 0) = big + 1; m(0, 1) = big - 1; m(0, 2) = 3;
  m(1, 0) = big - 3; m(1, 1) = big + 7; m(1, 2) = 5;
  m(2, 0) = 2 * big - 2; m(2, 1) = 2 * big + 6; m(2, 2) = 8;
  EXPECT_EQ(rank(m), rank(to_rational(m)));
  EXPECT_EQ(rank(m), 2u);
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(to_rational(MatrixI64::identity(3))).empty());
  MatrixQ row(1, 2);
  row(0, 0) = 1; row(0, 1) = 1;
  auto k = kernel_basis(row);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  auto tri = kernel_basis(to_rational(triangle_incidence()));
  ASSERT_EQ(tri.size(), 1u);
  // Cycle 1->2->3 then back 3->1 along edge 3 reversed.
  EXPECT_EQ(tri[0][0], tri[0][1]);
  EXPECT_EQ(tri[0][2], -tri[0][0]);
}

TEST(Kernel, DimensionIsColsMinusRank) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 7;
    MatrixQ m = to_rational(random_matrix(rng, r, c, 3));
    auto k = kernel_basis(m);
    EXPECT_EQ(k.size(), c - rank(m));
    for (const auto& v : k)
      for (std::size_t i = 0; i < r; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
        EXPECT_EQ(s, 0);
      }
  }
}

TEST(Smith, Examples) {
  MatrixI64 d(2, 2);
  d(0, 0) = 2; d(1, 1) = 3;
  EXPECT_EQ(smith_normal_form(d), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(smith_normal_form(MatrixI64::identity(4)), std::vector<Integer>(4, Integer(1)));
  EXPECT_TRUE(smith_normal_form(MatrixI64(3, 2)).empty());
}

TEST(Smith, ProductMatchesDeterminantAndDivisibility) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    MatrixI64 m = random_matrix(rng, n, n, 4);
    const auto f = smith_normal_form(m);
    const Integer det = determinant(to_integer(m));
    if (det == 0) {
      EXPECT_LT(f.size(), n);
      continue;
    }
    ASSERT_EQ(f.size(), n);
    Integer prod = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      prod *= f[i];
      if (i > 0) EXPECT_EQ(f[i] % f[i - 1], 0);
    }
    EXPECT_EQ(prod, abs(det));
  }
}

TEST(IntegerKernel, BasisAnnihilatesAndHasFullRank) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 3, c = 2 + rng() % 4;
    MatrixZ m = to_integer(random_matrix(rng, r, c, 3));
    MatrixZ k = integer_kernel_basis(m);
    EXPECT_EQ(k.rows(), c - rank(m));
    for (std::size_t b = 0; b < k.rows(); ++b)
      for (std::size_t i = 0; i < r; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < c; ++j) s += m(i, j) * k(b, j);
        EXPECT_EQ(s, 0);
      }
    if (k.rows() > 0) EXPECT_EQ(smith_normal_form(k), std::vector<Integer>(k.rows(), Integer(1)));
  }
}

TEST(Determinant, RoutesAgree) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    MatrixI64 m = random_matrix(rng, n, n, 5);
    EXPECT_EQ(Rational(determinant(to_integer(m))), determinant(to_rational(m)));
  }
}

TEST(MinNorm, Examples) {
  MatrixQ none(0, 1);
  std::vector<FixedCoordinate> fix{{0, Rational(1)}};
  EXPECT_EQ(min_norm_affine(none, fix), std::vector<Rational>{Rational(1)});

  MatrixQ tri = to_rational(triangle_incidence());
  auto x = min_norm_affine(tri, fix);
  EXPECT_EQ(x, (std::vector<Rational>{1, 1, -1}));

  MatrixQ plane(1, 2);
  plane(0, 0) = 1; plane(0, 1) = 1;
  std::vector<Rational> rhs{Rational(1)};
  EXPECT_EQ(min_norm_point(plane, rhs), (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));

  std::vector<FixedCoordinate> clash{{0, Rational(1)}, {0, Rational(2)}};
  EXPECT_THROW(min_norm_affine(none, clash), InfeasibleError);
}

TEST(MinNorm, FeasibleAndOrthogonalToDirections) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 3, c = 3 + rng() % 4;
    MatrixQ m = to_rational(random_matrix(rng, r, c, 2));
    std::vector<FixedCoordinate> fix{{rng() % c, Rational(1 + static_cast<int>(rng() % 3))}};
    std::vector<Rational> x;
    try {
      x = min_norm_affine(m, fix);
    } catch (const InfeasibleError&) {
      continue;
    }
    MatrixQ full = m;
    std::vector<Rational> unit(c, Rational(0));
    unit[fix[0].index] = 1;
    full.append_row(unit);
    EXPECT_EQ(x[fix[0].index], fix[0].value);
    for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(dot(m.row(i), x), 0);
    for (const auto& d : kernel_basis(full)) EXPECT_EQ(dot(d, x), 0);
  }
}

TEST(Enumerate, Examples) {
  MatrixQ g(1, 1);
  g(0, 0) = 2;
  EXPECT_EQ(enumerate_by_norm(g, 8).size(), 5u);
  EXPECT_EQ(enumerate_by_norm(to_rational(MatrixI64::identity(2)), 1).size(), 5u);
  g(0, 0) = 3;
  EXPECT_EQ(enumerate_by_norm(g, 2), (std::vector<IntVector>{{0}}));
  MatrixQ bad(1, 1);
  bad(0, 0) = -1;
  EXPECT_THROW(enumerate_by_norm(bad, 3), InputError);
}

TEST(Enumerate, MatchesBruteForceAndIsSymmetric) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    // B^T B + I has least eigenvalue >= 1, so every coordinate is at most sqrt(12).
    MatrixI64 b = random_matrix(rng, n, n, 2);
    MatrixI64 gram = MatrixI64::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) gram(i, j) += b(k, i) * b(k, j);
    const Integer bound = 1 + rng() % 12;
    const auto found = enumerate_by_norm(to_rational(gram), bound, Exec::Serial);
    EXPECT_EQ(found, enumerate_by_norm(to_rational(gram), bound, Exec::Parallel));

    std::vector<IntVector> brute;
    IntVector v(n, -4);
    while (true) {
      std::int64_t norm = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) norm += v[i] * gram(i, j) * v[j];
      if (norm <= bound) brute.push_back(v);
      std::size_t i = n;
      while (i > 0 && v[i - 1] == 4) v[--i] = -4;
      if (i == 0) break;
      ++v[i - 1];
    }
    EXPECT_EQ(found, brute);
    for (const auto& x : found) {
      IntVector neg = x;
      for (auto& e : neg) e = -e;
      EXPECT_TRUE(std::binary_search(found.begin(), found.end(), neg));
    }
  }
}

TEST(Misc, BinomialAndLcm) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  std::vector<Rational> v{Rational(1, 2), Rational(-1, 3), Rational(2)};
  EXPECT_EQ(denominator_lcm(v), 6);
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
}

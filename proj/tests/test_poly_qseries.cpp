#include <gtest/gtest.h>

#include "flowalg/poly.hpp"
#include "flowalg/qseries.hpp"

using namespace flowalg;

TEST(UniPoly, ArithmeticAndTrim) {
  UniPoly a({1, 1});
  UniPoly b({1, -1});
  EXPECT_EQ(a * b, UniPoly({1, 0, -1}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_TRUE(UniPoly({0, 0}).is_zero());
  EXPECT_EQ((a + b)[0], 2);
  EXPECT_EQ(UniPoly::monomial(3, 2).evaluate(2), 16);
}

TEST(BiPoly, ArithmeticAndEvaluate) {
  BiPoly triangle = BiPoly::x_power(2) + BiPoly::x_power(1) + BiPoly::y_power(1);
  EXPECT_EQ(triangle.evaluate(1, 1), 3);
  EXPECT_EQ(triangle.coefficient(2, 0), 1);
  EXPECT_EQ(triangle.coefficient(0, 1), 1);
  EXPECT_EQ(triangle.coefficient(0, 0), 0);
  BiPoly sq = triangle * triangle;
  EXPECT_EQ(sq.evaluate(2, 3), triangle.evaluate(2, 3) * triangle.evaluate(2, 3));
  EXPECT_EQ(BiPoly::constant(0), BiPoly());
}

TEST(QSeries, PsiExamples) {
  QSeries s = psi_series(Rational(0), 1, 4);
  EXPECT_EQ(s.terms().size(), 3u);
  EXPECT_EQ(s.coefficient(0), 1);
  EXPECT_EQ(s.coefficient(1), 2);
  EXPECT_EQ(s.coefficient(4), 2);

  QSeries h = psi_series(Rational(1, 2), 1, 3);
  EXPECT_EQ(h.terms().size(), 2u);
  EXPECT_EQ(h.coefficient(Rational(1, 4)), 2);
  EXPECT_EQ(h.coefficient(Rational(9, 4)), 2);
  EXPECT_FALSE(h.has_integer_exponents());

  for (int a = -3; a <= 3; ++a)
    EXPECT_EQ(psi_series(Rational(a), 3, 40), psi_series(Rational(0), 3, 40));
}

TEST(QSeries, ProductTruncates) {
  QSeries a = psi_series(Rational(0), 1, 10);
  QSeries sq = a * a;
  // Sums of two squares up to 10.
  EXPECT_EQ(sq.coefficient(0), 1);
  EXPECT_EQ(sq.coefficient(1), 4);
  EXPECT_EQ(sq.coefficient(2), 4);
  EXPECT_EQ(sq.coefficient(3), 0);
  EXPECT_EQ(sq.coefficient(5), 8);
  EXPECT_EQ(sq.coefficient(9), 4);
  EXPECT_EQ(sq.coefficient(10), 8);
  for (const auto& [e, c] : sq.terms()) EXPECT_LE(e, 10);
}

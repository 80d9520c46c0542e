#include <random>

#include <gtest/gtest.h>

#include "polypart/exactmath.hpp"

using namespace polypart;

TEST(MatInverse, Identity) {
  EXPECT_EQ(mat_inverse(RatMatrix::identity(3)), RatMatrix::identity(3));
}

TEST(MatInverse, HigherDifferenceGenerators) {
  const RatMatrix b = RatMatrix::from_rows({{1, 2, 3}, {0, 1, 2}, {0, 0, 1}});
  const RatMatrix a = mat_inverse(b);
  EXPECT_EQ(a, RatMatrix::from_rows({{1, -2, 1}, {0, 1, -2}, {0, 0, 1}}));
  EXPECT_EQ(a * b, RatMatrix::identity(3));
}

TEST(MatInverse, OneByOne) {
  RatMatrix m(1, 1);
  m(0, 0) = 2;
  EXPECT_EQ(mat_inverse(m)(0, 0), BigRat(1, 2));
}

TEST(MatInverse, SingularThrows) {
  EXPECT_THROW(mat_inverse(RatMatrix::from_rows({{1, 2}, {2, 4}})), SingularMatrix);
}

TEST(MatDet, Examples) {
  EXPECT_EQ(mat_det(RatMatrix::identity(4)), 1);
  EXPECT_EQ(mat_det(RatMatrix::from_rows({{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}})), 1);
  EXPECT_EQ(mat_det(RatMatrix::from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(mat_det(RatMatrix::from_rows({{1, 2}, {2, 4}})), 0);
}

TEST(MatInverse, RandomInvolutionAndDeterminant) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5);
  int tested = 0;
  while (tested < 50) {
    const std::size_t n = 1 + tested % 6;
    std::vector<IntVector> rows(n, IntVector(n));
    for (auto& r : rows)
      for (auto& x : r) x = entry(rng);
    const RatMatrix m = RatMatrix::from_rows(rows);
    if (mat_det(m) == 0) continue;
    const RatMatrix inv = mat_inverse(m);
    EXPECT_EQ(mat_inverse(inv), m);
    EXPECT_EQ(mat_det(m) * mat_det(inv), 1);
    EXPECT_EQ(m * inv, RatMatrix::identity(n));
    ++tested;
  }
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_THROW(binomial(-1, 0), NegativeArgument);
  EXPECT_THROW(binomial(3, -1), NegativeArgument);
  EXPECT_EQ(binomial_i64(10, 3), 120);
}

TEST(Binomial, PascalRule) {
  for (int n = 1; n <= 30; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << "," << k;
}

TEST(Primitive, Examples) {
  EXPECT_EQ(primitive({0, 3}), (IntVector{0, 1}));
  EXPECT_EQ(primitive({-2, -4}), (IntVector{-1, -2}));
  EXPECT_EQ(primitive({6, -9, 3}), (IntVector{2, -3, 1}));
  EXPECT_THROW(primitive({0, 0}), ZeroVector);
}

TEST(ClearDenominators, ScalesToPrimitiveInteger) {
  EXPECT_EQ(clear_denominators({BigRat(1, 2), BigRat(1, 3), BigRat(0)}), (IntVector{3, 2, 0}));
  EXPECT_EQ(clear_denominators({BigRat(-4), BigRat(2)}), (IntVector{-2, 1}));
}

TEST(Strings, RoundTrip) {
  EXPECT_EQ(to_string(BigRat(-19, 3)), "-19/3");
  EXPECT_EQ(to_string(BigRat(4)), "4");
  EXPECT_EQ(parse_rational("-19/3"), BigRat(-19, 3));
  EXPECT_EQ(parse_rational("12"), BigRat(12));
  EXPECT_EQ(factorial(6), 720);
}

TEST(ToI64, Overflow) {
  EXPECT_EQ(to_i64(BigInt(-5)), -5);
  EXPECT_THROW(to_i64(BigInt(1) << 70), std::overflow_error);
}

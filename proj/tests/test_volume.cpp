#include <gtest/gtest.h>

#include "polypart/oracle.hpp"
#include "polypart/volume.hpp"

using namespace polypart;

TEST(UniPoly, Arithmetic) {
  const UniPoly x = UniPoly::linear(1, 0);
  const UniPoly p = x * x - UniPoly::constant(1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(BigRat(3)), 8);
  EXPECT_EQ(p.compose(UniPoly::linear(2, 1))(BigRat(1)), 8);
  EXPECT_EQ(p.antiderivative()(BigRat(3)), BigRat(6));
  EXPECT_EQ((p - p).degree(), -1);
}

TEST(CayleyVolume, Examples) {
  EXPECT_EQ(cayley_volume(2), 1);
  EXPECT_EQ(cayley_volume(3), 2);
  EXPECT_EQ(cayley_volume(4), BigRat(19, 3));
  EXPECT_EQ(normalized_volume(2), 1);
  EXPECT_EQ(normalized_volume(3), 4);
  EXPECT_EQ(normalized_volume(4), 38);
}

TEST(CayleyVolume, IntegerNormalizedVolumes) {
  for (int j = 2; j <= 9; ++j) EXPECT_GT(normalized_volume(j), 0) << j;
}

TEST(CayleyVolume, MonotoneAndBoxBounded) {
  BigRat box = 1;
  for (int j = 2; j <= 9; ++j) {
    if (j > 2) box *= BigInt(1) << (j - 2);
    EXPECT_LE(cayley_volume(j), box) << j;
    if (j > 2) EXPECT_GT(cayley_volume(j), cayley_volume(j - 1)) << j;
  }
}

TEST(CayleyVolume, SimplexRouteAgrees) {
  for (int j = 2; j <= 8; ++j) EXPECT_EQ(normalized_volume_by_simplices(j), normalized_volume(j)) << j;
}

TEST(Conjecture, Rows) {
  const std::vector<ConjectureRow> rows = conjecture_report(7);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].j, 2);
  EXPECT_EQ(rows[0].volume, 1);
  EXPECT_TRUE(rows[0].matches_j_minus_1);
  EXPECT_TRUE(rows[0].matches_j);
  EXPECT_EQ(rows[1].volume, 4);
  EXPECT_EQ(rows[1].graphs_on_j_minus_1, 1);
  EXPECT_FALSE(rows[1].matches_j_minus_1);
  EXPECT_TRUE(rows[1].matches_j);
  EXPECT_EQ(rows[2].volume, 38);
  EXPECT_EQ(rows[2].graphs_on_j_minus_1, 4);
  EXPECT_TRUE(rows[2].matches_j);
  for (const ConjectureRow& r : rows) {
    EXPECT_EQ(r.graphs_on_j, connected_graph_count(r.j));
    EXPECT_TRUE(r.matches_j_minus_1 || r.matches_j) << r.j;
  }
}

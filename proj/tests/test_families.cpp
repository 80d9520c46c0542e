#include <algorithm>

#include <gtest/gtest.h>

#include "polypart/families.hpp"
#include "polypart/oracle.hpp"

using namespace polypart;

TEST(HigherDiffCone, Examples) {
  EXPECT_EQ(higherdiff_cone(2, 3).rays, (std::vector<IntVector>{{1, 0, 0}, {2, 1, 0}, {3, 2, 1}}));
  EXPECT_EQ(higherdiff_cone(1, 3).rays, (std::vector<IntVector>{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}));
  IntVector top;
  for (const IntVector& ray : higherdiff_cone(3, 4).rays) top.push_back(ray[0]);
  EXPECT_EQ(top, (IntVector{1, 3, 6, 10}));
  for (bool open : higherdiff_cone(3, 4).open) EXPECT_FALSE(open);
}

TEST(HigherDiffConstraints, Examples) {
  const LinearConstraintSystem r1 = higherdiff_constraints_all_t(1, 2);
  ASSERT_EQ(r1.constraints.size(), 2u);
  EXPECT_EQ(r1.constraints[0].coeffs, (IntVector{1, -1}));
  EXPECT_EQ(r1.constraints[1].coeffs, (IntVector{0, 1}));
  const LinearConstraintSystem r2 = higherdiff_constraints_all_t(2, 2);
  const bool has_second_difference =
      std::any_of(r2.constraints.begin(), r2.constraints.end(),
                  [](const LinearConstraint& c) { return c.coeffs == IntVector{1, -2} && c.rel == Relation::GreaterEq; });
  EXPECT_TRUE(has_second_difference);
}

TEST(HigherDiff, TopOrderImpliesLowerOrders) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 5; ++n) {
      const HalfspaceCone h = higherdiff_halfspaces(r, n);
      const LinearConstraintSystem all = higherdiff_constraints_all_t(r, n);
      const PointSet pts = enumerate(higherdiff_cone(r, n), 12);
      EXPECT_FALSE(pts.points.empty());
      for (const IntVector& x : pts.points) {
        EXPECT_TRUE(contains(h, x));
        EXPECT_TRUE(all.contains(x));
      }
    }
}

TEST(ConeEnumeration, MatchesHalfspaceScan) {
  const NGonCones k = ngon_cones(4);
  LinearConstraintSystem outer{4, {}};
  const HalfspaceCone oh = ngon_outer_halfspaces(4);
  for (std::size_t i = 0; i < oh.rows.size(); ++i)
    outer.add(oh.rows[i], oh.strict[i] ? Relation::Greater : Relation::GreaterEq, 0);
  EXPECT_EQ(enumerate(k.outer, 11).points, enumerate(outer, 11).points);
  EXPECT_THROW(enumerate(make_generator_cone({{1, -1}, {0, 1}}, {false, false}), 5), UnboundedAbove);
}

TEST(NGon, RemovedConeInsideOuter) {
  for (int n = 3; n <= 5; ++n) {
    const NGonCones k = ngon_cones(n);
    const PointSet pts = enumerate(ngon_constraints(n), 12);
    LinearConstraintSystem outer{static_cast<std::size_t>(n), {}};
    const HalfspaceCone oh = ngon_outer_halfspaces(n);
    for (std::size_t i = 0; i < oh.rows.size(); ++i)
      outer.add(oh.rows[i], oh.strict[i] ? Relation::Greater : Relation::GreaterEq, 0);
    std::size_t outer_count = 0, removed_count = 0;
    for (const IntVector& x : enumerate(outer, 12).points) {
      ++outer_count;
      const bool removed = contains(k.removed, x);
      if (removed) {
        ++removed_count;
        EXPECT_TRUE(contains(k.outer, x));
      }
      EXPECT_EQ(!removed, std::binary_search(pts.points.begin(), pts.points.end(), x));
    }
    EXPECT_EQ(outer_count - removed_count, pts.points.size());
  }
}

TEST(Hermite, ExcludedConeRays) {
  const HermiteCones h = hermite_cones(3);
  EXPECT_EQ(h.excluded[0].rays, (std::vector<IntVector>{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
  for (bool open : h.excluded[0].open) EXPECT_TRUE(open);
}

TEST(Hermite, ConesPairwiseDisjointAndInsideOrthant) {
  for (int n = 2; n <= 5; ++n) {
    const HermiteCones h = hermite_cones(n);
    LinearConstraintSystem positive{static_cast<std::size_t>(n), {}};
    for (int i = 0; i < n; ++i) {
      IntVector e(n, 0);
      e[i] = 1;
      positive.add(e, Relation::Greater, 0);
    }
    for (const IntVector& x : enumerate(positive, 10).points) {
      int hits = 0;
      for (int k = 0; k < n; ++k)
        if (contains(h.excluded[k], x)) {
          ++hits;
          EXPECT_TRUE(contains(h.orthant, x));
          EXPECT_TRUE(hermite_excluded_constraints(n, k + 1).contains(x));
        }
      EXPECT_LE(hits, 1);
      EXPECT_EQ(hits == 0, hermite_constraints(n).contains(x));
    }
  }
}

TEST(Cayley, Vertices) {
  EXPECT_EQ(cayley_polytope(3).vertices, (std::vector<IntVector>{{1, 1}, {1, 2}, {2, 1}, {2, 4}}));
  EXPECT_EQ(cayley_polytope(2).vertices, (std::vector<IntVector>{{1}, {2}}));
  const CayleyPolytope c4 = cayley_polytope(4);
  EXPECT_EQ(c4.vertices.size(), 8u);
  EXPECT_TRUE(std::find(c4.vertices.begin(), c4.vertices.end(), IntVector{2, 4, 8}) != c4.vertices.end());
  EXPECT_EQ(cayley_vertex({true, false, true}), (IntVector{2, 1, 2}));
}

TEST(Cayley, VerticesAreExtremeLatticePoints) {
  for (int j = 2; j <= 6; ++j) {
    const CayleyPolytope p = cayley_polytope(j);
    const PointSet pts = enumerate(p.constraints, std::nullopt);
    for (const IntVector& v : p.vertices) {
      EXPECT_TRUE(p.constraints.contains(v));
      // Extreme: exactly dim constraints are tight (a simple cube vertex).
      std::size_t tight = 0;
      for (const LinearConstraint& c : p.constraints.constraints) {
        std::int64_t lhs = 0;
        for (std::size_t i = 0; i < v.size(); ++i) lhs += c.coeffs[i] * v[i];
        if (lhs == c.rhs) ++tight;
      }
      EXPECT_EQ(tight, p.dim());
    }
    for (const IntVector& x : pts.points) EXPECT_TRUE(p.constraints.contains(x));
  }
}

TEST(HypersimplexSlice, SmallCase) {
  const PointSet pts = enumerate(hypersimplex_slice_constraints(3, 2, 4), std::nullopt);
  EXPECT_EQ(pts.points, (std::vector<IntVector>{{0, 2, 2}, {1, 1, 2}, {1, 2, 1}, {2, 0, 2}, {2, 1, 1}, {2, 2, 0}}));
  EXPECT_EQ(enumerate(hypersimplex_slice_constraints(3, 2, 0), std::nullopt).points,
            (std::vector<IntVector>{{0, 0, 0}}));
  EXPECT_EQ(hypersimplex_slice_count(3, 2, 4), 6);
}

TEST(FamilySpec, Parsing) {
  EXPECT_EQ(to_string(parse_family_spec("higherdiff:r=2,n=4")), "higherdiff:r=2,n=4");
  EXPECT_EQ(to_string(parse_family_spec("hyperslice:n=4,k=2,t=8")), "hyperslice:n=4,k=2,t=8");
  EXPECT_TRUE(std::holds_alternative<Cayley>(parse_family_spec("cayley:j=5")));
  EXPECT_TRUE(std::holds_alternative<NGon>(parse_family_spec("ngon:n=5")));
  EXPECT_TRUE(std::holds_alternative<Hermite>(parse_family_spec("hermite:n=4")));
  EXPECT_THROW(parse_family_spec("ngon:n=2"), BadParams);
  EXPECT_THROW(parse_family_spec("ngon:n=5,m=1"), BadParams);
  EXPECT_THROW(parse_family_spec("square:n=5"), BadParams);
  EXPECT_THROW(parse_family_spec("higherdiff:r=2"), BadParams);
  EXPECT_THROW(parse_params("n=x"), BadParams);
  EXPECT_EQ(parse_params("r=2,n=4"), (Params{{"n", 4}, {"r", 2}}));
}

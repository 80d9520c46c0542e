#include <algorithm>

#include <gtest/gtest.h>

#include "polypart/brion.hpp"
#include "polypart/oracle.hpp"

using namespace polypart;

TEST(TangentCone, Examples) {
  const CayleyPolytope c3 = cayley_polytope(3);
  const VertexTangentCone top = tangent_cone(c3, {2, 4});
  std::vector<IntVector> rays = top.cone.rays;
  std::sort(rays.begin(), rays.end());
  EXPECT_EQ(rays, (std::vector<IntVector>{{-1, -2}, {0, -1}}));
  EXPECT_EQ(top.cone.apex, (IntVector{2, 4}));

  rays = tangent_cone(c3, {1, 1}).cone.rays;
  std::sort(rays.begin(), rays.end());
  EXPECT_EQ(rays, (std::vector<IntVector>{{0, 1}, {1, 0}}));

  EXPECT_EQ(tangent_cone(cayley_polytope(2), {2}).cone.rays, (std::vector<IntVector>{{-1}}));
  EXPECT_THROW(tangent_cone(c3, {2, 2}), NotAVertex);
  EXPECT_THROW(tangent_cone(c3, {3, 1}), NotAVertex);
}

TEST(TangentCone, TightMatricesAreUnimodular) {
  for (int j = 2; j <= 7; ++j) {
    const CayleyPolytope p = cayley_polytope(j);
    for (const IntVector& v : p.vertices) {
      const BigRat det = mat_det(RatMatrix::from_rows(tight_normals(p, v)));
      EXPECT_TRUE(det == 1 || det == -1) << j;
      EXPECT_TRUE(is_unimodular(tangent_cone(p, v).cone));
    }
  }
}

TEST(TangentCone, RaysPointAlongCubeEdges) {
  // Flipping one low/high choice moves to an adjacent vertex; each tangent
  // ray must be a positive multiple of the difference towards one of them,
  // and each such edge direction must appear as a ray.
  for (int j = 2; j <= 5; ++j) {
    const CayleyPolytope p = cayley_polytope(j);
    const std::size_t d = p.dim();
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      std::vector<bool> high(d);
      for (std::size_t i = 0; i < d; ++i) high[i] = mask >> i & 1u;
      const IntVector v = cayley_vertex(high);
      std::vector<IntVector> edges;
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<bool> flipped = high;
        flipped[i] = !flipped[i];
        const IntVector w = cayley_vertex(flipped);
        IntVector diff(d);
        for (std::size_t k = 0; k < d; ++k) diff[k] = w[k] - v[k];
        edges.push_back(primitive(diff));
      }
      std::vector<IntVector> rays = tangent_cone(p, v).cone.rays;
      std::sort(rays.begin(), rays.end());
      std::sort(edges.begin(), edges.end());
      EXPECT_EQ(rays, edges) << "j=" << j << " mask=" << mask;
    }
  }
}

TEST(BrionSum, TermCounts) {
  const RationalGF c2 = brion_sum(cayley_polytope(2));
  ASSERT_EQ(c2.terms().size(), 2u);
  EXPECT_EQ(c2.terms()[0].numerator, MultiPolynomial::monomial({1}));
  EXPECT_EQ(c2.terms()[0].denominator, (std::vector<ExponentVector>{{1}}));
  EXPECT_EQ(c2.terms()[1].numerator, MultiPolynomial::monomial({2}));
  EXPECT_EQ(c2.terms()[1].denominator, (std::vector<ExponentVector>{{-1}}));
  EXPECT_EQ(brion_sum(cayley_polytope(3)).terms().size(), 4u);
  EXPECT_EQ(brion_sum(cayley_polytope(4)).terms().size(), 8u);
  EXPECT_EQ(evaluate(c2, {BigRat(3)}), 12);
}

TEST(BrionVerify, Passes) {
  for (int j = 2; j <= 5; ++j) {
    const VerificationReport r = brion_verify(cayley_polytope(j), 20, 0);
    EXPECT_TRUE(r.passed) << j;
    EXPECT_EQ(r.checked, 20u);
    EXPECT_EQ(r.seed, 0u);
  }
}

TEST(BrionVerify, InjectedFaultFails) {
  const VerificationReport r = brion_verify(cayley_polytope(3), 20, 0, true);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->point.size(), 2u);
}

TEST(BrionSpecialization, LastVariableCreatesPole) {
  EXPECT_NO_THROW(specialize(brion_sum(cayley_polytope(2)), last_variable_specialization(1)));
  for (int j = 3; j <= 6; ++j) {
    const CayleyPolytope p = cayley_polytope(j);
    EXPECT_THROW(specialize(brion_sum(p), last_variable_specialization(p.dim())), PoleCreated) << j;
  }
}

TEST(BrionSpecialization, DiagonalMatchesOracle) {
  for (int j = 2; j <= 6; ++j) {
    const CayleyPolytope p = cayley_polytope(j);
    const RationalGF diagonal = specialize(brion_sum(p), Substitution::diagonal(p.dim()));
    for (const SimpleTerm& t : diagonal.terms())
      for (const ExponentVector& d : t.denominator) EXPECT_NE(d[0], 0);
    EXPECT_TRUE(brion_diagonal_check(p).passed) << j;
  }
  EXPECT_FALSE(brion_diagonal_check(cayley_polytope(4), true).passed);
}

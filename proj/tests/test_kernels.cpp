// Parallel kernels against their serial references.
#include <random>

#include <gtest/gtest.h>

#include "polypart/families.hpp"
#include "polypart/genfun.hpp"
#include "polypart/identities.hpp"
#include "polypart/oracle.hpp"

using namespace polypart;

TEST(Kernels, EnumerateMatchesSerial) {
  for (const FamilySpec& spec : std::vector<FamilySpec>{HigherDiff{2, 4}, NGon{5}, Hermite{4}, Cayley{5},
                                                         HypersimplexSlice{5, 3, 12}}) {
    const LinearConstraintSystem cs = constraints_of(spec);
    std::optional<std::int64_t> bound;
    if (!std::holds_alternative<Cayley>(spec) && !std::holds_alternative<HypersimplexSlice>(spec)) bound = 14;
    EXPECT_EQ(enumerate(cs, bound).points, serial::enumerate(cs, bound).points) << to_string(spec);
  }
}

TEST(Kernels, ExpandMatchesSerial) {
  for (const RationalGF& g : {rhs_hermite_full(5), rhs_ngon_full(4), geometric_gf(NGon{5}), rhs_ngon_q(6)})
    EXPECT_EQ(expand(g, 12).terms(), serial::expand(g, 12).terms());
}

TEST(Kernels, EvaluateAtMatchesSerial) {
  std::mt19937_64 rng(9);
  const RationalGF g = rhs_hermite_full(4);
  std::vector<std::vector<BigRat>> points;
  for (int i = 0; i < 40; ++i) points.push_back(random_point(rng, 4));
  EXPECT_EQ(evaluate_at(g, points), serial::evaluate_at(g, points));
}

// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact (zero tolerance); random-point checks use 20 points from seed 0.
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polypart/brion.hpp"
#include "polypart/cli.hpp"
#include "polypart/families.hpp"
#include "polypart/identities.hpp"
#include "polypart/oracle.hpp"
#include "polypart/volume.hpp"

using namespace polypart;

namespace {

constexpr int kPoints = 20;
constexpr std::uint64_t kSeed = 0;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Settings settings(std::optional<int> order = std::nullopt) {
  Settings s;
  s.order = order;
  s.points = kPoints;
  s.seed = kSeed;
  return s;
}

std::string tag(const char* name, int a) { return std::string(name) + "=" + std::to_string(a); }

void higher_differences(Outcome& o) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 5; ++n) {
      const PointSet pts = enumerate(higherdiff_constraints_all_t(r, n), 12);
      o.require(series_eq(expand(rhs_higherdiff_full(r, n), 12), to_series(pts, 12)),
                "full form " + tag("r", r) + " " + tag("n", n));
      // Lattice points of the (unimodular) t = r cone satisfy every lower order.
      const GeneratorCone cone = higherdiff_cone(r, n);
      const HalfspaceCone top = higherdiff_halfspaces(r, n);
      o.require(is_unimodular(cone), "unimodular " + tag("r", r) + " " + tag("n", n));
      const LinearConstraintSystem all = higherdiff_constraints_all_t(r, n);
      const PointSet cone_points = enumerate(cone, 12);
      o.require(cone_points.points == pts.points, "t=r and all-t point sets " + tag("r", r) + " " + tag("n", n));
      for (const IntVector& x : cone_points.points)
        o.require(contains(top, x) && all.contains(x), "t=r implication " + tag("r", r) + " " + tag("n", n));
    }
  for (int r = 1; r <= 3; ++r)
    o.require(verify(IdentityId::HigherDiffQ, {{"r", r}}, settings(30)).passed, "q form " + tag("r", r));
  o.detail << "full forms r=1..3 x n=1..5 to degree 12; q forms to order 30";
}

void ngon(Outcome& o) {
  for (int n = 3; n <= 6; ++n) {
    const TruncatedSeries oracle = to_q_series(enumerate(ngon_constraints(n), 20), 20);
    o.require(series_eq(expand(rhs_ngon_q(n), 20), oracle), "q form " + tag("n", n));
    const VerificationReport z = verify(IdentityId::NGonFull, {{"n", n}}, settings());
    o.require(z.passed && z.method == Method::RandomPoints && z.checked == kPoints, "z form " + tag("n", n));
  }
  o.detail << "q forms n=3..6 to order 20; z form vs two-cone difference at 20 points";
}

void hermite(Outcome& o) {
  for (int n = 3; n <= 6; ++n) {
    const LinearConstraintSystem cs = hermite_constraints(n);
    o.require(series_eq(expand(rhs_hermite_full(n), 8), to_series(enumerate(cs, 8), 8)), "full form " + tag("n", n));
    o.require(series_eq(expand(rhs_hermite_q(n), 25), to_q_series(enumerate(cs, 25), 25)), "q form " + tag("n", n));
    const HermiteCones cones = hermite_cones(n);
    LinearConstraintSystem positive{static_cast<std::size_t>(n), {}};
    for (int i = 0; i < n; ++i) {
      IntVector e(n, 0);
      e[i] = 1;
      positive.add(e, Relation::Greater, 0);
    }
    for (const IntVector& x : enumerate(positive, 12).points) {
      int hits = 0;
      for (const GeneratorCone& c : cones.excluded) hits += contains(c, x);
      o.require(hits <= 1, "disjointness " + tag("n", n));
    }
  }
  o.detail << "full forms to degree 8, q forms to order 25, cones disjoint on positive points of degree <= 12";
}

void cayley_recurrence(Outcome& o) {
  for (int j = 3; j <= 6; ++j) o.require(cayley_recurrence_check(j, settings()).passed, "recurrence " + tag("j", j));
  const std::vector<std::size_t> expected{2, 6, 26};
  o.detail << "recurrence j=3..6; oracle sizes";
  for (int j = 2; j <= 6; ++j) {
    const std::size_t terms = cayley_polynomial(j).terms().size();
    const std::size_t points = enumerate(cayley_polytope(j).constraints, std::nullopt).points.size();
    o.detail << ' ' << terms;
    o.require(terms == points, "term count equals point count " + tag("j", j));
    if (j <= 4) o.require(terms == expected[static_cast<std::size_t>(j - 2)], "size " + tag("j", j));
    o.require(BigInt(terms) == cayley_b(j - 1), "size equals b_{j-1} " + tag("j", j));
  }
}

void cayley_formula(Outcome& o) {
  for (int j = 2; j <= 6; ++j) {
    const TruncatedSeries rhs = rhs_cayley_formula(j);
    const int degree = 1 << (j - 1);
    o.require(rhs.order() >= degree + 10, "zero tail length " + tag("j", j));
    // Only the last part is weighted: z -> (1, ..., 1, q).
    const MultiPolynomial f = cayley_polynomial(j);
    const TruncatedSeries oracle = to_series(f.substitute(last_variable_specialization(f.nvars())), rhs.order());
    o.require(series_eq(rhs, oracle), "formula vs oracle " + tag("j", j));
    for (const auto& [e, c] : rhs.terms()) o.require(e[0] <= degree, "nonzero tail " + tag("j", j));
  }
  o.require(cayley_b(1) == 2 && cayley_b_by_binary_partitions(1) == 2, "b_1 = 2");
  o.require(cayley_b(2) == 6 && cayley_b_by_binary_partitions(2) == 6, "b_2 = 6");
  o.detail << "j=2..6 with ten-coefficient zero tail; b_1=2, b_2=6 by two routes";
}

void brion(Outcome& o) {
  for (int j = 2; j <= 5; ++j) {
    const VerificationReport r = brion_verify(cayley_polytope(j), kPoints, kSeed);
    o.require(r.passed && r.checked == kPoints, "brion_verify " + tag("j", j));
  }
  for (int j = 3; j <= 6; ++j) {
    const CayleyPolytope p = cayley_polytope(j);
    bool raised = false;
    try {
      specialize(brion_sum(p), last_variable_specialization(p.dim()));
    } catch (const PoleCreated&) {
      raised = true;
    }
    o.require(raised, "pole on (1,...,1,q) " + tag("j", j));
  }
  for (int j = 2; j <= 6; ++j)
    o.require(brion_diagonal_check(cayley_polytope(j)).passed, "all-q specialization " + tag("j", j));
  o.detail << "20-point checks j=2..5; pole for j=3..6; all-q sum vs oracle j=2..6";
}

void volume(Outcome& o) {
  const std::vector<int> expected{1, 4, 38};
  o.detail << "(j-1)! Vol(C_j), j=2..7:";
  const std::vector<ConjectureRow> rows = conjecture_report(7);
  for (const ConjectureRow& row : rows) {
    o.detail << ' ' << row.volume;
    o.require(row.volume == normalized_volume_by_simplices(row.j), "simplex route " + tag("j", row.j));
    o.require(BigRat(row.volume) == cayley_volume(row.j) * BigRat(factorial(static_cast<unsigned>(row.j - 1))),
              "integration route " + tag("j", row.j));
    o.require(row.matches_j_minus_1 || row.matches_j, "graph count at either offset " + tag("j", row.j));
    if (row.j <= 4) o.require(row.volume == expected[static_cast<std::size_t>(row.j - 2)], "value " + tag("j", row.j));
  }
  o.require(rows.size() == 6, "row count");
}

void hypersimplex(Outcome& o) {
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t <= 12; ++t) {
      for (int k : {2, 3}) {
        const std::size_t count = enumerate(hypersimplex_slice_constraints(n, k, t), std::nullopt).points.size();
        o.require(BigInt(count) == hypersimplex_slice_count(n, k, t),
                  "count " + tag("n", n) + " " + tag("k", k) + " " + tag("t", t));
      }
      LinearConstraintSystem simplex{static_cast<std::size_t>(n), {}};
      simplex.add(IntVector(n, 1), Relation::Equal, t);
      for (int i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        simplex.add(e, Relation::GreaterEq, 0);
      }
      const LinearConstraintSystem slice = hypersimplex_slice_constraints(n, 2, t);
      const LinearConstraintSystem balanced = hypersimplex_balanced_constraints(n, t);
      for (const IntVector& x : enumerate(simplex, std::nullopt).points)
        o.require(slice.contains(x) == balanced.contains(x), "k=2 equivalence " + tag("n", n) + " " + tag("t", t));
    }
  o.detail << "n=1..5, k=2,3, t=0..12; k=2 descriptions agree on every composition of t";
}

void reproducibility(Outcome& o) {
  auto once = [] {
    std::ostringstream out, err;
    const int code = cli::run({"verify-all", "--seed", "0", "--format", "json"}, out, err);
    return std::make_pair(code, out.str());
  };
  const auto a = once();
  const auto b = once();
  o.require(a.first == 0, "verify-all exit code");
  o.require(!a.second.empty() && a.second == b.second, "byte-identical output");
  o.detail << a.second.size() << " bytes, identical across two runs";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 higher differences", higher_differences},
      {"2 n-gon partitions", ngon},
      {"3 Hermite compositions", hermite},
      {"4 Cayley recurrence", cayley_recurrence},
      {"5 Cayley formula", cayley_formula},
      {"6 Brion sums", brion},
      {"7 Cayley volumes", volume},
      {"8 hypersimplex slices", hypersimplex},
      {"9 reproducibility", reproducibility},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail.str() << std::endl;
    failures += !o.ok;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polypart/cone.hpp"
#include "polypart/exactmath.hpp"

namespace polypart {

// ------------------------------------------------------------------ specs

struct HigherDiff { int r = 1; int n = 1; };
struct NGon { int n = 3; };
struct Hermite { int n = 2; };
struct Cayley { int j = 2; };
struct HypersimplexSlice { int n = 1; int k = 2; int t = 0; };

using FamilySpec = std::variant<HigherDiff, NGon, Hermite, Cayley, HypersimplexSlice>;

using Params = std::map<std::string, std::int64_t>;

/// "r=2,n=4" -> {r: 2, n: 4}. Throws BadParams.
Params parse_params(std::string_view text);

/// "higherdiff:r=2,n=4", "ngon:n=5", "hermite:n=4", "cayley:j=5",
/// "hyperslice:n=4,k=2,t=8". Parameter bounds are checked; throws BadParams.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
void validate(const FamilySpec& spec);

// ------------------------------------------------------ constraint systems

enum class Relation { GreaterEq, Greater, Equal, LessEq, Less };

struct LinearConstraint {
  IntVector coeffs;
  Relation rel = Relation::GreaterEq;
  std::int64_t rhs = 0;

  bool satisfied_by(const IntVector& x) const;
};

struct LinearConstraintSystem {
  std::size_t nvars = 0;
  std::vector<LinearConstraint> constraints;

  void add(IntVector coeffs, Relation rel, std::int64_t rhs);
  bool contains(const IntVector& x) const;
};

// -------------------------------------------------------------- families

/// Column j (1-based) is (C(r+j-2, r-1), ..., r, 1, 0, ..., 0); all rays
/// closed. Coordinate 1 carries the largest part.
GeneratorCone higherdiff_cone(int r, int n);

/// sum_{i=0}^{t} (-1)^i C(t,i) x_{k+i} >= 0 for 1 <= k <= n, 1 <= t <= r,
/// coordinates beyond n dropped.
LinearConstraintSystem higherdiff_constraints_all_t(int r, int n);

/// Rows of the t = r system only, as a simplicial halfspace cone.
HalfspaceCone higherdiff_halfspaces(int r, int n);

/// x_n >= ... >= x_1 > 0 (outer), and additionally x_1 + ... + x_{n-1} <= x_n
/// (removed). The n-gon partitions are the lattice points of outer \ removed.
struct NGonCones {
  GeneratorCone outer;
  GeneratorCone removed;
};
HalfspaceCone ngon_outer_halfspaces(int n);
HalfspaceCone ngon_removed_halfspaces(int n);
NGonCones ngon_cones(int n);
LinearConstraintSystem ngon_constraints(int n);

/// Open orthant minus the n pairwise-disjoint cones
/// C_k = R_{>0} e_k + sum_{j != k} R_{>0}(e_j + e_k).
struct HermiteCones {
  GeneratorCone orthant;
  std::vector<GeneratorCone> excluded;
};
HermiteCones hermite_cones(int n);
/// Positive compositions with every part at most the sum of the others.
LinearConstraintSystem hermite_constraints(int n);
/// x > 0 with x_k > sum of the other coordinates.
LinearConstraintSystem hermite_excluded_constraints(int n, int k);

/// 1 <= x_1 <= 2, 1 <= x_i <= 2 x_{i-1}. Constraint 2i is the lower bound on
/// coordinate i, constraint 2i + 1 the upper one (0-based i).
struct CayleyPolytope {
  int j = 2;
  LinearConstraintSystem constraints;
  std::vector<IntVector> vertices;

  std::size_t dim() const { return static_cast<std::size_t>(j - 1); }
};
CayleyPolytope cayley_polytope(int j);

/// Vertex for a low/high choice per coordinate: low gives 1, high gives
/// 2 (first coordinate) or twice the previous coordinate.
IntVector cayley_vertex(const std::vector<bool>& high);

/// sum lambda = t, lambda >= 0, k lambda_j <= t.
LinearConstraintSystem hypersimplex_slice_constraints(int n, int k, int t);
/// sum lambda = t, lambda >= 0, lambda_j <= sum of the others.
LinearConstraintSystem hypersimplex_balanced_constraints(int n, int t);
/// Number of lattice points of the slice by inclusion-exclusion over parts
/// exceeding floor(t / k).
BigInt hypersimplex_slice_count(int n, int k, int t);

/// Constraint system whose lattice points are the family.
LinearConstraintSystem constraints_of(const FamilySpec& spec);
std::size_t nvars_of(const FamilySpec& spec);

}  // namespace polypart

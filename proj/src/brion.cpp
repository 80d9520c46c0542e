#include "polypart/brion.hpp"

#include <algorithm>

#include "polypart/oracle.hpp"

namespace polypart {

namespace {

// Inward normal of constraint c written as normal . x >= offset.
IntVector inward_normal(const LinearConstraint& c) {
  if (c.rel == Relation::GreaterEq || c.rel == Relation::Greater) return c.coeffs;
  IntVector neg(c.coeffs.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -c.coeffs[i];
  return neg;
}

bool is_tight(const LinearConstraint& c, const IntVector& v) {
  BigInt dot = 0;
  for (std::size_t i = 0; i < v.size(); ++i) dot += BigInt(c.coeffs[i]) * v[i];
  return dot == c.rhs;
}

std::vector<std::size_t> tight_indices(const CayleyPolytope& p, const IntVector& v) {
  if (v.size() != p.dim()) throw NotAVertex("point has the wrong dimension");
  if (!p.constraints.contains(v)) throw NotAVertex("point lies outside the polytope");
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < p.constraints.constraints.size(); ++i)
    if (is_tight(p.constraints.constraints[i], v)) tight.push_back(i);
  if (tight.size() != p.dim()) throw NotAVertex("point is not a simple vertex");
  return tight;
}

}  // namespace

std::vector<IntVector> tight_normals(const CayleyPolytope& p, const IntVector& v) {
  std::vector<IntVector> rows;
  for (std::size_t i : tight_indices(p, v)) rows.push_back(inward_normal(p.constraints.constraints[i]));
  return rows;
}

VertexTangentCone tangent_cone(const CayleyPolytope& p, const IntVector& v) {
  VertexTangentCone out;
  out.vertex = v;
  out.tight = tight_indices(p, v);
  HalfspaceCone h = make_halfspace_cone(tight_normals(p, v), std::vector<bool>(p.dim(), false));
  h.apex = v;
  try {
    out.cone = h_to_v(h);
  } catch (const SingularMatrix&) {
    throw NotAVertex("tight constraints are dependent");
  }
  return out;
}

RationalGF brion_sum(const CayleyPolytope& p) {
  RationalGF sum(p.dim());
  for (const IntVector& v : p.vertices) {
    const VertexTangentCone t = tangent_cone(p, v);
    if (!is_unimodular(t.cone)) throw NotUnimodularTangentCone("tangent cone is not unimodular");
    sum = sum + cone_gf(t.cone);
  }
  return sum;
}

VerificationReport brion_verify(const CayleyPolytope& p, int points, std::uint64_t seed, bool inject_fault) {
  VerificationReport report;
  report.id = "brion";
  report.params = {{"j", p.j}};
  report.method = Method::RandomPoints;
  const MultiPolynomial lattice = to_polynomial(enumerate(p.constraints, std::nullopt));
  RationalGF polynomial(p.dim());
  polynomial.add_term({lattice, {}});
  Settings settings;
  settings.points = points;
  settings.seed = seed;
  settings.inject_fault = inject_fault;
  compare_at_random_points(brion_sum(p), polynomial, settings, report);
  return report;
}

Substitution last_variable_specialization(std::size_t dim) {
  Substitution s{1, std::vector<ExponentVector>(dim, ExponentVector{0})};
  s.images.back() = {1};
  return s;
}

VerificationReport brion_diagonal_check(const CayleyPolytope& p, bool inject_fault) {
  VerificationReport report;
  report.id = "brion-diagonal";
  report.params = {{"j", p.j}};
  report.method = Method::Series;
  const RationalGF q_sum = orient_denominators(specialize(brion_sum(p), Substitution::diagonal(p.dim())));
  const PointSet pts = enumerate(p.constraints, std::nullopt);
  int degree = 0;
  for (const IntVector& x : pts.points) degree = std::max(degree, static_cast<int>(total_degree(x)));
  const int order = degree + 10;
  Settings settings;
  settings.inject_fault = inject_fault;
  compare_series(to_q_series(pts, order), expand(q_sum, order), settings, report);
  return report;
}

}  // namespace polypart

#pragma once

#include <cstdint>
#include <vector>

#include "polypart/cone.hpp"
#include "polypart/families.hpp"
#include "polypart/verification.hpp"

namespace polypart {

struct VertexTangentCone {
  IntVector vertex;
  GeneratorCone cone;             // apex = vertex, all rays closed
  std::vector<std::size_t> tight;  // constraint indices tight at the vertex
};

/// Tangent cone from the constraints tight at v: the edge directions are the
/// columns of the inverse of the tight inward-normal matrix.
/// Throws NotAVertex unless exactly dim() constraints are tight and
/// independent at a feasible v.
VertexTangentCone tangent_cone(const CayleyPolytope& p, const IntVector& v);

/// Inward normal matrix of the constraints tight at v, in constraint order.
std::vector<IntVector> tight_normals(const CayleyPolytope& p, const IntVector& v);

/// One simple term z^v / prod (1 - z^{edge}) per vertex.
RationalGF brion_sum(const CayleyPolytope& p);

/// Brion sum against the oracle polynomial at seeded random points.
VerificationReport brion_verify(const CayleyPolytope& p, int points, std::uint64_t seed,
                                bool inject_fault = false);

/// z -> (1, ..., 1, q).
Substitution last_variable_specialization(std::size_t dim);

/// Specializes every Brion term to z -> (q, ..., q), flips negative
/// denominators, expands in q and compares with the oracle's q-polynomial
/// (including a ten-coefficient zero tail).
VerificationReport brion_diagonal_check(const CayleyPolytope& p, bool inject_fault = false);

}  // namespace polypart

#pragma once

#include <vector>

#include "polypart/exactmath.hpp"
#include "polypart/genfun.hpp"

namespace polypart {

/// { x : rows[i] . (x - apex) >= 0 }, with row i strict (> 0) when strict[i].
struct HalfspaceCone {
  std::vector<IntVector> rows;
  std::vector<bool> strict;
  IntVector apex;

  std::size_t dim() const { return rows.size(); }
  friend bool operator==(const HalfspaceCone&, const HalfspaceCone&) = default;
};

/// apex + sum_i y_i rays[i], with y_i > 0 for open rays and y_i >= 0 otherwise.
struct GeneratorCone {
  std::vector<IntVector> rays;
  std::vector<bool> open;
  IntVector apex;

  std::size_t dim() const { return rays.size(); }
  friend bool operator==(const GeneratorCone&, const GeneratorCone&) = default;
};

HalfspaceCone make_halfspace_cone(std::vector<IntVector> rows, std::vector<bool> strict);
GeneratorCone make_generator_cone(std::vector<IntVector> rays, std::vector<bool> open);

/// Columns of the ray matrix are the rays.
RatMatrix ray_matrix(const GeneratorCone& g);

/// Generators are the columns of rows^{-1}, scaled to primitive integer
/// vectors; ray i is open iff row i is strict. Throws SingularMatrix.
GeneratorCone h_to_v(const HalfspaceCone& h);

/// Rows of rays^{-1}, scaled to primitive integer vectors.
HalfspaceCone v_to_h(const GeneratorCone& g);

/// Rays made primitive (positive rescaling only).
GeneratorCone normalized(const GeneratorCone& g);

bool is_unimodular(const GeneratorCone& g);

/// z^{apex + sum of open rays} / prod_i (1 - z^{ray_i}). Throws NotUnimodular.
RationalGF cone_gf(const GeneratorCone& g);

bool contains(const HalfspaceCone& h, const IntVector& x);
/// Solves x - apex = B y exactly and checks the sign pattern of y.
bool contains(const GeneratorCone& g, const IntVector& x);

}  // namespace polypart

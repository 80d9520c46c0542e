#include "polypart/cone.hpp"

namespace polypart {

namespace {

void check_square(std::size_t n, const std::vector<IntVector>& vectors, const char* what) {
  for (const IntVector& v : vectors)
    if (v.size() != n) throw DimensionMismatch(std::string(what) + " must form a square matrix");
}

IntVector shifted(const IntVector& x, const IntVector& apex) {
  if (x.size() != apex.size()) throw DimensionMismatch("point dimension");
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - apex[i];
  return out;
}

}  // namespace

HalfspaceCone make_halfspace_cone(std::vector<IntVector> rows, std::vector<bool> strict) {
  const std::size_t n = rows.size();
  check_square(n, rows, "constraint rows");
  if (strict.size() != n) throw DimensionMismatch("one strictness flag per row");
  return {std::move(rows), std::move(strict), IntVector(n, 0)};
}

GeneratorCone make_generator_cone(std::vector<IntVector> rays, std::vector<bool> open) {
  const std::size_t n = rays.size();
  check_square(n, rays, "rays");
  if (open.size() != n) throw DimensionMismatch("one openness flag per ray");
  return {std::move(rays), std::move(open), IntVector(n, 0)};
}

RatMatrix ray_matrix(const GeneratorCone& g) { return RatMatrix::from_columns(g.rays); }

GeneratorCone h_to_v(const HalfspaceCone& h) {
  check_square(h.dim(), h.rows, "constraint rows");
  const RatMatrix inv = mat_inverse(RatMatrix::from_rows(h.rows));
  GeneratorCone g;
  g.apex = h.apex.empty() ? IntVector(h.dim(), 0) : h.apex;
  for (std::size_t c = 0; c < h.dim(); ++c) {
    // rows . column_c = e_c, so a positive multiple keeps the y_c >= 0 reading.
    g.rays.push_back(clear_denominators(inv.column(c)));
    g.open.push_back(h.strict[c]);
  }
  return g;
}

HalfspaceCone v_to_h(const GeneratorCone& g) {
  check_square(g.dim(), g.rays, "rays");
  const RatMatrix inv = mat_inverse(ray_matrix(g));
  HalfspaceCone h;
  h.apex = g.apex.empty() ? IntVector(g.dim(), 0) : g.apex;
  for (std::size_t r = 0; r < g.dim(); ++r) {
    h.rows.push_back(clear_denominators(inv.row(r)));
    h.strict.push_back(g.open[r]);
  }
  return h;
}

GeneratorCone normalized(const GeneratorCone& g) {
  GeneratorCone out = g;
  for (IntVector& r : out.rays) r = primitive(r);
  return out;
}

bool is_unimodular(const GeneratorCone& g) {
  const BigRat det = mat_det(ray_matrix(g));
  return det == 1 || det == -1;
}

RationalGF cone_gf(const GeneratorCone& g) {
  if (!is_unimodular(g)) throw NotUnimodular("cone generators are not a lattice basis");
  const std::size_t n = g.dim();
  ExponentVector num = g.apex.empty() ? ExponentVector(n, 0) : g.apex;
  for (std::size_t i = 0; i < n; ++i)
    if (g.open[i])
      for (std::size_t k = 0; k < n; ++k) num[k] += g.rays[i][k];
  RationalGF out(n);
  out.add_term({MultiPolynomial::monomial(num), g.rays});
  return out;
}

bool contains(const HalfspaceCone& h, const IntVector& x) {
  const IntVector v = shifted(x, h.apex.empty() ? IntVector(x.size(), 0) : h.apex);
  for (std::size_t r = 0; r < h.dim(); ++r) {
    BigInt dot = 0;
    for (std::size_t c = 0; c < v.size(); ++c) dot += BigInt(h.rows[r][c]) * v[c];
    if (h.strict[r] ? dot <= 0 : dot < 0) return false;
  }
  return true;
}

bool contains(const GeneratorCone& g, const IntVector& x) {
  const IntVector v = shifted(x, g.apex.empty() ? IntVector(x.size(), 0) : g.apex);
  const RatMatrix inv = mat_inverse(ray_matrix(g));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    BigRat y = 0;
    for (std::size_t c = 0; c < v.size(); ++c) y += inv(i, c) * v[c];
    if (g.open[i] ? y <= 0 : y < 0) return false;
  }
  return true;
}

}  // namespace polypart

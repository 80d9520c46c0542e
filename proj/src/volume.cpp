#include "polypart/volume.hpp"

#include <algorithm>
#include <numeric>

#include "polypart/families.hpp"
#include "polypart/oracle.hpp"

namespace polypart {

UniPoly::UniPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(BigRat c) { return UniPoly({std::move(c)}); }

UniPoly UniPoly::linear(BigRat a, BigRat b) { return UniPoly({std::move(b), std::move(a)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRat UniPoly::operator()(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<BigRat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<BigRat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return UniPoly();
  std::vector<BigRat> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[i + k] += a.coeffs_[i] * b.coeffs_[k];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

UniPoly UniPoly::antiderivative() const {
  std::vector<BigRat> c(coeffs_.size() + 1, BigRat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i] / BigRat(static_cast<long>(i + 1));
  return UniPoly(std::move(c));
}

BigRat cayley_volume(int j) {
  if (j < 2) throw BadParams("cayley volume needs j >= 2");
  const UniPoly upper = UniPoly::linear(2, 0);  // x -> 2x
  UniPoly integrand = UniPoly::constant(1);
  // Coordinates j-1 down to 2: integrate x_i over [1, 2 x_{i-1}].
  for (int i = j - 1; i >= 2; --i) {
    const UniPoly anti = integrand.antiderivative();
    integrand = anti.compose(upper) - UniPoly::constant(anti(1));
  }
  const UniPoly anti = integrand.antiderivative();
  return anti(2) - anti(1);
}

BigInt normalized_volume(int j) {
  const BigRat v = cayley_volume(j) * BigRat(factorial(static_cast<unsigned>(j - 1)));
  if (boost::multiprecision::denominator(v) != 1)
    throw NonIntegerNormalizedVolume("normalized volume " + to_string(v) + " is not an integer");
  return boost::multiprecision::numerator(v);
}

BigInt normalized_volume_by_simplices(int j) {
  if (j < 2 || j > 10) throw BadParams("simplex decomposition needs 2 <= j <= 10");
  const auto d = static_cast<std::size_t>(j - 1);
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  BigInt total = 0;
  do {
    std::vector<bool> high(d, false);
    const IntVector base = cayley_vertex(high);
    RatMatrix edges(d, d);
    for (std::size_t step = 0; step < d; ++step) {
      high[order[step]] = true;
      const IntVector v = cayley_vertex(high);
      for (std::size_t c = 0; c < d; ++c) edges(step, c) = v[c] - base[c];
    }
    const BigRat det = mat_det(edges);
    total += boost::multiprecision::numerator(det < 0 ? BigRat(-det) : det);
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

std::vector<ConjectureRow> conjecture_report(int j_max) {
  if (j_max < 2) throw BadParams("conjecture report needs jmax >= 2");
  std::vector<ConjectureRow> rows;
  for (int j = 2; j <= j_max; ++j) {
    ConjectureRow row;
    row.j = j;
    row.volume = normalized_volume(j);
    row.graphs_on_j_minus_1 = connected_graph_count(j - 1);
    row.graphs_on_j = connected_graph_count(j);
    row.matches_j_minus_1 = row.volume == row.graphs_on_j_minus_1;
    row.matches_j = row.volume == row.graphs_on_j;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace polypart

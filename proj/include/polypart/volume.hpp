#pragma once

#include <vector>

#include "polypart/exactmath.hpp"

namespace polypart {

/// Dense univariate polynomial over Q; trailing zero coefficients stripped.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRat> coeffs);
  static UniPoly constant(BigRat c);
  /// a x + b
  static UniPoly linear(BigRat a, BigRat b);

  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  BigRat operator()(const BigRat& x) const;
  /// p(inner(x))
  UniPoly compose(const UniPoly& inner) const;
  /// Antiderivative with zero constant term.
  UniPoly antiderivative() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

/// Euclidean volume of C_j by integrating the innermost coordinate first:
/// V(x_{i-1}) = integral_1^{2 x_{i-1}} V(x_i) dx_i, then integral_1^2 dx_1.
BigRat cayley_volume(int j);

/// (j-1)! cayley_volume(j); throws NonIntegerNormalizedVolume if that is not
/// an integer.
BigInt normalized_volume(int j);

/// Sum of |det| over the (j-1)! staircase simplices of the combinatorial
/// cube (vertex chain low...low -> high...high, one coordinate flipped at a
/// time in permutation order).
BigInt normalized_volume_by_simplices(int j);

struct ConjectureRow {
  int j = 0;
  BigInt volume;             // normalized
  BigInt graphs_on_j_minus_1;
  BigInt graphs_on_j;
  bool matches_j_minus_1 = false;
  bool matches_j = false;
};

std::vector<ConjectureRow> conjecture_report(int j_max);

}  // namespace polypart

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "polypart/exactmath.hpp"

namespace polypart {

/// Exponent of a Laurent monomial z^e. Entries may be negative.
using ExponentVector = std::vector<std::int64_t>;

std::int64_t total_degree(const ExponentVector& e);

/// Monomial change of variables: old variable i maps to the monomial with
/// exponent images[i] in `target_nvars` new variables. Acts linearly on
/// exponent vectors.
struct Substitution {
  std::size_t target_nvars = 0;
  std::vector<ExponentVector> images;

  static Substitution identity(std::size_t nvars);
  /// Every variable goes to the single new variable q.
  static Substitution diagonal(std::size_t nvars);

  std::size_t source_nvars() const { return images.size(); }
  ExponentVector apply(const ExponentVector& e) const;
};

/// Integer-coefficient Laurent polynomial kept in canonical map form; zero
/// coefficients are never stored, so equality is structural.
class MultiPolynomial {
 public:
  using TermMap = std::map<ExponentVector, BigInt>;

  explicit MultiPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPolynomial monomial(ExponentVector e, BigInt coeff = 1);
  static MultiPolynomial constant(std::size_t nvars, BigInt coeff);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const ExponentVector& e) const;

  void add_term(const ExponentVector& e, const BigInt& coeff);

  MultiPolynomial substitute(const Substitution& s) const;
  BigRat evaluate(const std::vector<BigRat>& point) const;

  MultiPolynomial& operator+=(const MultiPolynomial& o);
  MultiPolynomial& operator-=(const MultiPolynomial& o);
  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
  MultiPolynomial operator-() const;
  friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// numerator / prod_d (1 - z^d)
struct SimpleTerm {
  MultiPolynomial numerator;
  std::vector<ExponentVector> denominator;

  friend bool operator==(const SimpleTerm&, const SimpleTerm&) = default;
};

/// A formal sum of simple terms. Sums are kept as term lists; nothing is
/// brought over a common denominator.
class RationalGF {
 public:
  explicit RationalGF(std::size_t nvars = 0) : nvars_(nvars) {}
  RationalGF(std::size_t nvars, std::vector<SimpleTerm> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<SimpleTerm>& terms() const { return terms_; }
  void add_term(SimpleTerm t);

  RationalGF operator-() const;

 private:
  std::size_t nvars_;
  std::vector<SimpleTerm> terms_;
};

RationalGF gf_add(const RationalGF& a, const RationalGF& b);
RationalGF gf_sub(const RationalGF& a, const RationalGF& b);
inline RationalGF operator+(const RationalGF& a, const RationalGF& b) { return gf_add(a, b); }
inline RationalGF operator-(const RationalGF& a, const RationalGF& b) { return gf_sub(a, b); }

/// Power series in `nvars` variables truncated at total degree `order`.
/// Stored exponents are componentwise >= 0 with degree <= order.
class TruncatedSeries {
 public:
  using TermMap = std::map<ExponentVector, BigInt>;

  TruncatedSeries(std::size_t nvars, int order) : nvars_(nvars), order_(order) {}

  std::size_t nvars() const { return nvars_; }
  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }

  BigInt coefficient(const ExponentVector& e) const;
  /// Adds c z^e; terms above the truncation order are dropped.
  void add(const ExponentVector& e, const BigInt& c);

  TruncatedSeries truncated(int order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Coefficient of q^k for a univariate series.
  BigInt operator[](std::int64_t k) const { return coefficient({k}); }

 private:
  std::size_t nvars_;
  int order_;
  TermMap terms_;
};

TruncatedSeries to_series(const MultiPolynomial& p, int order);

/// Expansion through total degree `order`, each 1/(1 - z^d) read as
/// sum_{i>=0} z^{i d}. Requires every d >= 0 componentwise and nonzero.
/// Simple terms are expanded concurrently and summed in term order.
TruncatedSeries expand(const RationalGF& g, int order);

RationalGF specialize(const RationalGF& g, const Substitution& s);

/// Rewrites 1/(1 - z^d) with d <= 0 as -z^{-d}/(1 - z^{-d}).
RationalGF orient_denominators(const RationalGF& g);

BigRat evaluate(const RationalGF& g, const std::vector<BigRat>& point);

/// True when evaluate(g, point) would throw PoleAtPoint.
bool has_pole_at(const RationalGF& g, const std::vector<BigRat>& point);

/// evaluate() at many points, in parallel; results in input order.
std::vector<BigRat> evaluate_at(const RationalGF& g, const std::vector<std::vector<BigRat>>& points);

/// Equality on the common truncation order.
bool series_eq(const TruncatedSeries& a, const TruncatedSeries& b);
/// First exponent (lexicographic) where the two series differ up to the
/// common order.
std::optional<ExponentVector> first_difference(const TruncatedSeries& a, const TruncatedSeries& b);
BigInt coefficient(const TruncatedSeries& a, const ExponentVector& e);

/// sum of c p^e over the stored terms.
BigRat partial_sum_at(const TruncatedSeries& s, const std::vector<BigRat>& point);

/// Upper bound on |g(p) - partial_sum_at(expand(g, order), p)| valid for all
/// points with max |p_i| <= radius < 1, from the univariate majorant
/// sum |num|(t) / prod (1 - t^deg d) evaluated at t = radius.
BigRat tail_bound(const RationalGF& g, int order, const BigRat& radius);

/// Point with coordinates num/den, num and den uniform in [2, 10^6].
std::vector<BigRat> random_point(std::mt19937_64& rng, std::size_t nvars);

namespace serial {
TruncatedSeries expand(const RationalGF& g, int order);
std::vector<BigRat> evaluate_at(const RationalGF& g, const std::vector<std::vector<BigRat>>& points);
}  // namespace serial

}  // namespace polypart

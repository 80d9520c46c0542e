#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "polypart/errors.hpp"

namespace polypart {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

/// Integer vectors used for rays, constraint rows and lattice points.
using IntVector = std::vector<std::int64_t>;

/// Dense rows x cols matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<IntVector>& rows);
  static RatMatrix from_columns(const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigRat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigRat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<BigRat> row(std::size_t r) const;
  std::vector<BigRat> column(std::size_t c) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRat> data_;
};

/// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrix.
RatMatrix mat_inverse(const RatMatrix& m);

BigRat mat_det(const RatMatrix& m);

/// C(n, k); zero when k > n. Throws NegativeArgument for negative input.
BigInt binomial(const BigInt& n, const BigInt& k);
std::int64_t binomial_i64(std::int64_t n, std::int64_t k);

BigInt factorial(unsigned n);

/// v divided by the gcd of its entries; signs are kept. Throws ZeroVector.
IntVector primitive(const IntVector& v);

/// Smallest positive integer multiple of a rational vector, made primitive.
IntVector clear_denominators(const std::vector<BigRat>& v);

std::int64_t to_i64(const BigInt& x);

std::string to_string(const BigInt& x);
std::string to_string(const BigRat& x);

/// Parses "p" or "p/q".
BigRat parse_rational(const std::string& s);

}  // namespace polypart

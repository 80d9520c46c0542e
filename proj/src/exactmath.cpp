#include "polypart/exactmath.hpp"

#include <limits>
#include <numeric>
#include <utility>

namespace polypart {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigRat(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<IntVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<IntVector>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<BigRat> RatMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<BigRat> RatMatrix::column(std::size_t c) const {
  std::vector<BigRat> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigRat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

RatMatrix mat_inverse(const RatMatrix& m) {
  if (!m.square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix work = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const BigRat p = work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      const BigRat f = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

BigRat mat_det(const RatMatrix& m) {
  if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix work = m;
  BigRat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(work(pivot, c), work(col, c));
      det = -det;
    }
    det *= work(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work(r, col) == 0) continue;
      const BigRat f = work(r, col) / work(col, col);
      for (std::size_t c = col; c < n; ++c) work(r, c) -= f * work(col, c);
    }
  }
  return det;
}

BigInt binomial(const BigInt& n, const BigInt& k) {
  if (n < 0 || k < 0) throw NegativeArgument("binomial of a negative argument");
  if (k > n) return 0;
  BigInt kk = (k > n - k) ? BigInt(n - k) : k;
  BigInt result = 1;
  for (BigInt i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;
  }
  return result;
}

std::int64_t binomial_i64(std::int64_t n, std::int64_t k) {
  return to_i64(binomial(BigInt(n), BigInt(k)));
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

IntVector primitive(const IntVector& v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x);
  if (g == 0) throw ZeroVector("primitive of the zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVector clear_denominators(const std::vector<BigRat>& v) {
  BigInt lcm = 1;
  for (const BigRat& x : v) {
    BigInt d = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  IntVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigRat s = v[i] * BigRat(lcm);
    scaled[i] = to_i64(boost::multiprecision::numerator(s));
  }
  return primitive(scaled);
}

std::int64_t to_i64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
  return x.convert_to<std::int64_t>();
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const BigRat& x) {
  if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

BigRat parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return BigRat(BigInt(s));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in " + s);
  return BigRat(BigInt(s.substr(0, slash)), den);
}

}  // namespace polypart

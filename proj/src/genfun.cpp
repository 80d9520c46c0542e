#include "polypart/genfun.hpp"

#include <algorithm>
#include <string>

namespace polypart {

std::int64_t total_degree(const ExponentVector& e) {
  std::int64_t d = 0;
  for (std::int64_t x : e) d += x;
  return d;
}

namespace {

ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_zero_vector(const ExponentVector& e) {
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

BigRat power(const BigRat& base, std::int64_t exp) {
  if (exp == 0) return 1;
  if (base == 0) {
    if (exp < 0) throw PoleAtPoint("negative power of zero");
    return 0;
  }
  BigRat b = exp > 0 ? base : BigRat(1) / base;
  auto e = static_cast<std::uint64_t>(exp > 0 ? exp : -exp);
  BigRat out = 1;
  while (e) {
    if (e & 1U) out *= b;
    b *= b;
    e >>= 1U;
  }
  return out;
}

BigRat monomial_value(const ExponentVector& e, const std::vector<BigRat>& point) {
  BigRat v = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) v *= power(point[i], e[i]);
  return v;
}

void check_point(std::size_t nvars, const std::vector<BigRat>& point) {
  if (point.size() != nvars) throw DimensionMismatch("evaluation point has wrong dimension");
}

void check_expandable(const RationalGF& g) {
  for (const SimpleTerm& t : g.terms()) {
    for (const ExponentVector& d : t.denominator) {
      if (is_zero_vector(d) || std::any_of(d.begin(), d.end(), [](std::int64_t x) { return x < 0; }))
        throw NonExpandableDenominator("denominator factor is zero or has a negative entry");
    }
    for (const auto& [e, c] : t.numerator.terms())
      if (std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x < 0; }))
        throw NegativeExponent("numerator monomial has a negative exponent");
  }
}

// s / (1 - z^d), truncated at s.order().
TruncatedSeries divide_by_geometric(const TruncatedSeries& s, const ExponentVector& d) {
  const std::int64_t step = total_degree(d);
  TruncatedSeries out(s.nvars(), s.order());
  for (const auto& [e, c] : s.terms()) {
    ExponentVector cur = e;
    for (std::int64_t deg = total_degree(e); deg <= s.order(); deg += step) {
      out.add(cur, c);
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += d[i];
    }
  }
  return out;
}

TruncatedSeries expand_term(const SimpleTerm& t, std::size_t nvars, int order) {
  TruncatedSeries s = t.numerator.nvars() == nvars ? to_series(t.numerator, order) : TruncatedSeries(nvars, order);
  for (const ExponentVector& d : t.denominator) s = divide_by_geometric(s, d);
  return s;
}

BigRat evaluate_term(const SimpleTerm& t, const std::vector<BigRat>& point) {
  BigRat den = 1;
  for (const ExponentVector& d : t.denominator) {
    BigRat f = 1 - monomial_value(d, point);
    if (f == 0) throw PoleAtPoint("denominator factor vanishes at the point");
    den *= f;
  }
  return t.numerator.evaluate(point) / den;
}

}  // namespace

// ---------------------------------------------------------------- Substitution

Substitution Substitution::identity(std::size_t nvars) {
  Substitution s{nvars, {}};
  for (std::size_t i = 0; i < nvars; ++i) {
    ExponentVector e(nvars, 0);
    e[i] = 1;
    s.images.push_back(std::move(e));
  }
  return s;
}

Substitution Substitution::diagonal(std::size_t nvars) {
  return Substitution{1, std::vector<ExponentVector>(nvars, ExponentVector{1})};
}

ExponentVector Substitution::apply(const ExponentVector& e) const {
  if (e.size() != images.size()) throw DimensionMismatch("substitution arity");
  ExponentVector out(target_nvars, 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    for (std::size_t k = 0; k < target_nvars; ++k) out[k] += e[i] * images[i][k];
  }
  return out;
}

// ------------------------------------------------------------- MultiPolynomial

MultiPolynomial MultiPolynomial::monomial(ExponentVector e, BigInt coeff) {
  MultiPolynomial p(e.size());
  p.add_term(e, coeff);
  return p;
}

MultiPolynomial MultiPolynomial::constant(std::size_t nvars, BigInt coeff) {
  return monomial(ExponentVector(nvars, 0), std::move(coeff));
}

BigInt MultiPolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPolynomial::add_term(const ExponentVector& e, const BigInt& coeff) {
  if (e.size() != nvars_) throw DimensionMismatch("monomial arity");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPolynomial MultiPolynomial::substitute(const Substitution& s) const {
  MultiPolynomial out(s.target_nvars);
  for (const auto& [e, c] : terms_) out.add_term(s.apply(e), c);
  return out;
}

BigRat MultiPolynomial::evaluate(const std::vector<BigRat>& point) const {
  check_point(nvars_, point);
  BigRat sum = 0;
  for (const auto& [e, c] : terms_) sum += BigRat(c) * monomial_value(e, point);
  return sum;
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("polynomial arity");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("polynomial arity");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial arity");
  MultiPolynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  return out;
}

MultiPolynomial MultiPolynomial::operator-() const {
  MultiPolynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

// ------------------------------------------------------------------ RationalGF

RationalGF::RationalGF(std::size_t nvars, std::vector<SimpleTerm> terms) : nvars_(nvars) {
  for (SimpleTerm& t : terms) add_term(std::move(t));
}

void RationalGF::add_term(SimpleTerm t) {
  if (t.numerator.nvars() != nvars_) throw DimensionMismatch("term numerator arity");
  for (const ExponentVector& d : t.denominator) {
    if (d.size() != nvars_) throw DimensionMismatch("denominator factor arity");
    if (is_zero_vector(d)) throw PoleCreated("denominator factor 1 - z^0");
  }
  terms_.push_back(std::move(t));
}

RationalGF RationalGF::operator-() const {
  RationalGF out(nvars_);
  for (const SimpleTerm& t : terms_) out.terms_.push_back({-t.numerator, t.denominator});
  return out;
}

RationalGF gf_add(const RationalGF& a, const RationalGF& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("gf_add arity");
  RationalGF out = a;
  for (const SimpleTerm& t : b.terms()) out.add_term(t);
  return out;
}

RationalGF gf_sub(const RationalGF& a, const RationalGF& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("gf_sub arity");
  return gf_add(a, -b);
}

// ------------------------------------------------------------- TruncatedSeries

BigInt TruncatedSeries::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TruncatedSeries::add(const ExponentVector& e, const BigInt& c) {
  if (e.size() != nvars_) throw DimensionMismatch("series exponent arity");
  if (std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x < 0; }))
    throw NegativeExponent("truncated series exponents must be nonnegative");
  if (c == 0 || total_degree(e) > order_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries out(nvars_, std::min(order, order_));
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= out.order_) out.terms_.emplace(e, c);
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("series arity");
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("series arity");
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("series arity");
  TruncatedSeries out(a.nvars_, std::min(a.order_, b.order_));
  for (const auto& [ea, ca] : a.terms_) {
    const std::int64_t da = total_degree(ea);
    if (da > out.order_) continue;
    for (const auto& [eb, cb] : b.terms_)
      if (da + total_degree(eb) <= out.order_) out.add(add_exponents(ea, eb), ca * cb);
  }
  return out;
}

TruncatedSeries to_series(const MultiPolynomial& p, int order) {
  TruncatedSeries s(p.nvars(), order);
  for (const auto& [e, c] : p.terms()) s.add(e, c);
  return s;
}

// ------------------------------------------------------------------- kernels

namespace serial {

TruncatedSeries expand(const RationalGF& g, int order) {
  check_expandable(g);
  TruncatedSeries sum(g.nvars(), order);
  for (const SimpleTerm& t : g.terms()) sum += expand_term(t, g.nvars(), order);
  return sum;
}

std::vector<BigRat> evaluate_at(const RationalGF& g, const std::vector<std::vector<BigRat>>& points) {
  std::vector<BigRat> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(evaluate(g, p));
  return out;
}

}  // namespace serial

TruncatedSeries expand(const RationalGF& g, int order) {
  check_expandable(g);
  const auto& terms = g.terms();
  const auto count = static_cast<std::ptrdiff_t>(terms.size());
  std::vector<TruncatedSeries> parts(terms.size(), TruncatedSeries(g.nvars(), order));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    parts[static_cast<std::size_t>(i)] = expand_term(terms[static_cast<std::size_t>(i)], g.nvars(), order);
  TruncatedSeries sum(g.nvars(), order);
  for (const TruncatedSeries& p : parts) sum += p;
  return sum;
}

std::vector<BigRat> evaluate_at(const RationalGF& g, const std::vector<std::vector<BigRat>>& points) {
  for (const auto& p : points) check_point(g.nvars(), p);
  const auto count = static_cast<std::ptrdiff_t>(points.size());
  std::vector<BigRat> out(points.size());
  std::vector<char> pole(points.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = evaluate(g, points[k]);
    } catch (const PoleAtPoint&) {
      pole[k] = 1;
    }
  }
  for (std::size_t k = 0; k < pole.size(); ++k)
    if (pole[k]) throw PoleAtPoint("pole at point #" + std::to_string(k));
  return out;
}

// ------------------------------------------------------------ transformations

RationalGF specialize(const RationalGF& g, const Substitution& s) {
  if (s.source_nvars() != g.nvars()) throw DimensionMismatch("substitution does not match variable count");
  RationalGF out(s.target_nvars);
  for (const SimpleTerm& t : g.terms()) {
    SimpleTerm image{t.numerator.substitute(s), {}};
    for (const ExponentVector& d : t.denominator) {
      ExponentVector e = s.apply(d);
      if (is_zero_vector(e)) throw PoleCreated("specialization sends a denominator factor to 1 - 1");
      image.denominator.push_back(std::move(e));
    }
    out.add_term(std::move(image));
  }
  return out;
}

RationalGF orient_denominators(const RationalGF& g) {
  RationalGF out(g.nvars());
  for (const SimpleTerm& t : g.terms()) {
    SimpleTerm flipped{t.numerator, {}};
    for (const ExponentVector& d : t.denominator) {
      const bool nonpositive = std::all_of(d.begin(), d.end(), [](std::int64_t x) { return x <= 0; });
      if (!nonpositive) {
        flipped.denominator.push_back(d);
        continue;
      }
      ExponentVector neg(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) neg[i] = -d[i];
      flipped.numerator = -(flipped.numerator * MultiPolynomial::monomial(neg));
      flipped.denominator.push_back(std::move(neg));
    }
    out.add_term(std::move(flipped));
  }
  return out;
}

BigRat evaluate(const RationalGF& g, const std::vector<BigRat>& point) {
  check_point(g.nvars(), point);
  BigRat sum = 0;
  for (const SimpleTerm& t : g.terms()) sum += evaluate_term(t, point);
  return sum;
}

bool has_pole_at(const RationalGF& g, const std::vector<BigRat>& point) {
  check_point(g.nvars(), point);
  try {
    for (const SimpleTerm& t : g.terms()) {
      for (const ExponentVector& d : t.denominator)
        if (monomial_value(d, point) == 1) return true;
      for (const auto& term : t.numerator.terms()) monomial_value(term.first, point);
    }
  } catch (const PoleAtPoint&) {
    return true;
  }
  return false;
}

// ------------------------------------------------------------------ queries

std::optional<ExponentVector> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("series arity");
  const int order = std::min(a.order(), b.order());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  auto skip = [order](auto& it, auto end) {
    while (it != end && total_degree(it->first) > order) ++it;
  };
  for (;;) {
    skip(ia, a.terms().end());
    skip(ib, b.terms().end());
    const bool ea = ia == a.terms().end();
    const bool eb = ib == b.terms().end();
    if (ea && eb) return std::nullopt;
    if (ea) return ib->first;
    if (eb) return ia->first;
    if (ia->first < ib->first) return ia->first;
    if (ib->first < ia->first) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
}

bool series_eq(const TruncatedSeries& a, const TruncatedSeries& b) { return !first_difference(a, b); }

BigInt coefficient(const TruncatedSeries& a, const ExponentVector& e) { return a.coefficient(e); }

BigRat partial_sum_at(const TruncatedSeries& s, const std::vector<BigRat>& point) {
  check_point(s.nvars(), point);
  BigRat sum = 0;
  for (const auto& [e, c] : s.terms()) sum += BigRat(c) * monomial_value(e, point);
  return sum;
}

BigRat tail_bound(const RationalGF& g, int order, const BigRat& radius) {
  check_expandable(g);
  if (radius <= 0 || radius >= 1) throw std::invalid_argument("tail_bound radius must lie in (0, 1)");
  RationalGF majorant(1);
  for (const SimpleTerm& t : g.terms()) {
    SimpleTerm m{MultiPolynomial(1), {}};
    for (const auto& [e, c] : t.numerator.terms()) m.numerator.add_term({total_degree(e)}, abs(c));
    for (const ExponentVector& d : t.denominator) m.denominator.push_back({total_degree(d)});
    majorant.add_term(std::move(m));
  }
  const std::vector<BigRat> at{radius};
  return evaluate(majorant, at) - partial_sum_at(serial::expand(majorant, order), at);
}

std::vector<BigRat> random_point(std::mt19937_64& rng, std::size_t nvars) {
  std::uniform_int_distribution<std::int64_t> dist(2, 1'000'000);
  std::vector<BigRat> p;
  p.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    const std::int64_t num = dist(rng);
    const std::int64_t den = dist(rng);
    p.emplace_back(BigInt(num), BigInt(den));
  }
  return p;
}

}  // namespace polypart

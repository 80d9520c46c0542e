#include "polypart/identities.hpp"

#include <algorithm>
#include <initializer_list>

#include "polypart/cone.hpp"
#include "polypart/families.hpp"
#include "polypart/oracle.hpp"

namespace polypart {

namespace {

struct IdName {
  IdentityId id;
  std::string_view name;
};

constexpr IdName kNames[] = {
    {IdentityId::HigherDiffQ, "higherdiff-q"},
    {IdentityId::HigherDiffFull, "higherdiff-full"},
    {IdentityId::NGonQ, "ngon-q"},
    {IdentityId::NGonFull, "ngon-full"},
    {IdentityId::HermiteQ, "hermite-q"},
    {IdentityId::HermiteFull, "hermite-full"},
    {IdentityId::CayleyPolynomialFormula, "cayley-formula"},
    {IdentityId::CayleyRecurrence, "cayley-recurrence"},
};

ExponentVector unit(std::size_t n, std::size_t i, std::int64_t scale = 1) {
  ExponentVector e(n, 0);
  e[i] = scale;
  return e;
}

MultiPolynomial q_power(std::int64_t k, BigInt c = 1) { return MultiPolynomial::monomial({k}, std::move(c)); }

// Pulls the named integer parameters, rejecting anything else.
std::vector<int> take_params(const Params& params, std::initializer_list<std::string_view> keys) {
  std::vector<int> out;
  for (std::string_view key : keys) {
    auto it = params.find(std::string(key));
    if (it == params.end()) throw BadParams("missing parameter '" + std::string(key) + "'");
    if (it->second < 0 || it->second > 10'000) throw BadParams("parameter '" + std::string(key) + "' out of range");
    out.push_back(static_cast<int>(it->second));
  }
  for (const auto& [k, v] : params)
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw BadParams("unexpected parameter '" + k + "'");
  return out;
}

TruncatedSeries univariate_expansion(const std::vector<std::int64_t>& factors, int order) {
  RationalGF g(1);
  std::vector<ExponentVector> den;
  for (std::int64_t d : factors) den.push_back({d});
  g.add_term({q_power(0), std::move(den)});
  return expand(g, order);
}

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const IdName& n : kNames)
    if (n.id == id) return n.name;
  return "unknown";
}

std::optional<IdentityId> parse_identity_id(std::string_view name) {
  for (const IdName& n : kNames)
    if (n.name == name) return n.id;
  return std::nullopt;
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const IdName& n : kNames) v.push_back(n.id);
    return v;
  }();
  return ids;
}

int default_order(IdentityId id) {
  switch (id) {
    case IdentityId::HigherDiffQ:
    case IdentityId::NGonQ:
    case IdentityId::HermiteQ:
      return 30;
    default:
      return 12;
  }
}

// ---------------------------------------------------------- higher differences

RationalGF rhs_higherdiff_full(int r, int n) {
  if (r < 1 || n < 1) throw BadParams("higherdiff needs r >= 1 and n >= 1");
  const auto dim = static_cast<std::size_t>(n);
  std::vector<ExponentVector> den;
  for (int j = 1; j <= n; ++j) {
    ExponentVector d(dim, 0);
    for (int i = 1; i <= j; ++i) d[static_cast<std::size_t>(i - 1)] = binomial_i64(r + j - i - 1, r - 1);
    den.push_back(std::move(d));
  }
  RationalGF g(dim);
  g.add_term({MultiPolynomial::constant(dim, 1), std::move(den)});
  return g;
}

TruncatedSeries rhs_higherdiff_q(int r, int order) {
  if (r < 1) throw BadParams("higherdiff needs r >= 1");
  std::vector<std::int64_t> parts;
  for (int j = 1;; ++j) {
    const std::int64_t part = binomial_i64(j + r - 1, r);
    if (part > order) break;
    parts.push_back(part);
  }
  return univariate_expansion(parts, order);
}

// ----------------------------------------------------------------------- n-gon

RationalGF ngon_full_in_Z(int n) {
  if (n < 3) throw BadParams("ngon needs n >= 3");
  const auto dim = static_cast<std::size_t>(n);
  const std::size_t last = dim - 1;
  RationalGF g(dim);

  std::vector<ExponentVector> first_den;
  for (std::size_t i = 0; i < dim; ++i) first_den.push_back(unit(dim, i));
  g.add_term({MultiPolynomial::monomial(unit(dim, 0)), std::move(first_den)});

  // Z_1 Z_n^{n-2} / ((1 - Z_n)(1 - Z_{n-1})(1 - Z_{n-2} Z_n) ... (1 - Z_1 Z_n^{n-2}))
  ExponentVector num = unit(dim, 0);
  num[last] += n - 2;
  std::vector<ExponentVector> second_den{unit(dim, last)};
  for (int m = n - 1; m >= 1; --m) {
    ExponentVector d = unit(dim, static_cast<std::size_t>(m - 1));
    d[last] += n - 1 - m;
    second_den.push_back(std::move(d));
  }
  g.add_term({-MultiPolynomial::monomial(num), std::move(second_den)});
  return g;
}

Substitution ngon_Z_to_z(int n) {
  const auto dim = static_cast<std::size_t>(n);
  Substitution s{dim, {}};
  for (std::size_t j = 0; j < dim; ++j) {
    ExponentVector e(dim, 0);
    for (std::size_t k = j; k < dim; ++k) e[k] = 1;
    s.images.push_back(std::move(e));
  }
  return s;
}

Substitution ngon_z_to_Z(int n) {
  const auto dim = static_cast<std::size_t>(n);
  Substitution s{dim, {}};
  for (std::size_t j = 0; j < dim; ++j) {
    ExponentVector e = unit(dim, j);
    if (j + 1 < dim) e[j + 1] = -1;
    s.images.push_back(std::move(e));
  }
  return s;
}

RationalGF rhs_ngon_full(int n) { return specialize(ngon_full_in_Z(n), ngon_Z_to_z(n)); }

RationalGF rhs_ngon_q(int n) {
  if (n < 3) throw BadParams("ngon needs n >= 3");
  RationalGF g(1);
  std::vector<ExponentVector> first;
  for (int i = 1; i <= n; ++i) first.push_back({i});
  g.add_term({q_power(n), std::move(first)});
  std::vector<ExponentVector> second{{1}};
  for (int m = 1; m <= n - 1; ++m) second.push_back({2 * m});
  g.add_term({q_power(2 * n - 2, -1), std::move(second)});
  return g;
}

// --------------------------------------------------------------------- Hermite

RationalGF rhs_hermite_full(int n) {
  if (n < 2) throw BadParams("hermite needs n >= 2");
  const auto dim = static_cast<std::size_t>(n);
  RationalGF g(dim);
  std::vector<ExponentVector> orthant;
  for (std::size_t i = 0; i < dim; ++i) orthant.push_back(unit(dim, i));
  g.add_term({MultiPolynomial::monomial(ExponentVector(dim, 1)), std::move(orthant)});
  for (std::size_t k = 0; k < dim; ++k) {
    ExponentVector num(dim, 1);
    num[k] = n;
    std::vector<ExponentVector> den{unit(dim, k)};
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == k) continue;
      ExponentVector d = unit(dim, k);
      d[j] = 1;
      den.push_back(std::move(d));
    }
    g.add_term({MultiPolynomial::monomial(num, -1), std::move(den)});
  }
  return g;
}

RationalGF rhs_hermite_q(int n) {
  if (n < 2) throw BadParams("hermite needs n >= 2");
  RationalGF g(1);
  g.add_term({q_power(n), std::vector<ExponentVector>(static_cast<std::size_t>(n), ExponentVector{1})});
  // -n q^{2n-1} (1-q)^{n-1}
  MultiPolynomial num(1);
  for (int i = 0; i <= n - 1; ++i) {
    BigInt c = BigInt(n) * binomial(BigInt(n - 1), BigInt(i));
    num.add_term({2 * n - 1 + i}, (i % 2 == 0) ? BigInt(-c) : c);
  }
  std::vector<ExponentVector> den(static_cast<std::size_t>(n), ExponentVector{1});
  for (int i = 0; i < n - 1; ++i) den.push_back({2});
  g.add_term({std::move(num), std::move(den)});
  return g;
}

// ---------------------------------------------------------------------- Cayley

BigInt cayley_b(int k) {
  if (k < 1 || k > 40) throw BadParams("cayley_b needs 1 <= k <= 40");
  const std::int64_t target = (std::int64_t{1} << k) - 1;
  std::vector<std::int64_t> factors{1};
  for (int m = 0; (std::int64_t{1} << m) <= target; ++m) factors.push_back(std::int64_t{1} << m);
  return univariate_expansion(factors, static_cast<int>(target))[target];
}

BigInt cayley_b_by_binary_partitions(int k) {
  if (k < 1 || k > 24) throw BadParams("cayley_b needs 1 <= k <= 24");
  const std::size_t top = (std::size_t{1} << k) - 1;
  std::vector<BigInt> bp(top + 1);
  bp[0] = 1;
  BigInt sum = 1;
  for (std::size_t i = 1; i <= top; ++i) {
    bp[i] = (i % 2 == 1) ? bp[i - 1] : BigInt(bp[i - 1] + bp[i / 2]);
    sum += bp[i];
  }
  return sum;
}

int cayley_formula_degree(int j) { return 1 << (j - 1); }

TruncatedSeries rhs_cayley_formula(int j) {
  if (j < 2 || j > 20) throw BadParams("cayley formula needs 2 <= j <= 20");
  const int order = cayley_formula_degree(j) + 10;
  auto binary_den = [](int count) {
    std::vector<ExponentVector> den;
    for (int m = 0; m < count; ++m) den.push_back({std::int64_t{1} << m});
    return den;
  };
  RationalGF g(1);
  for (int h = 1; h <= j - 2; ++h) {
    BigInt c = cayley_b(j - h - 1);
    if (h % 2 == 0) c = -c;  // (-1)^{h-1}
    g.add_term({q_power((std::int64_t{1} << h) - 1, c), binary_den(h)});
  }
  const std::int64_t top = std::int64_t{1} << (j - 1);
  const BigInt sign = (j % 2 == 0) ? 1 : -1;
  MultiPolynomial last = q_power(top - 1, sign);
  last.add_term({2 * top - 1}, -sign);
  g.add_term({std::move(last), binary_den(j - 1)});
  return expand(g, order);
}

MultiPolynomial cayley_polynomial(int j) {
  return to_polynomial(enumerate(cayley_polytope(j).constraints, std::nullopt));
}

VerificationReport cayley_recurrence_check(int j, const MultiPolynomial& f_j, const MultiPolynomial& f_prev,
                                           const Settings& settings) {
  if (j < 3) throw BadParams("cayley recurrence needs j >= 3");
  const auto d = static_cast<std::size_t>(j - 1);
  if (f_j.nvars() != d || f_prev.nvars() != d - 1) throw DimensionMismatch("cayley polynomial arity");
  VerificationReport report;
  report.id = std::string(to_string(IdentityId::CayleyRecurrence));
  report.params = {{"j", j}};
  report.method = Method::ExactPolynomial;

  Substitution lift{d, {}};
  Substitution stretched{d, {}};
  for (std::size_t i = 0; i + 1 < d; ++i) {
    lift.images.push_back(unit(d, i));
    ExponentVector e = unit(d, i);
    if (i + 2 == d) e[d - 1] = 2;  // z_{j-2} -> z_{j-2} z_{j-1}^2
    stretched.images.push_back(std::move(e));
  }
  const MultiPolynomial z_last = MultiPolynomial::monomial(unit(d, d - 1));
  const MultiPolynomial one = MultiPolynomial::constant(d, 1);
  const MultiPolynomial lhs = (one - z_last) * f_j;
  const MultiPolynomial rhs = z_last * (f_prev.substitute(lift) - f_prev.substitute(stretched));
  compare_polynomials(lhs, rhs, settings, report);
  return report;
}

VerificationReport cayley_recurrence_check(int j, const Settings& settings) {
  if (j < 3) throw BadParams("cayley recurrence needs j >= 3");
  return cayley_recurrence_check(j, cayley_polynomial(j), cayley_polynomial(j - 1), settings);
}

// ---------------------------------------------------------------------- driver

VerificationReport verify(IdentityId id, const Params& params, const Settings& settings) {
  VerificationReport report;
  report.id = std::string(to_string(id));
  report.params = params;
  const int order = settings.order.value_or(default_order(id));
  if (order < 0) throw BadParams("order must be nonnegative");

  switch (id) {
    case IdentityId::HigherDiffQ: {
      const int r = take_params(params, {"r"})[0];
      if (r < 1) throw BadParams("higherdiff needs r >= 1");
      // A partition of size <= order has at most `order` parts, so P_r^order
      // already contains every partition counted through q^order.
      const int n = std::max(order, 1);
      const PointSet pts = enumerate(higherdiff_constraints_all_t(r, n), order);
      report.method = Method::Series;
      compare_series(to_q_series(pts, order), rhs_higherdiff_q(r, order), settings, report);
      break;
    }
    case IdentityId::HigherDiffFull: {
      const auto p = take_params(params, {"r", "n"});
      const int r = p[0], n = p[1];
      if (r < 1 || n < 1) throw BadParams("higherdiff needs r >= 1 and n >= 1");
      const PointSet pts = enumerate(higherdiff_constraints_all_t(r, n), order);
      report.method = Method::Series;
      compare_series(to_series(pts, order), expand(rhs_higherdiff_full(r, n), order), settings, report);
      break;
    }
    case IdentityId::NGonQ: {
      const int n = take_params(params, {"n"})[0];
      if (n < 3) throw BadParams("ngon needs n >= 3");
      const PointSet pts = enumerate(ngon_constraints(n), order);
      report.method = Method::Series;
      compare_series(to_q_series(pts, order), expand(rhs_ngon_q(n), order), settings, report);
      break;
    }
    case IdentityId::NGonFull: {
      const int n = take_params(params, {"n"})[0];
      if (n < 3) throw BadParams("ngon needs n >= 3");
      const NGonCones cones = ngon_cones(n);
      report.method = Method::RandomPoints;
      compare_at_random_points(cone_gf(cones.outer) - cone_gf(cones.removed), rhs_ngon_full(n), settings, report);
      break;
    }
    case IdentityId::HermiteQ: {
      const int n = take_params(params, {"n"})[0];
      if (n < 2) throw BadParams("hermite needs n >= 2");
      const PointSet pts = enumerate(hermite_constraints(n), order);
      report.method = Method::Series;
      compare_series(to_q_series(pts, order), expand(rhs_hermite_q(n), order), settings, report);
      break;
    }
    case IdentityId::HermiteFull: {
      const int n = take_params(params, {"n"})[0];
      if (n < 2) throw BadParams("hermite needs n >= 2");
      const PointSet pts = enumerate(hermite_constraints(n), order);
      report.method = Method::Series;
      compare_series(to_series(pts, order), expand(rhs_hermite_full(n), order), settings, report);
      break;
    }
    case IdentityId::CayleyPolynomialFormula: {
      const int j = take_params(params, {"j"})[0];
      if (j < 2 || j > 12) throw BadParams("cayley formula check needs 2 <= j <= 12");
      const auto d = static_cast<std::size_t>(j - 1);
      // z -> (1, ..., 1, q)
      Substitution last_only{1, std::vector<ExponentVector>(d, ExponentVector{0})};
      last_only.images.back() = {1};
      const TruncatedSeries rhs = rhs_cayley_formula(j);
      const TruncatedSeries lhs = to_series(cayley_polynomial(j).substitute(last_only), rhs.order());
      report.method = Method::ExactPolynomial;
      // Series equality through degree 2^{j-1} + 10 includes the vanishing tail.
      compare_series(lhs, rhs, settings, report);
      break;
    }
    case IdentityId::CayleyRecurrence: {
      const int j = take_params(params, {"j"})[0];
      if (j < 3 || j > 12) throw BadParams("cayley recurrence check needs 3 <= j <= 12");
      report = cayley_recurrence_check(j, settings);
      break;
    }
  }
  return report;
}

RationalGF geometric_gf(const FamilySpec& spec) {
  if (const auto* h = std::get_if<HigherDiff>(&spec)) return cone_gf(higherdiff_cone(h->r, h->n));
  if (const auto* g = std::get_if<NGon>(&spec)) {
    const NGonCones cones = ngon_cones(g->n);
    return cone_gf(cones.outer) - cone_gf(cones.removed);
  }
  if (const auto* h = std::get_if<Hermite>(&spec)) {
    const HermiteCones cones = hermite_cones(h->n);
    RationalGF out = cone_gf(cones.orthant);
    for (const GeneratorCone& c : cones.excluded) out = out - cone_gf(c);
    return out;
  }
  throw BadParams("no cone decomposition for " + to_string(spec));
}

}  // namespace polypart

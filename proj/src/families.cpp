#include "polypart/families.hpp"

#include <charconv>
#include <set>

namespace polypart {

// ----------------------------------------------------------------- parsing

Params parse_params(std::string_view text) {
  Params out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw BadParams("expected key=value, got '" + std::string(item) + "'");
    std::string key(item.substr(0, eq));
    std::string_view value = item.substr(eq + 1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      throw BadParams("parameter '" + key + "' is not an integer");
    if (!out.emplace(key, v).second) throw BadParams("duplicate parameter '" + key + "'");
  }
  return out;
}

namespace {

int take(Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw BadParams("missing parameter '" + key + "'");
  const std::int64_t v = it->second;
  p.erase(it);
  if (v < -1'000'000 || v > 1'000'000) throw BadParams("parameter '" + key + "' out of range");
  return static_cast<int>(v);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw BadParams(what);
}

IntVector unit(std::size_t n, std::size_t i) {
  IntVector e(n, 0);
  e[i] = 1;
  return e;
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HigherDiff>) {
          require(s.r >= 1 && s.n >= 1, "higherdiff needs r >= 1 and n >= 1");
        } else if constexpr (std::is_same_v<T, NGon>) {
          require(s.n >= 3, "ngon needs n >= 3");
        } else if constexpr (std::is_same_v<T, Hermite>) {
          require(s.n >= 2, "hermite needs n >= 2");
        } else if constexpr (std::is_same_v<T, Cayley>) {
          require(s.j >= 2, "cayley needs j >= 2");
        } else {
          require(s.n >= 1 && s.k >= 2 && s.t >= 0, "hyperslice needs n >= 1, k >= 2, t >= 0");
        }
      },
      spec);
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  Params p = parse_params(colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1));
  FamilySpec spec;
  if (name == "higherdiff") {
    const int r = take(p, "r");
    spec = HigherDiff{r, take(p, "n")};
  } else if (name == "ngon") {
    spec = NGon{take(p, "n")};
  } else if (name == "hermite") {
    spec = Hermite{take(p, "n")};
  } else if (name == "cayley") {
    spec = Cayley{take(p, "j")};
  } else if (name == "hyperslice") {
    const int n = take(p, "n");
    const int k = take(p, "k");
    spec = HypersimplexSlice{n, k, take(p, "t")};
  } else {
    throw BadParams("unknown family '" + std::string(name) + "'");
  }
  if (!p.empty()) throw BadParams("unexpected parameter '" + p.begin()->first + "'");
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HigherDiff>)
          return "higherdiff:r=" + std::to_string(s.r) + ",n=" + std::to_string(s.n);
        else if constexpr (std::is_same_v<T, NGon>)
          return "ngon:n=" + std::to_string(s.n);
        else if constexpr (std::is_same_v<T, Hermite>)
          return "hermite:n=" + std::to_string(s.n);
        else if constexpr (std::is_same_v<T, Cayley>)
          return "cayley:j=" + std::to_string(s.j);
        else
          return "hyperslice:n=" + std::to_string(s.n) + ",k=" + std::to_string(s.k) + ",t=" + std::to_string(s.t);
      },
      spec);
}

// ------------------------------------------------------ constraint systems

bool LinearConstraint::satisfied_by(const IntVector& x) const {
  if (x.size() != coeffs.size()) throw DimensionMismatch("constraint arity");
  BigInt lhs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) lhs += BigInt(coeffs[i]) * x[i];
  switch (rel) {
    case Relation::GreaterEq: return lhs >= rhs;
    case Relation::Greater: return lhs > rhs;
    case Relation::Equal: return lhs == rhs;
    case Relation::LessEq: return lhs <= rhs;
    case Relation::Less: return lhs < rhs;
  }
  return false;
}

void LinearConstraintSystem::add(IntVector coeffs, Relation rel, std::int64_t rhs) {
  if (coeffs.size() != nvars) throw DimensionMismatch("constraint arity");
  constraints.push_back({std::move(coeffs), rel, rhs});
}

bool LinearConstraintSystem::contains(const IntVector& x) const {
  for (const LinearConstraint& c : constraints)
    if (!c.satisfied_by(x)) return false;
  return true;
}

// ------------------------------------------------------ higher differences

GeneratorCone higherdiff_cone(int r, int n) {
  require(r >= 1 && n >= 1, "higherdiff needs r >= 1 and n >= 1");
  const auto dim = static_cast<std::size_t>(n);
  std::vector<IntVector> rays;
  for (int j = 1; j <= n; ++j) {
    IntVector col(dim, 0);
    for (int i = 1; i <= j; ++i) col[static_cast<std::size_t>(i - 1)] = binomial_i64(r + j - i - 1, r - 1);
    rays.push_back(std::move(col));
  }
  return make_generator_cone(std::move(rays), std::vector<bool>(dim, false));
}

namespace {

IntVector difference_row(int t, int k, int n) {
  IntVector row(static_cast<std::size_t>(n), 0);
  for (int i = 0; i <= t; ++i) {
    const int idx = k + i;  // 1-based
    if (idx > n) break;
    const std::int64_t c = binomial_i64(t, i);
    row[static_cast<std::size_t>(idx - 1)] = (i % 2 == 0) ? c : -c;
  }
  return row;
}

}  // namespace

LinearConstraintSystem higherdiff_constraints_all_t(int r, int n) {
  require(r >= 1 && n >= 1, "higherdiff needs r >= 1 and n >= 1");
  LinearConstraintSystem cs{static_cast<std::size_t>(n), {}};
  for (int t = 1; t <= r; ++t)
    for (int k = 1; k <= n; ++k) cs.add(difference_row(t, k, n), Relation::GreaterEq, 0);
  return cs;
}

HalfspaceCone higherdiff_halfspaces(int r, int n) {
  require(r >= 1 && n >= 1, "higherdiff needs r >= 1 and n >= 1");
  std::vector<IntVector> rows;
  for (int k = 1; k <= n; ++k) rows.push_back(difference_row(r, k, n));
  return make_halfspace_cone(std::move(rows), std::vector<bool>(static_cast<std::size_t>(n), false));
}

// ------------------------------------------------------------------- n-gon

HalfspaceCone ngon_outer_halfspaces(int n) {
  require(n >= 3, "ngon needs n >= 3");
  const auto dim = static_cast<std::size_t>(n);
  std::vector<IntVector> rows{unit(dim, 0)};
  for (std::size_t i = 1; i < dim; ++i) {
    IntVector row(dim, 0);
    row[i] = 1;
    row[i - 1] = -1;
    rows.push_back(std::move(row));
  }
  std::vector<bool> strict(dim, false);
  strict[0] = true;
  return make_halfspace_cone(std::move(rows), std::move(strict));
}

HalfspaceCone ngon_removed_halfspaces(int n) {
  HalfspaceCone h = ngon_outer_halfspaces(n);
  // x_n >= x_{n-1} follows from x_n >= x_1 + ... + x_{n-1} on x > 0.
  IntVector& last = h.rows.back();
  for (std::size_t i = 0; i + 1 < last.size(); ++i) last[i] = -1;
  last.back() = 1;
  return h;
}

NGonCones ngon_cones(int n) {
  return {h_to_v(ngon_outer_halfspaces(n)), h_to_v(ngon_removed_halfspaces(n))};
}

LinearConstraintSystem ngon_constraints(int n) {
  require(n >= 3, "ngon needs n >= 3");
  const auto dim = static_cast<std::size_t>(n);
  LinearConstraintSystem cs{dim, {}};
  cs.add(unit(dim, 0), Relation::GreaterEq, 1);
  for (std::size_t i = 1; i < dim; ++i) {
    IntVector row(dim, 0);
    row[i] = 1;
    row[i - 1] = -1;
    cs.add(std::move(row), Relation::GreaterEq, 0);
  }
  IntVector polygon(dim, 1);
  polygon.back() = -1;
  cs.add(std::move(polygon), Relation::Greater, 0);
  return cs;
}

// ----------------------------------------------------------------- Hermite

HermiteCones hermite_cones(int n) {
  require(n >= 2, "hermite needs n >= 2");
  const auto dim = static_cast<std::size_t>(n);
  HermiteCones out;
  std::vector<IntVector> orthant;
  for (std::size_t i = 0; i < dim; ++i) orthant.push_back(unit(dim, i));
  out.orthant = make_generator_cone(std::move(orthant), std::vector<bool>(dim, true));
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<IntVector> rays{unit(dim, k)};
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == k) continue;
      IntVector r = unit(dim, j);
      r[k] = 1;
      rays.push_back(std::move(r));
    }
    out.excluded.push_back(make_generator_cone(std::move(rays), std::vector<bool>(dim, true)));
  }
  return out;
}

LinearConstraintSystem hermite_constraints(int n) {
  require(n >= 2, "hermite needs n >= 2");
  const auto dim = static_cast<std::size_t>(n);
  LinearConstraintSystem cs{dim, {}};
  for (std::size_t i = 0; i < dim; ++i) cs.add(unit(dim, i), Relation::GreaterEq, 1);
  for (std::size_t j = 0; j < dim; ++j) {
    IntVector row(dim, 1);
    row[j] = -1;
    cs.add(std::move(row), Relation::GreaterEq, 0);
  }
  return cs;
}

LinearConstraintSystem hermite_excluded_constraints(int n, int k) {
  require(n >= 2 && k >= 1 && k <= n, "hermite cone index out of range");
  const auto dim = static_cast<std::size_t>(n);
  LinearConstraintSystem cs{dim, {}};
  for (std::size_t i = 0; i < dim; ++i) cs.add(unit(dim, i), Relation::GreaterEq, 1);
  IntVector row(dim, -1);
  row[static_cast<std::size_t>(k - 1)] = 1;
  cs.add(std::move(row), Relation::Greater, 0);
  return cs;
}

// ------------------------------------------------------------------ Cayley

IntVector cayley_vertex(const std::vector<bool>& high) {
  IntVector v(high.size());
  for (std::size_t i = 0; i < high.size(); ++i) {
    if (!high[i]) v[i] = 1;
    else v[i] = (i == 0) ? 2 : 2 * v[i - 1];
  }
  return v;
}

CayleyPolytope cayley_polytope(int j) {
  require(j >= 2, "cayley needs j >= 2");
  require(j <= 24, "cayley j too large (2^(j-1) vertices)");
  CayleyPolytope p;
  p.j = j;
  const std::size_t d = p.dim();
  p.constraints.nvars = d;
  for (std::size_t i = 0; i < d; ++i) {
    p.constraints.add(unit(d, i), Relation::GreaterEq, 1);
    IntVector upper = unit(d, i);
    if (i == 0) {
      p.constraints.add(std::move(upper), Relation::LessEq, 2);
    } else {
      upper[i - 1] = -2;
      p.constraints.add(std::move(upper), Relation::LessEq, 0);
    }
  }
  std::set<IntVector> vertices;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    std::vector<bool> high(d);
    for (std::size_t i = 0; i < d; ++i) high[i] = (mask >> i) & 1U;
    vertices.insert(cayley_vertex(high));
  }
  p.vertices.assign(vertices.begin(), vertices.end());
  return p;
}

// ------------------------------------------------------------- hypersimplex

LinearConstraintSystem hypersimplex_slice_constraints(int n, int k, int t) {
  validate(HypersimplexSlice{n, k, t});
  const auto dim = static_cast<std::size_t>(n);
  LinearConstraintSystem cs{dim, {}};
  cs.add(IntVector(dim, 1), Relation::Equal, t);
  for (std::size_t i = 0; i < dim; ++i) {
    cs.add(unit(dim, i), Relation::GreaterEq, 0);
    IntVector box(dim, 0);
    box[i] = k;
    cs.add(std::move(box), Relation::LessEq, t);
  }
  return cs;
}

LinearConstraintSystem hypersimplex_balanced_constraints(int n, int t) {
  validate(HypersimplexSlice{n, 2, t});
  const auto dim = static_cast<std::size_t>(n);
  LinearConstraintSystem cs{dim, {}};
  cs.add(IntVector(dim, 1), Relation::Equal, t);
  for (std::size_t i = 0; i < dim; ++i) cs.add(unit(dim, i), Relation::GreaterEq, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    IntVector row(dim, 1);
    row[j] = -1;
    cs.add(std::move(row), Relation::GreaterEq, 0);
  }
  return cs;
}

BigInt hypersimplex_slice_count(int n, int k, int t) {
  validate(HypersimplexSlice{n, k, t});
  const int cap = t / k;
  BigInt total = 0;
  for (int i = 0; i <= n; ++i) {
    const int rest = t - i * (cap + 1);
    if (rest < 0) break;
    BigInt term = binomial(BigInt(n), BigInt(i)) * binomial(BigInt(rest + n - 1), BigInt(n - 1));
    total += (i % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

// ---------------------------------------------------------------- dispatch

LinearConstraintSystem constraints_of(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) -> LinearConstraintSystem {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HigherDiff>) return higherdiff_constraints_all_t(s.r, s.n);
        else if constexpr (std::is_same_v<T, NGon>) return ngon_constraints(s.n);
        else if constexpr (std::is_same_v<T, Hermite>) return hermite_constraints(s.n);
        else if constexpr (std::is_same_v<T, Cayley>) return cayley_polytope(s.j).constraints;
        else return hypersimplex_slice_constraints(s.n, s.k, s.t);
      },
      spec);
}

std::size_t nvars_of(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Cayley>) return static_cast<std::size_t>(s.j - 1);
        else return static_cast<std::size_t>(s.n);
      },
      spec);
}

}  // namespace polypart

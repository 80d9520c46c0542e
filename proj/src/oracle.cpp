#include "polypart/oracle.hpp"

#include <algorithm>

namespace polypart {

namespace {

// a . x >= b over the integers
struct Row {
  IntVector a;
  std::int64_t b;
};

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return -floor_div(-num, den); }

std::vector<Row> normalized_rows(const LinearConstraintSystem& cs) {
  std::vector<Row> rows;
  for (const LinearConstraint& c : cs.constraints) {
    IntVector neg(c.coeffs.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -c.coeffs[i];
    switch (c.rel) {
      case Relation::GreaterEq: rows.push_back({c.coeffs, c.rhs}); break;
      case Relation::Greater: rows.push_back({c.coeffs, c.rhs + 1}); break;
      case Relation::LessEq: rows.push_back({neg, -c.rhs}); break;
      case Relation::Less: rows.push_back({neg, -c.rhs + 1}); break;
      case Relation::Equal:
        rows.push_back({c.coeffs, c.rhs});
        rows.push_back({neg, -c.rhs});
        break;
    }
  }
  return rows;
}

struct ScanPlan {
  std::size_t n = 0;
  std::optional<std::int64_t> cap;
  IntVector lo, hi;
  bool empty = false;
  std::vector<Row> rows;
  // rows whose last nonzero coefficient sits at index i
  std::vector<std::vector<std::size_t>> closing;
  // sum_{k > i} lo_k
  IntVector lo_suffix;
};

ScanPlan make_plan(const LinearConstraintSystem& cs, std::optional<std::int64_t> cap) {
  ScanPlan plan;
  plan.n = cs.nvars;
  plan.cap = cap;
  plan.rows = normalized_rows(cs);
  const std::size_t n = plan.n;

  std::vector<Row> prop = plan.rows;
  if (cap) prop.push_back({IntVector(n, -1), -*cap});

  std::vector<std::optional<std::int64_t>> lo(n), hi(n);
  const std::size_t max_rounds = 4 * n + 16;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (const Row& row : prop) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t ai = row.a[i];
        if (ai == 0) continue;
        // a_i x_i >= b - max(sum_{k != i} a_k x_k)
        std::int64_t rest_max = 0;
        bool finite = true;
        for (std::size_t k = 0; k < n && finite; ++k) {
          if (k == i || row.a[k] == 0) continue;
          const auto& bound = row.a[k] > 0 ? hi[k] : lo[k];
          if (!bound) finite = false;
          else rest_max += row.a[k] * *bound;
        }
        if (!finite) continue;
        const std::int64_t rhs = row.b - rest_max;
        if (ai > 0) {
          const std::int64_t v = ceil_div(rhs, ai);
          if (!lo[i] || v > *lo[i]) lo[i] = v, changed = true;
        } else {
          const std::int64_t v = floor_div(rhs, ai);
          if (!hi[i] || v < *hi[i]) hi[i] = v, changed = true;
        }
        if (lo[i] && hi[i] && *lo[i] > *hi[i]) {
          plan.empty = true;
          return plan;
        }
      }
    }
    if (!changed) break;
  }
  plan.lo.resize(n);
  plan.hi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!lo[i]) throw UnboundedBelow("coordinate " + std::to_string(i + 1) + " has no finite lower bound");
    if (!hi[i]) throw UnboundedAbove("coordinate " + std::to_string(i + 1) + " has no finite upper bound");
    plan.lo[i] = *lo[i];
    plan.hi[i] = *hi[i];
  }
  plan.closing.resize(n);
  for (std::size_t r = 0; r < plan.rows.size(); ++r) {
    const IntVector& a = plan.rows[r].a;
    std::size_t last = n;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != 0) last = i;
    if (last < n) plan.closing[last].push_back(r);
  }
  plan.lo_suffix.assign(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) plan.lo_suffix[i] = plan.lo_suffix[i + 1] + plan.lo[i];
  return plan;
}

class Scanner {
 public:
  Scanner(const ScanPlan& plan, const LinearConstraintSystem& cs) : plan_(plan), cs_(cs), x_(plan.n, 0) {}

  // Scan coordinates from `start`, with x_[0..start) already fixed.
  void run(std::size_t start, std::int64_t partial, std::vector<IntVector>& out) {
    if (start == plan_.n) {
      if (cs_.contains(x_)) out.push_back(x_);
      return;
    }
    std::int64_t lo = plan_.lo[start];
    std::int64_t hi = plan_.hi[start];
    if (plan_.cap) hi = std::min(hi, *plan_.cap - partial - plan_.lo_suffix[start + 1]);
    for (std::size_t r : plan_.closing[start]) {
      const Row& row = plan_.rows[r];
      std::int64_t fixed = 0;
      for (std::size_t k = 0; k < start; ++k) fixed += row.a[k] * x_[k];
      const std::int64_t a = row.a[start];
      if (a > 0) lo = std::max(lo, ceil_div(row.b - fixed, a));
      else hi = std::min(hi, floor_div(row.b - fixed, a));
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      x_[start] = v;
      run(start + 1, partial + v, out);
    }
  }

  void fix(std::size_t i, std::int64_t v) { x_[i] = v; }

 private:
  const ScanPlan& plan_;
  const LinearConstraintSystem& cs_;
  IntVector x_;
};

PointSet empty_set(const LinearConstraintSystem& cs, std::optional<std::int64_t> bound) {
  return PointSet{cs.nvars, {}, bound};
}

// First-coordinate values admissible before the scan proper.
std::pair<std::int64_t, std::int64_t> first_range(const ScanPlan& plan) {
  std::int64_t lo = plan.lo[0];
  std::int64_t hi = plan.hi[0];
  if (plan.cap) hi = std::min(hi, *plan.cap - plan.lo_suffix[1]);
  for (std::size_t r : plan.closing[0]) {
    const Row& row = plan.rows[r];
    if (row.a[0] > 0) lo = std::max(lo, ceil_div(row.b, row.a[0]));
    else hi = std::min(hi, floor_div(row.b, row.a[0]));
  }
  return {lo, hi};
}

}  // namespace

namespace serial {

PointSet enumerate(const LinearConstraintSystem& cs, std::optional<std::int64_t> total_degree_bound) {
  if (cs.nvars == 0) throw DimensionMismatch("constraint system without variables");
  const ScanPlan plan = make_plan(cs, total_degree_bound);
  PointSet out = empty_set(cs, total_degree_bound);
  if (plan.empty) return out;
  Scanner scanner(plan, cs);
  scanner.run(0, 0, out.points);
  return out;
}

}  // namespace serial

PointSet enumerate(const LinearConstraintSystem& cs, std::optional<std::int64_t> total_degree_bound) {
  if (cs.nvars == 0) throw DimensionMismatch("constraint system without variables");
  const ScanPlan plan = make_plan(cs, total_degree_bound);
  PointSet out = empty_set(cs, total_degree_bound);
  if (plan.empty) return out;
  const auto [lo, hi] = first_range(plan);
  if (lo > hi) return out;
  const std::int64_t count = hi - lo + 1;
  std::vector<std::vector<IntVector>> chunks(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    Scanner scanner(plan, cs);
    scanner.fix(0, lo + i);
    scanner.run(1, lo + i, chunks[static_cast<std::size_t>(i)]);
  }
  // Chunks are ordered by first coordinate, so concatenation is lexicographic.
  for (auto& chunk : chunks)
    for (auto& p : chunk) out.points.push_back(std::move(p));
  return out;
}

PointSet enumerate(const GeneratorCone& g, std::int64_t total_degree_bound) {
  const std::size_t d = g.dim();
  if (d == 0) throw DimensionMismatch("cone without rays");
  // Scan the coefficient vectors y, weighted by each ray's coordinate sum.
  LinearConstraintSystem coeffs{d, {}};
  IntVector weights(d);
  std::int64_t budget = total_degree_bound - total_degree(g.apex);
  for (std::size_t i = 0; i < d; ++i) {
    weights[i] = total_degree(g.rays[i]);
    if (weights[i] <= 0) throw UnboundedAbove("ray with non-positive coordinate sum");
    IntVector e(d, 0);
    e[i] = 1;
    coeffs.add(std::move(e), Relation::GreaterEq, g.open[i] ? 1 : 0);
  }
  coeffs.add(weights, Relation::LessEq, budget);
  PointSet out{d, {}, total_degree_bound};
  if (budget < 0) return out;
  for (const IntVector& y : enumerate(coeffs, std::nullopt).points) {
    IntVector x = g.apex;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) x[k] += y[i] * g.rays[i][k];
    out.points.push_back(std::move(x));
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

TruncatedSeries to_series(const PointSet& p, std::optional<int> order) {
  int n = 0;
  if (order) n = *order;
  else if (p.bound) n = static_cast<int>(*p.bound);
  else
    for (const IntVector& x : p.points) n = std::max(n, static_cast<int>(total_degree(x)));
  TruncatedSeries s(p.nvars, n);
  for (const IntVector& x : p.points) s.add(x, 1);
  return s;
}

TruncatedSeries to_q_series(const PointSet& p, std::optional<int> order) {
  int n = 0;
  if (order) n = *order;
  else if (p.bound) n = static_cast<int>(*p.bound);
  else
    for (const IntVector& x : p.points) n = std::max(n, static_cast<int>(total_degree(x)));
  TruncatedSeries s(1, n);
  for (const IntVector& x : p.points) s.add({total_degree(x)}, 1);
  return s;
}

MultiPolynomial to_polynomial(const PointSet& p) {
  MultiPolynomial out(p.nvars);
  for (const IntVector& x : p.points) out.add_term(x, 1);
  return out;
}

BigInt connected_graph_count(int v) {
  if (v < 1) throw BadParams("connected_graph_count needs v >= 1");
  auto edges_pow = [](int k) { return BigInt(1) << static_cast<unsigned>(k * (k - 1) / 2); };
  std::vector<BigInt> c(static_cast<std::size_t>(v) + 1);
  for (int m = 1; m <= v; ++m) {
    BigInt disconnected = 0;
    for (int s = 1; s < m; ++s)
      disconnected += c[static_cast<std::size_t>(s)] * binomial(BigInt(m - 1), BigInt(s - 1)) * edges_pow(m - s);
    c[static_cast<std::size_t>(m)] = edges_pow(m) - disconnected;
  }
  return c[static_cast<std::size_t>(v)];
}

}  // namespace polypart

#include "polypart/verification.hpp"

#include <random>

namespace polypart {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Series: return "series";
    case Method::ExactPolynomial: return "exact-polynomial";
    case Method::RandomPoints: return "random-points";
  }
  return "unknown";
}

void compare_series(TruncatedSeries lhs, const TruncatedSeries& rhs, const Settings& settings,
                    VerificationReport& report) {
  if (settings.inject_fault) lhs.add(ExponentVector(lhs.nvars(), 0), 1);
  const int order = std::min(lhs.order(), rhs.order());
  report.order = order;
  report.checked = std::max(lhs.truncated(order).terms().size(), rhs.truncated(order).terms().size());
  const auto diff = first_difference(lhs, rhs);
  report.passed = !diff;
  if (diff) report.witness = Witness{*diff, {}, BigRat(lhs.coefficient(*diff)), BigRat(rhs.coefficient(*diff))};
}

void compare_polynomials(MultiPolynomial lhs, const MultiPolynomial& rhs, const Settings& settings,
                         VerificationReport& report) {
  if (settings.inject_fault) lhs.add_term(ExponentVector(lhs.nvars(), 0), 1);
  const MultiPolynomial diff = lhs - rhs;
  report.checked = std::max(lhs.terms().size(), rhs.terms().size());
  report.passed = diff.is_zero();
  if (!report.passed) {
    const ExponentVector& e = diff.terms().begin()->first;
    report.witness = Witness{e, {}, BigRat(lhs.coefficient(e)), BigRat(rhs.coefficient(e))};
  }
}

std::vector<std::vector<BigRat>> draw_points(const std::vector<const RationalGF*>& gfs, std::size_t nvars,
                                             int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<BigRat>> pts;
  int rejected = 0;
  while (static_cast<int>(pts.size()) < count) {
    std::vector<BigRat> p = random_point(rng, nvars);
    bool pole = false;
    for (const RationalGF* g : gfs) pole = pole || has_pole_at(*g, p);
    if (pole) {
      if (++rejected > 1000 * (count + 1)) throw PoleAtPoint("could not draw pole-free points");
      continue;
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

void compare_at_random_points(const RationalGF& lhs, const RationalGF& rhs, const Settings& settings,
                              VerificationReport& report) {
  if (lhs.nvars() != rhs.nvars()) throw DimensionMismatch("compared functions differ in variable count");
  report.points = settings.points;
  report.seed = settings.seed;
  const auto pts = draw_points({&lhs, &rhs}, lhs.nvars(), settings.points, settings.seed);
  std::vector<BigRat> lv = evaluate_at(lhs, pts);
  const std::vector<BigRat> rv = evaluate_at(rhs, pts);
  if (settings.inject_fault && !lv.empty()) lv.front() += 1;
  report.checked = pts.size();
  report.passed = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (lv[i] != rv[i]) {
      report.passed = false;
      report.witness = Witness{std::nullopt, pts[i], lv[i], rv[i]};
      break;
    }
  }
}

}  // namespace polypart

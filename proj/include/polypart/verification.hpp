#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polypart/families.hpp"
#include "polypart/genfun.hpp"

namespace polypart {

enum class Method { Series, ExactPolynomial, RandomPoints };

std::string_view to_string(Method m);

/// First disagreement found by a check: an exponent (series / polynomial
/// methods) or an evaluation point (random-point method).
struct Witness {
  std::optional<ExponentVector> exponent;
  std::vector<BigRat> point;
  BigRat lhs = 0;
  BigRat rhs = 0;
};

struct VerificationReport {
  std::string id;
  Params params;
  Method method = Method::Series;
  std::optional<int> order;
  std::optional<int> points;
  std::optional<std::uint64_t> seed;
  /// Coefficients or points compared.
  std::size_t checked = 0;
  bool passed = false;
  std::optional<Witness> witness;
  /// Set when the check itself raised instead of producing a verdict.
  std::optional<std::string> error;
};

/// Knobs shared by every check. `inject_fault` perturbs the left-hand side
/// by one unit so that the harness itself can be tested.
struct Settings {
  std::optional<int> order;
  int points = 20;
  std::uint64_t seed = 0;
  bool inject_fault = false;
};

/// Coefficientwise comparison up to the common order.
void compare_series(TruncatedSeries lhs, const TruncatedSeries& rhs, const Settings& settings,
                    VerificationReport& report);

void compare_polynomials(MultiPolynomial lhs, const MultiPolynomial& rhs, const Settings& settings,
                         VerificationReport& report);

/// Exact evaluation of both sides at `settings.points` seeded random points
/// (numerators and denominators uniform in [2, 10^6]); points where either
/// side has a pole are redrawn. Evaluation runs in parallel.
void compare_at_random_points(const RationalGF& lhs, const RationalGF& rhs, const Settings& settings,
                              VerificationReport& report);

/// Seeded pole-free points for both functions, drawn sequentially.
std::vector<std::vector<BigRat>> draw_points(const std::vector<const RationalGF*>& gfs, std::size_t nvars,
                                             int count, std::uint64_t seed);

}  // namespace polypart

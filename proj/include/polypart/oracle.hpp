#pragma once

#include <optional>
#include <vector>

#include "polypart/cone.hpp"
#include "polypart/exactmath.hpp"
#include "polypart/families.hpp"
#include "polypart/genfun.hpp"

namespace polypart {

/// Lattice points of a constraint system, lexicographically sorted.
struct PointSet {
  std::size_t nvars = 0;
  std::vector<IntVector> points;
  /// Coordinate-sum cap used for the scan; empty for bounded polytopes.
  std::optional<std::int64_t> bound;
};

/// All integer points of `cs` with coordinate sum <= bound (no cap when the
/// bound is empty). Coordinate ranges come from interval propagation over the
/// constraint rows; the scan is a plain nested loop that checks every
/// constraint at the leaves. Parallel over the first coordinate.
/// Throws UnboundedBelow / UnboundedAbove when a range stays infinite.
PointSet enumerate(const LinearConstraintSystem& cs, std::optional<std::int64_t> total_degree_bound);

namespace serial {
PointSet enumerate(const LinearConstraintSystem& cs, std::optional<std::int64_t> total_degree_bound);
}

/// Points apex + sum y_i rays[i] with integer y_i >= 0 (>= 1 for open rays)
/// and coordinate sum <= bound, sorted. For a unimodular cone these are
/// exactly its lattice points. Every ray needs a positive coordinate sum;
/// throws UnboundedAbove otherwise.
PointSet enumerate(const GeneratorCone& g, std::int64_t total_degree_bound);

/// Coefficient 1 per point. The order defaults to the set's bound, or to
/// the largest point degree for polytopes.
TruncatedSeries to_series(const PointSet& p, std::optional<int> order = std::nullopt);
/// Histogram of coordinate sums.
TruncatedSeries to_q_series(const PointSet& p, std::optional<int> order = std::nullopt);
MultiPolynomial to_polynomial(const PointSet& p);

/// Labeled connected graphs on v vertices, by the standard
/// C_v = 2^{C(v,2)} - sum_{s<v} C(v-1, s-1) C_s 2^{C(v-s,2)} recurrence.
BigInt connected_graph_count(int v);

}  // namespace polypart

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hamcut/colored_point_set.hpp"
#include "hamcut/geometry.hpp"

namespace hamcut {

/// alpha_i in 1..n_i (1-based, as counts are "alpha_i - 1 below").
using AlphaVector = std::vector<std::size_t>;

/// Colorful hyperplane with per-class counts. The tuple's own point is the
/// single On point of its class and is excluded from below/above.
struct Cut {
  std::vector<std::size_t> tuple;
  Hyperplane hyperplane;
  std::vector<SideCounts> counts;

  bool operator==(const Cut&) const = default;
};

/// Counts for one colorful tuple; nullopt if some other input point lies on
/// its hyperplane or the tuple is affinely dependent.
std::optional<Cut> evaluate_tuple(const ColoredPointSet& set, const std::vector<std::size_t>& tuple);

/// Throws OutOfRange unless 1 <= alpha_i <= n_i.
void validate_alpha(const ColoredPointSet& set, const AlphaVector& alpha);

/// Scans every colorful tuple and returns the only one with alpha_i - 1
/// points of P_i below. Throws NoCut / MultipleCuts otherwise, listing the
/// offending tuples in the message.
Cut find_alpha_cut(const ColoredPointSet& set, const AlphaVector& alpha);

/// One scan; maps (below counts + 1) to the cut. Throws NotBijective if some
/// count vector is hit twice or missed.
std::map<AlphaVector, Cut> all_alpha_cuts(const ColoredPointSet& set);

/// Same cut via the grid: the vertex of sigma_P with outmap alpha - 1.
Cut cut_from_grid(const ColoredPointSet& set, const AlphaVector& alpha);

struct SemiCutQuery {
  std::size_t base_point = 0;          // index into P_1
  std::vector<std::size_t> targets;    // a_2..a_d, each in 0..n_i
};

struct SemiCutResult {
  std::vector<Cut> cuts;
  /// Tuples through the base point whose hyperplane is degenerate or holds
  /// further input points; they are never counted as semi-cuts.
  std::vector<std::vector<std::size_t>> degenerate_tuples;
};

/// Colorful tuples through p^1_{base} with exactly a_i points of P_i
/// strictly above for i >= 2 (class 1 unconstrained).
SemiCutResult find_semi_cuts(const ColoredPointSet& set, const SemiCutQuery& query);

struct SemiCutMultiplicity {
  std::size_t base_point = 0;
  std::vector<std::size_t> targets;
  std::vector<std::vector<std::size_t>> tuples;
};

struct SemiCutProbeReport {
  std::size_t semi_cuts = 0;
  std::size_t degenerate_tuples = 0;
  /// (x, a) with two or more semi-cuts. Exploratory: nothing is asserted.
  std::vector<SemiCutMultiplicity> multiple;
};

SemiCutProbeReport probe_lemma_a1(const ColoredPointSet& set);

/// True iff q lies in the convex hull of the points (exact LP).
bool in_convex_hull(std::span<const Point> points, const Point& q);

/// Planar only: two semi-cuts through different base points of P_1 that
/// share their target value.
struct SemiCutPair {
  std::size_t base_x = 0;
  std::size_t base_y = 0;
  std::vector<std::size_t> targets;
  Cut cut_x;
  Cut cut_y;
  std::optional<Point> intersection;  // nullopt for parallel lines
  bool intersection_in_hull = false;
};

/// Every such pair, in lexicographic (x, y, targets, tuples) order. Throws
/// DimensionMismatch unless d = 2.
std::vector<SemiCutPair> semi_cut_pairs(const ColoredPointSet& set);

}  // namespace hamcut

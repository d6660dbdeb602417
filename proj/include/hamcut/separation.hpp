#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hamcut/colored_point_set.hpp"
#include "hamcut/geometry.hpp"

namespace hamcut {

struct WeakPositionReport {
  bool satisfied = true;
  /// First colorful tuple that spans a degenerate or overloaded hyperplane.
  std::optional<std::vector<std::size_t>> tuple;
  /// (class, index) of an extra point lying on the tuple's hyperplane.
  std::optional<std::pair<std::size_t, std::size_t>> extra_point;
  bool degenerate_span = false;
};

/// satisfied <=> violating_subset is empty. For well-separation the subset
/// is the index set I of classes on the positive side; for (beta, gamma)
/// checks it is the set of classes with s_i = +.
struct SeparationReport {
  bool satisfied = true;
  std::optional<Hyperplane> witness;
  std::optional<std::vector<std::size_t>> violating_subset;
  /// Set on a well-separation failure whose hulls can still be weakly
  /// separated (they touch without overlapping).
  bool touching = false;
};

struct BetaGamma {
  std::vector<std::size_t> beta;
  std::vector<std::size_t> gamma;
};

WeakPositionReport check_weak_general_position(const ColoredPointSet& set);

/// Strict separation by exact LP: returns h with every point of `above`
/// strictly above and every point of `below` strictly below, if one exists.
std::optional<Hyperplane> strictly_separate(std::span<const Point> above, std::span<const Point> below);

/// True if some hyperplane has `above` in its closed upper side and `below`
/// in its closed lower side.
bool weakly_separable(std::span<const Point> above, std::span<const Point> below);

/// Checks every non-empty proper index set I in increasing bitmask order.
SeparationReport check_well_separated(const ColoredPointSet& set);

/// Separation query for one index set (bit i of `positive_classes` selects
/// class i); the report carries a witness on success.
SeparationReport check_separation_for(const ColoredPointSet& set, std::uint32_t positive_classes);

/// All subsets S of the points (bit j = points[j]) such that some oriented
/// hyperplane has exactly S strictly above and the rest strictly below.
/// Enumerates hyperplanes through affinely independent d-subsets together
/// with every sign pattern their incident points can take under an
/// infinitesimal perturbation, plus the two trivial dichotomies. Sorted.
std::vector<std::uint64_t> realizable_dichotomies(std::span<const Point> points);

/// Well-separation decided by dichotomy enumeration instead of LP.
bool well_separated_by_enumeration(const ColoredPointSet& set);

/// Throws InvalidBetaGamma unless 1 <= beta_i <= gamma_i <= n_i.
void validate_beta_gamma(const ColoredPointSet& set, const BetaGamma& bg);

/// For every s in {+,-}^d asks for h_s with at least gamma_i points of P_i
/// strictly above when s_i = + and at most beta_i - 1 strictly above when
/// s_i = -. Decided exactly via realizable_dichotomies.
SeparationReport check_beta_gamma(const ColoredPointSet& set, const BetaGamma& bg);

/// Witness hyperplane for one sign vector (bit i set <=> s_i = +).
std::optional<Hyperplane> beta_gamma_witness(const ColoredPointSet& set, const BetaGamma& bg,
                                             std::uint32_t positive_classes);

}  // namespace hamcut

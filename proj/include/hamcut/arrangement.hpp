#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hamcut/colored_point_set.hpp"
#include "hamcut/geometry.hpp"

namespace hamcut {

/// d classes of oriented straight hyperplanes in R^d.
class ColoredLineArrangement {
 public:
  ColoredLineArrangement() = default;
  /// Throws DimensionMismatch on malformed input and DuplicateLine when a
  /// class holds the same oriented hyperplane twice.
  ColoredLineArrangement(std::size_t dimension, std::vector<std::vector<Hyperplane>> classes);

  std::size_t dimension() const { return dimension_; }
  const std::vector<std::vector<Hyperplane>>& classes() const { return classes_; }
  const std::vector<Hyperplane>& lines(std::size_t cls) const { return classes_.at(cls); }
  std::size_t size(std::size_t cls) const { return classes_.at(cls).size(); }
  std::vector<std::size_t> sizes() const;

  bool operator==(const ColoredLineArrangement&) const = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<std::vector<Hyperplane>> classes_;
};

/// Dual arrangement of a planar point set: class i holds the duals of P_i.
ColoredLineArrangement dualize(const ColoredPointSet& set);

struct RainbowReport {
  bool rainbow = true;
  /// First colorful tuple whose hyperplanes do not meet in a single point.
  std::optional<std::vector<std::size_t>> non_rainbow_tuple;
  bool well_separated = true;
  /// First sign vector (bit i set <=> s_i = +) without an unbounded cell.
  std::optional<std::uint32_t> failing_sign_vector;
  /// Per sign vector, a point of the required cell and a recession direction.
  std::vector<Point> cell_points;
  std::vector<Point> cell_directions;
};

/// Rainbow: every colorful tuple has linearly independent normals. Well
/// separated: for every s some point is strictly on side s_i of every
/// hyperplane of class i and its cell is unbounded (its closure has a
/// nonzero recession direction). Both decided exactly.
RainbowReport verify_rainbow_ws(const ColoredLineArrangement& arrangement);

/// Direction u with s_i (w . u) >= 1 on every hyperplane of class i, if any.
std::optional<Point> strict_direction(const ColoredLineArrangement& arrangement, std::uint32_t positive_classes);

/// Point on one hyperplane per class and strictly above exactly alpha_i - 1
/// hyperplanes of class i; found by scanning every colorful intersection.
/// Throws NoPoint / MultiplePoints.
Point x_alpha_bruteforce(const ColoredLineArrangement& arrangement, const std::vector<std::size_t>& alpha);

/// Intersection point of a colorful tuple, nullopt when not unique.
std::optional<Point> colorful_intersection(const ColoredLineArrangement& arrangement,
                                           const std::vector<std::size_t>& tuple);

/// Rational rotation turning every normal of `lines` into one with positive
/// second coordinate. Identity when already so. Throws
/// OrientationNotNormalized if the normals do not lie in an open half-plane.
Rotation2 upward_frame(const std::vector<Hyperplane>& lines);

}  // namespace hamcut

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamcut/rational.hpp"

namespace hamcut {

using Point = std::vector<Rational>;
using Matrix = std::vector<std::vector<Rational>>;

enum class Sign { Below = -1, On = 0, Above = 1 };

std::string_view to_string(Sign s);

inline Sign sign_of(int s) { return s < 0 ? Sign::Below : (s > 0 ? Sign::Above : Sign::On); }

/// Oriented hyperplane {q : normal . q = offset}. A point q is above when
/// normal . q > offset and below when normal . q < offset.
///
/// Instances built through make_hyperplane() are canonical: the normal is
/// divided by the absolute value of its first nonzero entry, so two
/// hyperplanes with the same oriented zero set compare equal.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;

  std::size_t dimension() const { return normal.size(); }

  bool operator==(const Hyperplane&) const = default;
};

/// Canonicalizes (normal, offset); throws DegenerateSpan for a zero normal.
Hyperplane make_hyperplane(std::vector<Rational> normal, Rational offset);

/// Same oriented zero set with the opposite positive side.
Hyperplane flipped(const Hyperplane& h);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Exact determinant by Gaussian elimination over the rationals.
Rational determinant(Matrix m);

/// Rank of an arbitrary rational matrix.
std::size_t rank(Matrix m);

/// Solves the square system a x = b; std::nullopt when a is singular.
std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b);

/// True when the points are affinely independent.
bool affinely_independent(std::span<const Point> points);

/// Sign of det [[p_1, 1], ..., [p_d, 1], [q, 1]] mapped to Below/On/Above.
/// Throws DimensionMismatch when sizes disagree, DegenerateSpan when the
/// spanning points are affinely dependent.
Sign orient(std::span<const Point> spanning, const Point& q);

/// Coefficient form of the orientation predicate: for every q,
/// classify(hyperplane_through(S), q) == orient(S, q).
Hyperplane hyperplane_through(std::span<const Point> spanning);

/// Side of q relative to h; throws DimensionMismatch on size mismatch.
Sign classify(const Hyperplane& h, const Point& q);

struct SideCounts {
  std::size_t below = 0;
  std::size_t on = 0;
  std::size_t above = 0;

  bool operator==(const SideCounts&) const = default;
};

SideCounts side_counts(const Hyperplane& h, std::span<const Point> points);

// Point-line duality in the plane: (a, b) <-> y = a x - b, positive side up.

/// Dual line of a planar point, oriented so that its positive side is the
/// upper half-plane.
Hyperplane dualize(const Point& p);

/// Dual point of a non-vertical upward-oriented line y = m x + c, namely
/// (m, -c). Throws VerticalLine when the normal has zero second coordinate
/// and OrientationNotNormalized when the positive side is the lower one.
Point dualize_line(const Hyperplane& h);

/// For a non-vertical line, (slope, intercept) of y = slope * x + intercept.
std::pair<Rational, Rational> slope_intercept(const Hyperplane& h);

/// Upward-oriented line y = slope * x + intercept.
Hyperplane line_from_slope(const Rational& slope, const Rational& intercept);

/// Exact rational rotation built from t = tan(theta / 2):
/// cos = (1 - t^2) / (1 + t^2), sin = 2 t / (1 + t^2).
struct Rotation2 {
  Rational cos{1};
  Rational sin{0};

  static Rotation2 from_half_tangent(const Rational& t);
  Rotation2 inverse() const { return {cos, -sin}; }
  /// Composition; planar rotations commute.
  Rotation2 operator*(const Rotation2& o) const { return {cos * o.cos - sin * o.sin, sin * o.cos + cos * o.sin}; }
  bool operator==(const Rotation2&) const = default;
  Point apply(const Point& p) const;
  Hyperplane apply(const Hyperplane& h) const;
};

}  // namespace hamcut

#pragma once

#include <cstddef>
#include <vector>

#include "hamcut/geometry.hpp"

namespace hamcut {

/// k-level of one class of planar oriented lines. Stored in a frame (a
/// rotation of the plane) in which every line has its positive side up, so
/// the polyline is x-monotone there. vertices are in frame coordinates with
/// increasing x; lines[j] supports the piece between vertices[j-1] and
/// vertices[j], lines.front() the left ray and lines.back() the right ray.
struct LevelPolyline {
  Rotation2 frame;  // world -> frame
  std::size_t k = 0;
  std::vector<Point> vertices;
  std::vector<Hyperplane> lines;

  std::vector<Point> world_vertices() const;
  std::vector<Hyperplane> world_lines() const;
  /// World directions of the unbounded left and right rays.
  Point left_ray_direction() const;
  Point right_ray_direction() const;

  /// Height of the level above frame abscissa x.
  Rational height_at(const Rational& x) const;
  /// Above / On / Below the level for a world point. Above means strictly
  /// above at least k lines; Below means on or above at most k - 1 lines.
  Sign side(const Point& world) const;
  /// Exact squared Euclidean distance from a world point to the polyline.
  Rational squared_distance(const Point& world) const;
};

/// Throws OrientationNotNormalized unless every line is non-vertical with
/// its positive side up, OutOfRange unless 1 <= k <= |lines|, DuplicateLine
/// for repeated lines.
LevelPolyline k_level(const std::vector<Hyperplane>& lines, std::size_t k);

/// Same after rotating into upward_frame(lines); nothing is re-oriented.
LevelPolyline k_level_framed(const std::vector<Hyperplane>& lines, std::size_t k);

/// Number of lines a world point lies strictly above / on.
struct LineCounts {
  std::size_t above = 0;
  std::size_t on = 0;
};
LineCounts line_counts(const std::vector<Hyperplane>& lines, const Point& p);

/// -distance below the level, +distance above, 0 on it. The sign is exact;
/// the magnitude is the square root of the exact squared distance.
double signed_level_distance(const LevelPolyline& level, const Point& x);

/// All points lying on both polylines, in lexicographic order. Pieces of
/// the two levels are assumed never collinear (true for rainbow input).
std::vector<Point> level_intersections(const LevelPolyline& a, const LevelPolyline& b);

}  // namespace hamcut

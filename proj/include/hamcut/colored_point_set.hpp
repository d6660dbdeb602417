#pragma once

#include <cstddef>
#include <vector>

#include "hamcut/geometry.hpp"

namespace hamcut {

/// d point classes P_1..P_d in R^d. Point j of class i is classes[i][j].
class ColoredPointSet {
 public:
  ColoredPointSet() = default;

  /// Throws DimensionMismatch unless there are exactly d non-empty classes of
  /// d-dimensional points.
  ColoredPointSet(std::size_t dimension, std::vector<std::vector<Point>> classes);

  std::size_t dimension() const { return dimension_; }
  const std::vector<std::vector<Point>>& classes() const { return classes_; }
  const std::vector<Point>& points(std::size_t cls) const { return classes_.at(cls); }
  const Point& point(std::size_t cls, std::size_t index) const { return classes_.at(cls).at(index); }
  std::size_t size(std::size_t cls) const { return classes_.at(cls).size(); }
  std::vector<std::size_t> sizes() const;
  std::size_t total_size() const;

  /// All points, class by class.
  std::vector<Point> all_points() const;

  /// Sub-instance keeping, per class, the listed indices (in the given order).
  ColoredPointSet subset(const std::vector<std::vector<std::size_t>>& keep) const;

  /// Colorful tuple: one point per class, tuple[i] indexing class i.
  std::vector<Point> colorful_points(const std::vector<std::size_t>& tuple) const;

  bool operator==(const ColoredPointSet&) const = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<std::vector<Point>> classes_;
};

/// Calls fn(tuple) for every colorful index tuple in lexicographic order.
template <typename Fn>
void for_each_tuple(const std::vector<std::size_t>& sizes, Fn&& fn) {
  std::vector<std::size_t> tuple(sizes.size(), 0);
  for (std::size_t s : sizes) {
    if (s == 0) return;
  }
  for (;;) {
    fn(static_cast<const std::vector<std::size_t>&>(tuple));
    std::size_t i = sizes.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++tuple[i] < sizes[i]) break;
      tuple[i] = 0;
    }
  }
}

}  // namespace hamcut

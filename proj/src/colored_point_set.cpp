#include "hamcut/colored_point_set.hpp"

#include "hamcut/error.hpp"

namespace hamcut {

ColoredPointSet::ColoredPointSet(std::size_t dimension, std::vector<std::vector<Point>> classes)
    : dimension_(dimension), classes_(std::move(classes)) {
  if (dimension_ == 0) throw Error(ErrorKind::DimensionMismatch, "dimension must be positive");
  if (classes_.size() != dimension_) {
    throw Error(ErrorKind::DimensionMismatch, "class count must equal the dimension");
  }
  for (const auto& cls : classes_) {
    if (cls.empty()) throw Error(ErrorKind::DimensionMismatch, "every class needs at least one point");
    for (const Point& p : cls) {
      if (p.size() != dimension_) throw Error(ErrorKind::DimensionMismatch, "point dimension differs from d");
    }
  }
}

std::vector<std::size_t> ColoredPointSet::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& cls : classes_) out.push_back(cls.size());
  return out;
}

std::size_t ColoredPointSet::total_size() const {
  std::size_t n = 0;
  for (const auto& cls : classes_) n += cls.size();
  return n;
}

std::vector<Point> ColoredPointSet::all_points() const {
  std::vector<Point> out;
  for (const auto& cls : classes_) out.insert(out.end(), cls.begin(), cls.end());
  return out;
}

ColoredPointSet ColoredPointSet::subset(const std::vector<std::vector<std::size_t>>& keep) const {
  if (keep.size() != classes_.size()) throw Error(ErrorKind::DimensionMismatch, "subset needs one list per class");
  std::vector<std::vector<Point>> out(classes_.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j : keep[i]) out[i].push_back(classes_[i].at(j));
  }
  return ColoredPointSet(dimension_, std::move(out));
}

std::vector<Point> ColoredPointSet::colorful_points(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != classes_.size()) throw Error(ErrorKind::DimensionMismatch, "tuple length differs from d");
  std::vector<Point> out;
  out.reserve(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= classes_[i].size()) throw Error(ErrorKind::OutOfRange, "tuple index out of range");
    out.push_back(classes_[i][tuple[i]]);
  }
  return out;
}

}  // namespace hamcut

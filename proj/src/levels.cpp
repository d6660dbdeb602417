#include "hamcut/levels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "hamcut/arrangement.hpp"
#include "hamcut/error.hpp"

namespace hamcut {

namespace {

// y = slope x + intercept for an upward line.
Rational value_at(const Hyperplane& h, const Rational& x) { return (h.offset - h.normal[0] * x) / h.normal[1]; }

Rational slope_of(const Hyperplane& h) { return -h.normal[0] / h.normal[1]; }

Rational squared_norm(const Rational& x, const Rational& y) { return x * x + y * y; }

// Squared distance from p to a + t (b - a) for t in [0, 1], or t >= 0 when
// `ray` (then b - a is the direction).
Rational squared_distance_to_piece(const Point& p, const Point& a, const Rational& dx, const Rational& dy, bool ray) {
  const Rational px = p[0] - a[0];
  const Rational py = p[1] - a[1];
  Rational t = (px * dx + py * dy) / squared_norm(dx, dy);
  if (t < 0) t = 0;
  if (!ray && t > 1) t = 1;
  return squared_norm(px - t * dx, py - t * dy);
}

}  // namespace

std::vector<Point> LevelPolyline::world_vertices() const {
  const Rotation2 back = frame.inverse();
  std::vector<Point> out;
  for (const Point& v : vertices) out.push_back(back.apply(v));
  return out;
}

std::vector<Hyperplane> LevelPolyline::world_lines() const {
  const Rotation2 back = frame.inverse();
  std::vector<Hyperplane> out;
  for (const Hyperplane& h : lines) out.push_back(back.apply(h));
  return out;
}

Point LevelPolyline::left_ray_direction() const {
  return frame.inverse().apply(Point{Rational(-1), Rational(-slope_of(lines.front()))});
}

Point LevelPolyline::right_ray_direction() const {
  return frame.inverse().apply(Point{Rational(1), slope_of(lines.back())});
}

Rational LevelPolyline::height_at(const Rational& x) const {
  std::size_t piece = 0;
  while (piece < vertices.size() && vertices[piece][0] < x) ++piece;
  return value_at(lines[piece], x);
}

Sign LevelPolyline::side(const Point& world) const {
  const Point p = frame.apply(world);
  return sign_of(cmp(p[1], height_at(p[0])));
}

Rational LevelPolyline::squared_distance(const Point& world) const {
  const Point p = frame.apply(world);
  if (vertices.empty()) {
    const Hyperplane& h = lines.front();
    const Rational r = dot(h.normal, p) - h.offset;
    return r * r / squared_norm(h.normal[0], h.normal[1]);
  }
  Rational best = squared_distance_to_piece(p, vertices.front(), Rational(-1), -slope_of(lines.front()), true);
  for (std::size_t j = 1; j < vertices.size(); ++j) {
    const Point& a = vertices[j - 1];
    const Point& b = vertices[j];
    best = std::min(best, squared_distance_to_piece(p, a, b[0] - a[0], b[1] - a[1], false));
  }
  best = std::min(best, squared_distance_to_piece(p, vertices.back(), Rational(1), slope_of(lines.back()), true));
  return best;
}

LevelPolyline k_level(const std::vector<Hyperplane>& lines, std::size_t k) {
  for (const Hyperplane& h : lines) {
    if (h.dimension() != 2) throw Error(ErrorKind::DimensionMismatch, "levels are planar");
    if (h.normal[1] <= 0) throw Error(ErrorKind::OrientationNotNormalized, "level lines need the upper side positive");
  }
  if (k < 1 || k > lines.size()) throw Error(ErrorKind::OutOfRange, "level index must lie in 1..|H|");
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (lines[a] == lines[b]) throw Error(ErrorKind::DuplicateLine, "repeated line in a class");
    }
  }

  std::vector<Rational> crossings;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const Rational da = slope_of(lines[a]);
      const Rational db = slope_of(lines[b]);
      if (da == db) continue;
      crossings.push_back((value_at(lines[b], 0) - value_at(lines[a], 0)) / (da - db));
    }
  }
  std::sort(crossings.begin(), crossings.end());
  crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());

  // Between consecutive crossings the vertical order of the lines is fixed;
  // the level follows the k-th lowest one.
  std::vector<Rational> samples;
  if (crossings.empty()) {
    samples.emplace_back(0);
  } else {
    samples.push_back(crossings.front() - 1);
    for (std::size_t j = 1; j < crossings.size(); ++j) samples.push_back((crossings[j - 1] + crossings[j]) / 2);
    samples.push_back(crossings.back() + 1);
  }
  LevelPolyline level;
  level.k = k;
  std::vector<std::size_t> order(lines.size());
  for (std::size_t j = 0; j < samples.size(); ++j) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k - 1), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return value_at(lines[a], samples[j]) < value_at(lines[b], samples[j]);
                     });
    const Hyperplane& h = lines[order[k - 1]];
    if (!level.lines.empty() && level.lines.back() == h) continue;
    if (!level.lines.empty()) level.vertices.push_back({crossings[j - 1], value_at(h, crossings[j - 1])});
    level.lines.push_back(h);
  }
  return level;
}

LevelPolyline k_level_framed(const std::vector<Hyperplane>& lines, std::size_t k) {
  const Rotation2 frame = upward_frame(lines);
  std::vector<Hyperplane> rotated;
  for (const Hyperplane& h : lines) rotated.push_back(frame.apply(h));
  LevelPolyline level = k_level(rotated, k);
  level.frame = frame;
  return level;
}

LineCounts line_counts(const std::vector<Hyperplane>& lines, const Point& p) {
  LineCounts counts;
  for (const Hyperplane& h : lines) {
    switch (classify(h, p)) {
      case Sign::Above: ++counts.above; break;
      case Sign::On: ++counts.on; break;
      case Sign::Below: break;
    }
  }
  return counts;
}

double signed_level_distance(const LevelPolyline& level, const Point& x) {
  const Sign s = level.side(x);
  if (s == Sign::On) return 0.0;
  const double magnitude = std::sqrt(level.squared_distance(x).get_d());
  return s == Sign::Above ? magnitude : -magnitude;
}

std::vector<Point> level_intersections(const LevelPolyline& a, const LevelPolyline& b) {
  std::set<Point> found;
  for (const Hyperplane& la : a.world_lines()) {
    for (const Hyperplane& lb : b.world_lines()) {
      auto p = solve_linear({la.normal, lb.normal}, {la.offset, lb.offset});
      if (p && a.side(*p) == Sign::On && b.side(*p) == Sign::On) found.insert(std::move(*p));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace hamcut

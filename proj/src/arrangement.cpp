#include "hamcut/arrangement.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hamcut/error.hpp"
#include "hamcut/linear_program.hpp"

namespace hamcut {

ColoredLineArrangement::ColoredLineArrangement(std::size_t dimension, std::vector<std::vector<Hyperplane>> classes)
    : dimension_(dimension), classes_(std::move(classes)) {
  if (dimension_ == 0 || classes_.size() != dimension_) {
    throw Error(ErrorKind::DimensionMismatch, "an arrangement in R^d needs d classes");
  }
  for (const auto& cls : classes_) {
    if (cls.empty()) throw Error(ErrorKind::DimensionMismatch, "every class needs at least one hyperplane");
    for (std::size_t a = 0; a < cls.size(); ++a) {
      if (cls[a].dimension() != dimension_) throw Error(ErrorKind::DimensionMismatch, "hyperplane dimension");
      for (std::size_t b = 0; b < a; ++b) {
        if (cls[a] == cls[b]) throw Error(ErrorKind::DuplicateLine, "a class repeats a hyperplane");
      }
    }
  }
}

std::vector<std::size_t> ColoredLineArrangement::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& cls : classes_) out.push_back(cls.size());
  return out;
}

ColoredLineArrangement dualize(const ColoredPointSet& set) {
  if (set.dimension() != 2) throw Error(ErrorKind::DimensionMismatch, "duality is planar");
  std::vector<std::vector<Hyperplane>> classes(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (const Point& p : set.points(i)) classes[i].push_back(dualize(p));
  }
  return ColoredLineArrangement(2, std::move(classes));
}

std::optional<Point> colorful_intersection(const ColoredLineArrangement& arrangement,
                                           const std::vector<std::size_t>& tuple) {
  Matrix a;
  std::vector<Rational> b;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const Hyperplane& h = arrangement.lines(i).at(tuple[i]);
    a.push_back(h.normal);
    b.push_back(h.offset);
  }
  return solve_linear(std::move(a), std::move(b));
}

namespace {

// Rows s_i (w . x) >= s_i c + margin over every hyperplane.
std::vector<LinearConstraint> sign_rows(const ColoredLineArrangement& arrangement, std::uint32_t positive,
                                        bool homogeneous, int margin) {
  std::vector<LinearConstraint> rows;
  for (std::size_t i = 0; i < arrangement.dimension(); ++i) {
    const bool plus = (positive >> i) & 1U;
    for (const Hyperplane& h : arrangement.lines(i)) {
      const Rational c = homogeneous ? Rational(0) : h.offset;
      if (plus) {
        rows.push_back({h.normal, Relation::GreaterEqual, c + margin});
      } else {
        rows.push_back({h.normal, Relation::LessEqual, c - margin});
      }
    }
  }
  return rows;
}

}  // namespace

std::optional<Point> strict_direction(const ColoredLineArrangement& arrangement, std::uint32_t positive_classes) {
  return find_feasible_point(sign_rows(arrangement, positive_classes, true, 1), arrangement.dimension());
}

RainbowReport verify_rainbow_ws(const ColoredLineArrangement& arrangement) {
  RainbowReport report;
  const std::size_t d = arrangement.dimension();
  for_each_tuple(arrangement.sizes(), [&](const std::vector<std::size_t>& tuple) {
    if (!report.rainbow) return;
    Matrix normals;
    for (std::size_t i = 0; i < d; ++i) normals.push_back(arrangement.lines(i)[tuple[i]].normal);
    if (determinant(std::move(normals)) == 0) {
      report.rainbow = false;
      report.non_rainbow_tuple = tuple;
    }
  });

  for (std::uint32_t s = 0; s < (1U << d); ++s) {
    auto point = find_feasible_point(sign_rows(arrangement, s, false, 1), d);
    std::optional<Point> direction;
    if (point) {
      // The open cell {s_i (w . y - c) > 0} is unbounded iff its closure has
      // a nonzero recession direction; pin one coordinate to +-1.
      const auto cone = sign_rows(arrangement, s, true, 0);
      for (std::size_t k = 0; k < d && !direction; ++k) {
        for (int pin : {1, -1}) {
          auto rows = cone;
          std::vector<Rational> unit(d);
          unit[k] = 1;
          rows.push_back({std::move(unit), Relation::Equal, Rational(pin)});
          direction = find_feasible_point(rows, d);
          if (direction) break;
        }
      }
    }
    if (!point || !direction) {
      report.well_separated = false;
      report.failing_sign_vector = s;
      report.cell_points.clear();
      report.cell_directions.clear();
      break;
    }
    report.cell_points.push_back(std::move(*point));
    report.cell_directions.push_back(std::move(*direction));
  }
  return report;
}

Point x_alpha_bruteforce(const ColoredLineArrangement& arrangement, const std::vector<std::size_t>& alpha) {
  const std::size_t d = arrangement.dimension();
  if (alpha.size() != d) throw Error(ErrorKind::OutOfRange, "alpha needs one entry per class");
  for (std::size_t i = 0; i < d; ++i) {
    if (alpha[i] < 1 || alpha[i] > arrangement.size(i)) throw Error(ErrorKind::OutOfRange, "alpha_i must lie in 1..n_i");
  }
  std::vector<Point> found;
  for_each_tuple(arrangement.sizes(), [&](const std::vector<std::size_t>& tuple) {
    auto x = colorful_intersection(arrangement, tuple);
    if (!x) return;
    for (std::size_t i = 0; i < d; ++i) {
      const SideCounts c = [&] {
        SideCounts counts;
        for (const Hyperplane& h : arrangement.lines(i)) {
          switch (classify(h, *x)) {
            case Sign::Below: ++counts.below; break;
            case Sign::On: ++counts.on; break;
            case Sign::Above: ++counts.above; break;
          }
        }
        return counts;
      }();
      if (c.on != 1 || c.above != alpha[i] - 1) return;
    }
    found.push_back(std::move(*x));
  });
  if (found.empty()) throw Error(ErrorKind::NoPoint, "no colorful intersection has the requested counts");
  if (found.size() > 1) {
    std::ostringstream out;
    for (const Point& p : found) {
      out << " (";
      for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << to_string(p[i]);
      out << ')';
    }
    throw Error(ErrorKind::MultiplePoints, "candidates" + out.str());
  }
  return std::move(found.front());
}

Rotation2 upward_frame(const std::vector<Hyperplane>& lines) {
  bool upward = true;
  for (const Hyperplane& h : lines) {
    if (h.dimension() != 2) throw Error(ErrorKind::DimensionMismatch, "frames are planar");
    upward = upward && h.normal[1] > 0;
  }
  if (upward) return {};
  std::vector<LinearConstraint> rows;
  for (const Hyperplane& h : lines) rows.push_back({h.normal, Relation::GreaterEqual, Rational(1)});
  auto u = find_feasible_point(rows, 2);
  if (!u) throw Error(ErrorKind::OrientationNotNormalized, "normals do not lie in an open half-plane");

  // Rotate the common direction u onto (0, 1), approximately: any rotation
  // close enough keeps every normal strictly upward.
  Rotation2 base;
  double ux = (*u)[0].get_d();
  double uy = (*u)[1].get_d();
  double phi = std::numbers::pi / 2 - std::atan2(uy, ux);
  while (phi > std::numbers::pi) phi -= 2 * std::numbers::pi;
  while (phi <= -std::numbers::pi) phi += 2 * std::numbers::pi;
  if (std::abs(phi) > std::numbers::pi / 2) {
    base = {Rational(-1), Rational(0)};
    phi += phi > 0 ? -std::numbers::pi : std::numbers::pi;
  }
  const double t = std::tan(phi / 2);
  for (int bits = 4; bits <= 60; bits += 4) {
    const double scale = std::ldexp(1.0, bits);
    mpz_class num(static_cast<long>(std::llround(t * scale)));
    mpz_class den(1);
    den <<= static_cast<unsigned>(bits);
    Rational half_tangent(num, den);
    half_tangent.canonicalize();
    const Rotation2 r = Rotation2::from_half_tangent(half_tangent) * base;
    bool ok = true;
    for (const Hyperplane& h : lines) ok = ok && (r.sin * h.normal[0] + r.cos * h.normal[1]) > 0;
    if (ok) return r;
  }
  throw Error(ErrorKind::OrientationNotNormalized, "no rational rotation found for the class");
}

}  // namespace hamcut

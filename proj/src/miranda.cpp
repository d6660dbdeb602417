#include "hamcut/miranda.hpp"

#include <algorithm>
#include <array>

#include "hamcut/error.hpp"

namespace hamcut {

namespace {

std::pair<int, int> extend(std::pair<int, int> range, int s) {
  return {std::min(range.first, s), std::max(range.second, s)};
}

}  // namespace

AffineFunction::AffineFunction(std::vector<Rational> coeffs, Rational constant)
    : coeffs_(std::move(coeffs)), constant_(std::move(constant)) {}

int AffineFunction::sign_at(const Point& p) const { return sign(dot(coeffs_, p) + constant_); }

double AffineFunction::value(const Point& p) const { return to_double(dot(coeffs_, p) + constant_); }

std::pair<int, int> AffineFunction::sign_range(const std::vector<Point>& polygon) const {
  std::pair<int, int> range{1, -1};
  for (const Point& p : polygon) range = extend(range, sign_at(p));
  return range;
}

LevelDistanceFunction::LevelDistanceFunction(LevelPolyline level) : level_(std::move(level)) {}

int LevelDistanceFunction::sign_at(const Point& p) const { return static_cast<int>(level_.side(p)); }

double LevelDistanceFunction::value(const Point& p) const { return signed_level_distance(level_, p); }

std::pair<int, int> LevelDistanceFunction::sign_range(const std::vector<Point>& polygon) const {
  // In the level's frame the sign is that of y - L(x), which is linear on
  // every vertical slab between breakpoints; its extremes over a convex
  // polygon sit at polygon vertices or where slab walls cut polygon edges.
  std::vector<Point> local;
  for (const Point& p : polygon) local.push_back(level_.frame.apply(p));
  std::vector<Point> candidates = local;
  for (const Point& v : level_.vertices) {
    const Rational& wall = v[0];
    for (std::size_t e = 0; e < local.size(); ++e) {
      const Point& a = local[e];
      const Point& b = local[(e + 1) % local.size()];
      if ((a[0] < wall && b[0] > wall) || (a[0] > wall && b[0] < wall)) {
        const Rational t = (wall - a[0]) / (b[0] - a[0]);
        candidates.push_back({wall, a[1] + t * (b[1] - a[1])});
      }
    }
  }
  std::pair<int, int> range{1, -1};
  for (const Point& c : candidates) range = extend(range, sign(c[1] - level_.height_at(c[0])));
  return range;
}

namespace {

struct Box {
  std::array<Rational, 2> low;
  std::array<Rational, 2> high;
};

Point place(const MirandaProblem& problem, const Rational& t1, const Rational& t2) {
  Point p = problem.origin;
  for (std::size_t c = 0; c < 2; ++c) p[c] += t1 * problem.axes[0][c] + t2 * problem.axes[1][c];
  return p;
}

std::vector<Point> corners(const MirandaProblem& problem, const Box& box) {
  return {place(problem, box.low[0], box.low[1]), place(problem, box.high[0], box.low[1]),
          place(problem, box.high[0], box.high[1]), place(problem, box.low[0], box.high[1])};
}

Rational squared_length(const Point& v) { return v[0] * v[0] + v[1] * v[1]; }

void require_planar(const MirandaProblem& problem) {
  if (problem.box.size() != 2 || problem.axes.size() != 2 || problem.functions.size() != 2 ||
      problem.origin.size() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "the subdivision solver is planar");
  }
  for (const auto& [low, high] : problem.box) {
    if (!(low < high)) throw Error(ErrorKind::OutOfRange, "empty box");
  }
}

}  // namespace

void check_miranda_contract(const MirandaProblem& problem) {
  require_planar(problem);
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t j = 1 - i;
    for (bool high : {false, true}) {
      std::array<Rational, 2> a;
      std::array<Rational, 2> b;
      a[i] = b[i] = high ? problem.box[i].second : problem.box[i].first;
      a[j] = problem.box[j].first;
      b[j] = problem.box[j].second;
      const auto range = problem.functions[i]->sign_range({place(problem, a[0], a[1]), place(problem, b[0], b[1])});
      if (high ? range.first < 0 : range.second > 0) {
        throw Error(ErrorKind::ContractViolated, "f_" + std::to_string(i + 1) + " has the wrong sign on the " +
                                                     (high ? "upper" : "lower") + " face");
      }
    }
  }
}

MirandaResult miranda_solve(const MirandaProblem& problem, const Rational& tol) {
  if (tol <= 0) throw Error(ErrorKind::OutOfRange, "tolerance must be positive");
  check_miranda_contract(problem);
  const Rational tol2 = tol * tol;
  const std::array<Rational, 2> axis_len2{squared_length(problem.axes[0]), squared_length(problem.axes[1])};

  MirandaResult result;
  std::vector<Box> stack{{{problem.box[0].first, problem.box[1].first}, {problem.box[0].second, problem.box[1].second}}};
  while (!stack.empty()) {
    Box box = std::move(stack.back());
    stack.pop_back();
    ++result.boxes_examined;
    const auto poly = corners(problem, box);
    bool excluded = false;
    for (const auto& f : problem.functions) {
      const auto [lo, hi] = f->sign_range(poly);
      if (lo > 0 || hi < 0) {
        excluded = true;
        break;
      }
    }
    if (excluded) continue;
    const Point d1{poly[2][0] - poly[0][0], poly[2][1] - poly[0][1]};
    const Point d2{poly[3][0] - poly[1][0], poly[3][1] - poly[1][1]};
    if (std::max(squared_length(d1), squared_length(d2)) <= tol2) {
      result.point = place(problem, (box.low[0] + box.high[0]) / 2, (box.low[1] + box.high[1]) / 2);
      for (const auto& f : problem.functions) result.values.push_back(f->value(result.point));
      return result;
    }
    std::array<Rational, 2> extent2;
    for (std::size_t c = 0; c < 2; ++c) {
      const Rational w = box.high[c] - box.low[c];
      extent2[c] = w * w * axis_len2[c];
    }
    const std::size_t axis = extent2[0] >= extent2[1] ? 0 : 1;
    const Rational mid = (box.low[axis] + box.high[axis]) / 2;
    Box first = box;
    Box second = box;
    first.high[axis] = mid;
    second.low[axis] = mid;
    stack.push_back(std::move(second));
    stack.push_back(std::move(first));
  }
  throw Error(ErrorKind::NoRoot, "every box was excluded");
}

MirandaProblem level_problem(const ColoredLineArrangement& arrangement, const std::vector<std::size_t>& alpha) {
  if (arrangement.dimension() != 2 || alpha.size() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "level problems are planar");
  }
  auto plus_plus = strict_direction(arrangement, 0b11);
  auto plus_minus = strict_direction(arrangement, 0b01);
  if (!plus_plus || !plus_minus) {
    throw Error(ErrorKind::PreconditionFailed, "arrangement lacks strict directions for (+,+) and (+,-)");
  }
  // Every hyperplane has w . u >= 1 for the directions used on a face, so a
  // scale beyond every |offset| puts the faces strictly on one side.
  Rational scale = 1;
  for (const auto& cls : arrangement.classes()) {
    for (const Hyperplane& h : cls) scale = std::max(scale, Rational(abs(h.offset) + 1));
  }
  MirandaProblem problem;
  problem.box = {{Rational(-1), Rational(1)}, {Rational(-1), Rational(1)}};
  problem.origin = {Rational(0), Rational(0)};
  Point e1(2);
  Point e2(2);
  for (std::size_t c = 0; c < 2; ++c) {
    e1[c] = scale * ((*plus_plus)[c] + (*plus_minus)[c]) / 2;
    e2[c] = scale * ((*plus_plus)[c] - (*plus_minus)[c]) / 2;
  }
  problem.axes = {e1, e2};
  for (std::size_t i = 0; i < 2; ++i) {
    problem.functions.push_back(
        std::make_shared<LevelDistanceFunction>(k_level_framed(arrangement.lines(i), alpha.at(i))));
  }
  return problem;
}

}  // namespace hamcut

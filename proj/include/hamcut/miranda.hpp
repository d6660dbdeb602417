#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "hamcut/arrangement.hpp"
#include "hamcut/geometry.hpp"
#include "hamcut/levels.hpp"

namespace hamcut {

/// Planar function with exact sign information over convex polygons.
class MirandaFunction {
 public:
  virtual ~MirandaFunction() = default;
  virtual int sign_at(const Point& p) const = 0;
  virtual double value(const Point& p) const = 0;
  /// (min sign, max sign) over the convex polygon with the given vertices.
  virtual std::pair<int, int> sign_range(const std::vector<Point>& polygon) const = 0;
};

/// f(p) = coeffs . p + constant.
class AffineFunction : public MirandaFunction {
 public:
  AffineFunction(std::vector<Rational> coeffs, Rational constant);
  int sign_at(const Point& p) const override;
  double value(const Point& p) const override;
  std::pair<int, int> sign_range(const std::vector<Point>& polygon) const override;

 private:
  std::vector<Rational> coeffs_;
  Rational constant_;
};

/// Signed Euclidean distance to a level polyline.
class LevelDistanceFunction : public MirandaFunction {
 public:
  explicit LevelDistanceFunction(LevelPolyline level);
  int sign_at(const Point& p) const override;
  double value(const Point& p) const override;
  std::pair<int, int> sign_range(const std::vector<Point>& polygon) const override;
  const LevelPolyline& level() const { return level_; }

 private:
  LevelPolyline level_;
};

/// Box [low_1, high_1] x [low_2, high_2] in parameters t, placed in the
/// plane by p(t) = origin + t_1 axes[0] + t_2 axes[1]. Contract: f_i <= 0 on
/// the face t_i = low_i and f_i >= 0 on the face t_i = high_i.
struct MirandaProblem {
  std::vector<std::pair<Rational, Rational>> box;
  Point origin;
  std::vector<Point> axes;
  std::vector<std::shared_ptr<const MirandaFunction>> functions;
};

struct MirandaResult {
  Point point;
  std::vector<double> values;
  std::size_t boxes_examined = 0;
};

/// Throws ContractViolated if some face has the wrong sign anywhere (exact
/// check over the face segment).
void check_miranda_contract(const MirandaProblem& problem);

/// Longest-axis bisection. A box is dropped when some f_i has a strict
/// constant sign over it; the first surviving box whose image has diameter
/// at most tol is returned by its center. Throws ContractViolated, NoRoot.
MirandaResult miranda_solve(const MirandaProblem& problem, const Rational& tol);

/// The problem whose root is x_alpha of a rainbow well-separated planar
/// arrangement: f_i is the signed distance to the alpha_i-level of class i,
/// and the box is spanned by strict directions for (+,+) and (+,-).
MirandaProblem level_problem(const ColoredLineArrangement& arrangement, const std::vector<std::size_t>& alpha);

}  // namespace hamcut

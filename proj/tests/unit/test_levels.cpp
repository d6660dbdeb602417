#include <doctest.h>

#include <cmath>
#include <set>

#include "hamcut/alpha_cut.hpp"
#include "hamcut/arrangement.hpp"
#include "hamcut/error.hpp"
#include "hamcut/generate.hpp"
#include "hamcut/levels.hpp"
#include "hamcut/miranda.hpp"
#include "support.hpp"

using namespace hamcut;

namespace {

Hyperplane horizontal(long c) { return make_hyperplane({0, 1}, c); }  // y = c, up
Hyperplane vertical(long c) { return make_hyperplane({1, 0}, c); }    // x = c, right

ColoredLineArrangement square() {
  return ColoredLineArrangement(2, {{horizontal(0), horizontal(1)}, {vertical(0), vertical(1)}});
}

// On the k-level: on some line, strictly above fewer than k, on-or-above at least k.
bool on_level(const std::vector<Hyperplane>& lines, std::size_t k, const Point& p) {
  const LineCounts c = line_counts(lines, p);
  return c.on >= 1 && c.above < k && c.above + c.on >= k;
}

Point midpoint(const Point& a, const Point& b) { return {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2}; }

void check_level_points(const std::vector<Hyperplane>& lines, const LevelPolyline& level) {
  const std::vector<Point> v = level.world_vertices();
  for (const Point& p : v) CHECK(on_level(lines, level.k, p));
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(on_level(lines, level.k, midpoint(v[i - 1], v[i])));
  // Points out along both rays.
  const Point start = v.empty() ? Point{0, level.height_at(0)} : v.front();
  const Point end = v.empty() ? start : v.back();
  const Point l = level.left_ray_direction(), r = level.right_ray_direction();
  CHECK(on_level(lines, level.k, {start[0] + l[0], start[1] + l[1]}));
  CHECK(on_level(lines, level.k, {end[0] + r[0], end[1] + r[1]}));
}

std::vector<Hyperplane> random_upward_lines(Rng& rng, std::size_t n) {
  std::vector<Hyperplane> lines;
  while (lines.size() < n) {
    const Hyperplane h = line_from_slope(random_rational(rng, -20, 20, 3), random_rational(rng, -20, 20, 3));
    if (std::find(lines.begin(), lines.end(), h) == lines.end()) lines.push_back(h);
  }
  return lines;
}

}  // namespace

TEST_CASE("rainbow and well-separation flags") {
  const RainbowReport r = verify_rainbow_ws(square());
  CHECK(r.rainbow);
  CHECK(r.well_separated);
  REQUIRE(r.cell_directions.size() == 4);
  for (std::uint32_t s = 0; s < 4; ++s) {
    const int s_red = (s & 1) ? 1 : -1, s_blue = (s & 2) ? 1 : -1;
    const Point& p = r.cell_points[s];
    CHECK(sgn(p[1]) * s_red > 0);
    CHECK(sgn(p[1] - 1) * s_red > 0);
    CHECK(sgn(p[0]) * s_blue > 0);
    CHECK(sgn(p[0] - 1) * s_blue > 0);
    const Point& u = r.cell_directions[s];
    CHECK((u[0] != 0 || u[1] != 0));
    CHECK(sgn(u[1]) * s_red >= 0);
    CHECK(sgn(u[0]) * s_blue >= 0);
    const auto strict = strict_direction(square(), s);
    REQUIRE(strict);
    CHECK(sgn((*strict)[1]) == s_red);
    CHECK(sgn((*strict)[0]) == s_blue);
  }

  // Reds y = 0 (up) and y = x (positive side below it), blue x = 0 (right):
  // no far point is above y = 0, below y = x and left of x = 0.
  const ColoredLineArrangement skew(2, {{horizontal(0), make_hyperplane({1, -1}, 0)}, {vertical(0)}});
  const RainbowReport s = verify_rainbow_ws(skew);
  CHECK(s.rainbow);
  CHECK(!s.well_separated);
  REQUIRE(s.failing_sign_vector);
  CHECK(*s.failing_sign_vector == 1);

  const ColoredLineArrangement parallel(2, {{horizontal(0)}, {horizontal(1)}});
  const RainbowReport p = verify_rainbow_ws(parallel);
  CHECK(!p.rainbow);
  CHECK(*p.non_rainbow_tuple == std::vector<std::size_t>{0, 0});
}

TEST_CASE("k-levels of small line sets") {
  const std::vector<Hyperplane> two{horizontal(0), horizontal(1)};
  CHECK(k_level(two, 1).height_at(7) == 0);
  CHECK(k_level(two, 2).height_at(-7) == 1);
  CHECK(k_level(two, 1).vertices.empty());

  // {y = 0, y = x}: the 2-level is the upper envelope, bending at the origin.
  const std::vector<Hyperplane> cross{horizontal(0), line_from_slope(1, 0)};
  const LevelPolyline upper = k_level(cross, 2);
  REQUIRE(upper.vertices.size() == 1);
  CHECK(upper.vertices[0] == Point{0, 0});
  CHECK(upper.height_at(-1) == 0);
  CHECK(upper.height_at(2) == 2);
  CHECK(k_level(cross, 1).height_at(-1) == -1);
  CHECK(k_level(cross, 1).height_at(2) == 0);

  CHECK_THROWS_AS(k_level(two, 3), Error);
  CHECK_THROWS_AS(k_level(two, 0), Error);
  try {
    k_level({make_hyperplane({0, -1}, 0)}, 1);
    FAIL("expected OrientationNotNormalized");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrientationNotNormalized);
  }
}

TEST_CASE("k-level points satisfy the defining counts") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<Hyperplane> lines = random_upward_lines(rng, 1 + trial % 6);
    std::vector<LevelPolyline> levels;
    for (std::size_t k = 1; k <= lines.size(); ++k) {
      levels.push_back(k_level(lines, k));
      check_level_points(lines, levels.back());
    }
    // Lower levels never pass strictly above higher ones.
    for (int s = 0; s < 20; ++s) {
      const Rational x = random_rational(rng, -40, 40, 7);
      for (std::size_t k = 1; k < levels.size(); ++k) CHECK(levels[k - 1].height_at(x) <= levels[k].height_at(x));
    }
  }
}

TEST_CASE("levels of tilted lines are taken in a rotated frame") {
  // Every positive side faces right; no line is upward in world coordinates.
  const std::vector<Hyperplane> lines{make_hyperplane({1, 0}, 0), make_hyperplane({2, 1}, 3), make_hyperplane({3, -1}, 1)};
  CHECK_THROWS_AS(k_level(lines, 1), Error);
  for (std::size_t k = 1; k <= 3; ++k) {
    const LevelPolyline level = k_level_framed(lines, k);
    CHECK(!(level.frame == Rotation2{}));
    check_level_points(lines, level);
  }
}

TEST_CASE("signed level distance") {
  const LevelPolyline flat = k_level({horizontal(0)}, 1);
  CHECK(signed_level_distance(flat, {0, -3}) == -3.0);
  CHECK(signed_level_distance(flat, {4, 0}) == 0.0);
  CHECK(signed_level_distance(flat, {4, 2}) == 2.0);
  CHECK(signed_level_distance(k_level({horizontal(0), horizontal(1)}, 2), {5, Rational(1, 2)}) == -0.5);
  // Distance to the bent upper envelope is Euclidean, not vertical.
  const LevelPolyline upper = k_level({horizontal(0), line_from_slope(1, 0)}, 2);
  CHECK(signed_level_distance(upper, {2, 0}) == doctest::Approx(-std::sqrt(2.0)));
  CHECK(upper.squared_distance({2, 0}) == 2);
}

TEST_CASE("x_alpha on the unit square arrangement") {
  const ColoredLineArrangement a = square();
  CHECK(x_alpha_bruteforce(a, {1, 1}) == Point{0, 0});
  CHECK(x_alpha_bruteforce(a, {2, 2}) == Point{1, 1});
  std::set<Point> hit;
  for (std::size_t i = 1; i <= 2; ++i) {
    for (std::size_t j = 1; j <= 2; ++j) hit.insert(x_alpha_bruteforce(a, {i, j}));
  }
  CHECK(hit.size() == 4);
  CHECK_THROWS_AS(x_alpha_bruteforce(a, {3, 1}), Error);
}

TEST_CASE("Miranda solver") {
  MirandaProblem identity;
  identity.box = {{-1, 1}, {-1, 1}};
  identity.origin = {0, 0};
  identity.axes = {{1, 0}, {0, 1}};
  identity.functions = {std::make_shared<AffineFunction>(std::vector<Rational>{1, 0}, 0),
                        std::make_shared<AffineFunction>(std::vector<Rational>{0, 1}, 0)};
  const MirandaResult r = miranda_solve(identity, Rational(1, 1000000000));
  CHECK(std::abs(to_double(r.point[0])) < 1e-9);
  CHECK(std::abs(to_double(r.point[1])) < 1e-9);

  // x + 1 vanishes on the face x = -1, which the contract allows.
  MirandaProblem touching = identity;
  touching.functions[0] = std::make_shared<AffineFunction>(std::vector<Rational>{1, 0}, 1);
  CHECK_NOTHROW(check_miranda_contract(touching));
  MirandaProblem shifted = identity;
  shifted.functions[0] = std::make_shared<AffineFunction>(std::vector<Rational>{1, 0}, 2);
  try {
    miranda_solve(shifted, Rational(1, 1000));
    FAIL("expected ContractViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ContractViolated);
  }

  const MirandaResult sq = miranda_solve(level_problem(square(), {2, 2}), Rational(1, 1000000000));
  CHECK(std::abs(to_double(sq.point[0]) - 1) < 1e-6);
  CHECK(std::abs(to_double(sq.point[1]) - 1) < 1e-6);
}

TEST_CASE("x_alpha on dual arrangements of well-separated point sets") {
  Rng rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    const ColoredPointSet set = generate_well_separated(2, random_sizes(2, 1, 4, rng), rng);
    const ColoredLineArrangement arr = dualize(set);
    const RainbowReport rep = verify_rainbow_ws(arr);
    REQUIRE(rep.rainbow);
    REQUIRE(rep.well_separated);
    const auto cuts = all_alpha_cuts(set);
    std::set<Point> hit;
    for (std::size_t a = 1; a <= set.size(0); ++a) {
      for (std::size_t b = 1; b <= set.size(1); ++b) {
        const Point x = x_alpha_bruteforce(arr, {a, b});
        hit.insert(x);
        const auto meet = level_intersections(k_level(arr.lines(0), a), k_level(arr.lines(1), b));
        CHECK(meet == std::vector<Point>{x});
        // Duality swaps above and below: x_alpha is dual to the cut with
        // alpha_i - 1 points above, i.e. alpha_i' = n_i + 1 - alpha_i.
        Hyperplane h = cuts.at({set.size(0) + 1 - a, set.size(1) + 1 - b}).hyperplane;
        if (h.normal[1] < 0) h = flipped(h);
        CHECK(dualize_line(h) == x);
        if (trial < 8) {
          const MirandaResult m = miranda_solve(level_problem(arr, {a, b}), Rational(1, 1000000000));
          CHECK(std::hypot(to_double(m.point[0] - x[0]), to_double(m.point[1] - x[1])) < 1e-6);
        }
      }
    }
    CHECK(hit.size() == set.size(0) * set.size(1));
  }
}

#include <doctest.h>

#include "hamcut/error.hpp"
#include "hamcut/geometry.hpp"
#include "support.hpp"

using namespace hamcut;

namespace {

std::vector<Point> span_of(std::initializer_list<Point> pts) { return pts; }

}  // namespace

TEST_CASE("rationals parse and print in reduced form") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("+8/2")) == "4");
  CHECK(to_string(Rational(0)) == "0");
  for (const char* bad : {"", "1/0", "1/-2", "x", "1/2/3", "--1", "1.5"}) {
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("orient examples") {
  CHECK(orient(span_of({{0, 0}, {1, 0}}), {0, 1}) == Sign::Above);
  CHECK(orient(span_of({{0, 0}, {1, 0}}), {Rational(1, 2), 0}) == Sign::On);
  CHECK(orient(span_of({{3}}), {5}) == Sign::Below);
  CHECK_THROWS_AS(orient(span_of({{0, 0}, {0, 0}}), {1, 1}), Error);
  CHECK_THROWS_AS(orient(span_of({{0, 0}, {1, 0, 0}}), {1, 1}), Error);
  try {
    orient(span_of({{1, 1}, {1, 1}}), {0, 0});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateSpan);
  }
}

TEST_CASE("orient matches the Leibniz determinant and is antisymmetric") {
  std::mt19937_64 rng(11);
  for (std::size_t d : {1u, 2u, 3u, 4u}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Point> s;
      for (std::size_t i = 0; i < d; ++i) s.push_back(oracle::random_point(rng, d));
      if (!affinely_independent(s)) continue;
      const Point q = oracle::random_point(rng, d);
      const int expected = oracle::orient_sign(s, q);
      CHECK(static_cast<int>(orient(s, q)) == expected);
      if (d >= 2) {
        std::swap(s[0], s[1]);
        CHECK(static_cast<int>(orient(s, q)) == -expected);
      }
    }
  }
}

TEST_CASE("hyperplane_through examples") {
  const Hyperplane a = hyperplane_through(span_of({{0, 0}, {1, 0}}));
  CHECK(a.normal == std::vector<Rational>{0, 1});
  CHECK(a.offset == 0);
  CHECK(classify(a, {0, 1}) == orient(span_of({{0, 0}, {1, 0}}), {0, 1}));
  CHECK(classify(a, {0, -1}) == orient(span_of({{0, 0}, {1, 0}}), {0, -1}));

  const Hyperplane b = hyperplane_through(span_of({{0, 0}, {0, 1}}));
  CHECK(b.normal == std::vector<Rational>{-1, 0});
  CHECK(b.offset == 0);

  const Hyperplane c = hyperplane_through(span_of({{0}}));
  CHECK(c.normal == std::vector<Rational>{-1});
  CHECK(c.offset == 0);
  CHECK_THROWS_AS(hyperplane_through(span_of({{1, 2}, {1, 2}})), Error);
}

TEST_CASE("hyperplane_through agrees with orient on 1000 random queries") {
  std::mt19937_64 rng(5);
  for (std::size_t d : {2u, 3u}) {
    std::vector<Point> s;
    do {
      s.clear();
      for (std::size_t i = 0; i < d; ++i) s.push_back(oracle::random_point(rng, d));
    } while (!affinely_independent(s));
    const Hyperplane h = hyperplane_through(s);
    for (int i = 0; i < 1000; ++i) {
      Point q = oracle::random_point(rng, d, 10, 3);
      if (i % 10 == 0) {
        // Exercise On: an affine combination of the spanning points.
        q = s[0];
        const Rational t = oracle::random_rational(rng, 3, 5);
        for (std::size_t c = 0; c < d; ++c) q[c] += t * (s[1][c] - s[0][c]);
      }
      REQUIRE(static_cast<int>(classify(h, q)) == oracle::orient_sign(s, q));
    }
  }
}

TEST_CASE("canonical hyperplanes compare syntactically") {
  CHECK(make_hyperplane({2, 4}, 6) == make_hyperplane({1, 2}, 3));
  CHECK(make_hyperplane({0, -3}, 6) == Hyperplane{{0, -1}, 2});
  CHECK(make_hyperplane({-2, 1}, 1).normal[0] == -1);
  CHECK(flipped(make_hyperplane({1, 2}, 3)) == make_hyperplane({-1, -2}, -3));
  CHECK_THROWS_AS(make_hyperplane({0, 0}, 1), Error);
}

TEST_CASE("side_counts examples") {
  const Hyperplane x_axis = make_hyperplane({0, 1}, 0);
  const std::vector<Point> s{{0, 1}, {0, -1}, {1, 0}};
  CHECK(side_counts(x_axis, s) == SideCounts{1, 1, 1});
  CHECK(side_counts(x_axis, std::vector<Point>{}) == SideCounts{0, 0, 0});
  const Hyperplane diag = hyperplane_through(span_of({{0, 0}, {1, 1}}));
  const std::vector<Point> t{{2, 0}, {0, 2}};
  const SideCounts c = side_counts(diag, t);
  CHECK(c == SideCounts{1, 0, 1});
  // Which of the two is below follows the determinant rule.
  CHECK(classify(diag, {2, 0}) == sign_of(oracle::orient_sign({{0, 0}, {1, 1}}, {2, 0})));
  CHECK_THROWS_AS(side_counts(x_axis, std::vector<Point>{{1, 2, 3}}), Error);
}

TEST_CASE("duality examples") {
  const Hyperplane d0 = dualize(Point{0, 0});
  CHECK(d0 == line_from_slope(0, 0));
  CHECK(dualize_line(d0) == Point{0, 0});
  const Point p{1, 2};
  const Point q{0, 0};
  CHECK(classify(dualize(p), q) == Sign::Above);
  CHECK(classify(dualize(q), p) == Sign::Above);
  CHECK_THROWS_AS(dualize_line(make_hyperplane({1, 0}, 3)), Error);
  try {
    dualize_line(make_hyperplane({1, 0}, 3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VerticalLine);
  }
  try {
    dualize_line(make_hyperplane({1, -1}, 0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrientationNotNormalized);
  }
}

TEST_CASE("duality is an involution and preserves incidence symmetrically") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Point p = oracle::random_point(rng, 2, 20, 9);
    const Point q = oracle::random_point(rng, 2, 20, 9);
    REQUIRE(dualize_line(dualize(p)) == p);
    REQUIRE(dualize(dualize_line(dualize(q))) == dualize(q));
    REQUIRE(classify(dualize(p), q) == classify(dualize(q), p));
    // Direct evaluation: q above y = p_x x - p_y.
    const int direct = sgn(q[1] - (p[0] * q[0] - p[1]));
    REQUIRE(static_cast<int>(classify(dualize(p), q)) == direct);
  }
}

TEST_CASE("linear algebra helpers") {
  CHECK(determinant({{1, 2}, {3, 4}}) == -2);
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  CHECK(!solve_linear({{1, 2}, {2, 4}}, {1, 1}));
  CHECK(*solve_linear({{2, 0}, {0, 4}}, {1, 1}) == std::vector<Rational>{Rational(1, 2), Rational(1, 4)});
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    Matrix m;
    for (int r = 0; r < 4; ++r) m.push_back(oracle::random_point(rng, 4, 5, 3));
    CHECK(determinant(m) == oracle::leibniz_det(m));
  }
}

TEST_CASE("rational rotations are exact") {
  const Rotation2 r = Rotation2::from_half_tangent(Rational(1, 3));
  CHECK(r.cos * r.cos + r.sin * r.sin == 1);
  CHECK(r.inverse().apply(r.apply(Point{3, -7})) == Point{3, -7});
  const Hyperplane h = make_hyperplane({1, 2}, 5);
  const Point on{1, 2};
  CHECK(classify(r.apply(h), r.apply(on)) == Sign::On);
  CHECK(classify(r.apply(h), r.apply(Point{10, 10})) == classify(h, Point{10, 10}));
  CHECK((r * r.inverse()) == Rotation2{});
}

#include <doctest.h>

#include "hamcut/alpha_cut.hpp"
#include "hamcut/error.hpp"
#include "hamcut/generate.hpp"
#include "hamcut/io.hpp"
#include "hamcut/svg.hpp"

using namespace hamcut;
using io::Json;

namespace {

template <typename T, typename Read>
void round_trip(const T& value, Read read) {
  const std::string text = io::dump(io::to_json(value));
  const T back = read(io::parse(text));
  CHECK(back == value);
  CHECK(io::dump(io::to_json(back)) == text);
}

bool parse_error(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::ParseError;
  }
  return false;
}

}  // namespace

TEST_CASE("rationals travel as canonical strings") {
  CHECK(io::to_json(ratio(-6, 4)) == Json("-3/2"));
  CHECK(io::to_json(Rational(4)) == Json("4"));
  CHECK(io::rational_from(Json("10/4")) == Rational(5, 2));
  CHECK(io::rational_from(Json(7)) == 7);
  CHECK(parse_error([] { io::rational_from(Json("1/0")); }));
  CHECK(parse_error([] { io::rational_from(Json(0.5)); }));
  CHECK(parse_error([] { io::rational_from(Json("x")); }));
}

TEST_CASE("instances, arrangements and orientations round-trip") {
  Rng rng(20);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const ColoredPointSet set = generate_well_separated(d, random_sizes(d, 1, 3, rng), rng);
    round_trip(set, io::instance_from);
    round_trip(build_sigma(set), io::orientation_from);
    if (d == 2) round_trip(dualize(set), io::arrangement_from);
  }
}

TEST_CASE("orientation JSON matches the line matrices") {
  const GridOrientation o = build_sigma(ColoredPointSet(1, {{{0}, {1}, {2}}}));
  const Json j = io::to_json(o);
  CHECK(j["shape"] == Json::array({3}));
  CHECK(j["lines"][0][0] == Json::parse("[[0,1,1],[-1,0,1],[-1,-1,0]]"));
  Json broken = j;
  broken["lines"][0][0][0][1] = -1;  // no longer antisymmetric
  CHECK(parse_error([&] { io::orientation_from(broken); }));
}

TEST_CASE("stretchability objects round-trip") {
  const AllowableSequence seq{2, {{2, 1}, {1, 2}}};
  round_trip(seq, io::sequence_from);
  round_trip(reduce_to_bicolored(seq), io::description_from);
  round_trip(realize_pseudolines(reduce_to_bicolored(seq)), io::polylines_from);
  const LineArrangement2D straight = realize_straight(seq, {line_from_slope(1, 0), line_from_slope(-1, 0)});
  round_trip(straight, io::lines2d_from);
  CHECK(io::is_straight(io::to_json(straight)));
  CHECK(!io::is_straight(io::to_json(realize_pseudolines(reduce_to_bicolored(seq)))));
}

TEST_CASE("malformed documents raise ParseError") {
  CHECK(parse_error([] { io::parse("{"); }));
  CHECK(parse_error([] { io::instance_from(Json::parse(R"({"dimension": 2})")); }));
  CHECK(parse_error([] { io::instance_from(Json::parse(R"({"dimension": -1, "classes": []})")); }));
  CHECK(parse_error([] { io::sequence_from(Json::parse(R"({"n": 2, "perms": [["a"]]})")); }));
  CHECK(parse_error([] { io::polylines_from(Json::parse(R"({"lines": [{"id": "r1", "color": "green"}]})")); }));
  CHECK(parse_error([] { io::read_file("/nonexistent/hamcut.json"); }));
}

TEST_CASE("cut and report serialization") {
  const ColoredPointSet set(2, {{{0, 0}, {0, 4}}, {{4, 1}, {4, 3}}});
  const Cut cut = find_alpha_cut(set, {1, 2});
  const Json j = io::to_json(cut);
  CHECK(j["alpha"] == Json::array({1, 2}));
  CHECK(j["tuple"] == Json::array({cut.tuple[0], cut.tuple[1]}));
  CHECK(io::hyperplane_from(j["hyperplane"]) == cut.hyperplane);
  CHECK(io::to_json(check_well_separated(set))["satisfied"] == true);
}

TEST_CASE("SVG output is deterministic and planar only") {
  Rng rng(22);
  const ColoredPointSet set = generate_well_separated(2, {3, 3}, rng);
  std::vector<Cut> cuts;
  for (const auto& [alpha, cut] : all_alpha_cuts(set)) cuts.push_back(cut);
  const std::string a = svg::plot_instance(set, cuts);
  CHECK(a == svg::plot_instance(set, cuts));
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("stroke-dasharray") != std::string::npos);

  const ColoredLineArrangement arr = dualize(set);
  const std::string b = svg::plot_arrangement(arr, {k_level(arr.lines(0), 2)}, {x_alpha_bruteforce(arr, {2, 2})});
  CHECK(b == svg::plot_arrangement(arr, {k_level(arr.lines(0), 2)}, {x_alpha_bruteforce(arr, {2, 2})}));
  CHECK(b.find("#c0392b") != std::string::npos);
  CHECK(b.find("#2471a3") != std::string::npos);

  const AllowableSequence seq{2, {{2, 1}, {1, 2}}};
  CHECK(svg::plot_pseudolines(realize_pseudolines(reduce_to_bicolored(seq))).find("polyline") != std::string::npos);

  const ColoredPointSet d3 = generate_well_separated(3, {1, 1, 1}, rng);
  try {
    svg::plot_instance(d3);
    FAIL("expected NotPlottable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPlottable);
  }
}

#pragma once

#include <string>

#include <json.hpp>

#include "hamcut/alpha_cut.hpp"
#include "hamcut/arrangement.hpp"
#include "hamcut/colored_point_set.hpp"
#include "hamcut/grid_uso.hpp"
#include "hamcut/levels.hpp"
#include "hamcut/separation.hpp"
#include "hamcut/stretchability.hpp"

// JSON interchange. Rationals travel as canonical "num/den" strings (plain
// integers for whole numbers); readers also accept JSON integers. Every
// reader throws ParseError on malformed input.
namespace hamcut::io {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from(const Json& j);

Json to_json(const Point& p);
Point point_from(const Json& j);

Json to_json(const Hyperplane& h);  // {"normal": [...], "offset": ...}
Hyperplane hyperplane_from(const Json& j);

/// {"dimension": d, "classes": [[point, ...], ...]}
Json to_json(const ColoredPointSet& set);
ColoredPointSet instance_from(const Json& j);

/// {"dimension": d, "classes": [[hyperplane, ...], ...]}
Json to_json(const ColoredLineArrangement& arrangement);
ColoredLineArrangement arrangement_from(const Json& j);

/// {"shape": [n_1..n_d], "lines": [per dimension: [per line: n_i x n_i
/// matrix]]}. Lines of dimension i are listed by base vertex (coordinate i
/// zeroed) in lexicographic order; entry (a, b) is +1 when a points to b.
Json to_json(const GridOrientation& o);
GridOrientation orientation_from(const Json& j);

Json to_json(const Subgrid& sub, const GridShape& shape);  // kept coordinates per dimension
Json to_json(const UsoReport& report, const GridShape& shape);
Json to_json(const Cut& cut);
Json to_json(const SeparationReport& report);
Json to_json(const WeakPositionReport& report);
Json to_json(const LevelPolyline& level);  // world coordinates

/// {"n": n, "perms": [[...], ...]}
Json to_json(const AllowableSequence& seq);
AllowableSequence sequence_from(const Json& j);

/// {"reds": [{"id", "blue_order"}], "blues": [{"id", "red_order"}]}
Json to_json(const BicoloredDescription& desc);
BicoloredDescription description_from(const Json& j);

/// {"lines": [{"id", "color", "orientation", "vertices", "end_slopes"}]}
Json to_json(const PolylineArrangement& arrangement);
PolylineArrangement polylines_from(const Json& j);

/// {"lines": [{"id", "color", "normal", "offset"}]}
Json to_json(const LineArrangement2D& arrangement);
LineArrangement2D lines2d_from(const Json& j);

/// True when the document is a straight LineArrangement2D rather than a
/// polyline arrangement.
bool is_straight(const Json& j);

Json parse(const std::string& text);
Json read_file(const std::string& path);
/// Two-space indented, keys sorted, trailing newline.
std::string dump(const Json& j);

}  // namespace hamcut::io

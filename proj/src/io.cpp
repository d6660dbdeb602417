#include "hamcut/io.hpp"

#include <fstream>
#include <sstream>

#include "hamcut/error.hpp"

namespace hamcut::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) fail(std::string("field '") + key + "' must be an array");
  return a;
}

std::size_t count_from(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) fail(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::string string_from(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

template <typename T, typename F>
std::vector<T> list_from(const Json& a, F&& each) {
  if (!a.is_array()) fail("expected an array");
  std::vector<T> out;
  for (const Json& e : a) out.push_back(each(e));
  return out;
}

Color color_from(const Json& j) {
  const std::string c = string_from(j, "color");
  if (c == "red") return Color::Red;
  if (c == "blue") return Color::Blue;
  fail("color must be \"red\" or \"blue\"");
}

// Rank of v among vertices with coordinate dim fixed, lexicographically.
std::size_t line_rank(const GridShape& shape, const GridVertex& v, std::size_t dim) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < shape.dimension(); ++i) {
    if (i == dim) continue;
    rank = rank * shape.dims[i] + v[i];
  }
  return rank;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  fail("rational must be a \"num/den\" string or an integer");
}

Json to_json(const Point& p) {
  Json a = Json::array();
  for (const Rational& x : p) a.push_back(to_json(x));
  return a;
}

Point point_from(const Json& j) { return list_from<Rational>(j, rational_from); }

Json to_json(const Hyperplane& h) { return {{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}}; }

Hyperplane hyperplane_from(const Json& j) {
  try {
    return make_hyperplane(point_from(field(j, "normal")), rational_from(field(j, "offset")));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(e.what());
  }
}

Json to_json(const ColoredPointSet& set) {
  Json classes = Json::array();
  for (const auto& cls : set.classes()) {
    Json points = Json::array();
    for (const Point& p : cls) points.push_back(to_json(p));
    classes.push_back(std::move(points));
  }
  return {{"dimension", set.dimension()}, {"classes", std::move(classes)}};
}

ColoredPointSet instance_from(const Json& j) {
  const std::size_t d = count_from(field(j, "dimension"), "dimension");
  auto classes = list_from<std::vector<Point>>(array_field(j, "classes"),
                                               [](const Json& c) { return list_from<Point>(c, point_from); });
  try {
    return ColoredPointSet(d, std::move(classes));
  } catch (const Error& e) {
    fail(e.what());
  }
}

Json to_json(const ColoredLineArrangement& arrangement) {
  Json classes = Json::array();
  for (const auto& cls : arrangement.classes()) {
    Json lines = Json::array();
    for (const Hyperplane& h : cls) lines.push_back(to_json(h));
    classes.push_back(std::move(lines));
  }
  return {{"dimension", arrangement.dimension()}, {"classes", std::move(classes)}};
}

ColoredLineArrangement arrangement_from(const Json& j) {
  const std::size_t d = count_from(field(j, "dimension"), "dimension");
  auto classes = list_from<std::vector<Hyperplane>>(
      array_field(j, "classes"), [](const Json& c) { return list_from<Hyperplane>(c, hyperplane_from); });
  try {
    return ColoredLineArrangement(d, std::move(classes));
  } catch (const Error& e) {
    fail(e.what());
  }
}

Json to_json(const GridOrientation& o) {
  const GridShape& shape = o.shape();
  Json lines = Json::array();
  for (std::size_t dim = 0; dim < shape.dimension(); ++dim) {
    Json per_dim = Json::array();
    for (std::size_t idx = 0; idx < shape.vertex_count(); ++idx) {
      const GridVertex v = shape.vertex_at(idx);
      if (v[dim] != 0) continue;
      per_dim.push_back(o.line_matrix(v, dim));
    }
    lines.push_back(std::move(per_dim));
  }
  return {{"shape", shape.dims}, {"lines", std::move(lines)}};
}

GridOrientation orientation_from(const Json& j) {
  GridShape shape;
  try {
    shape = GridShape(list_from<std::size_t>(array_field(j, "shape"), [](const Json& e) { return count_from(e, "shape entry"); }));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(e.what());
  }
  const Json& lines = array_field(j, "lines");
  if (lines.size() != shape.dimension()) fail("need one list of lines per dimension");
  std::vector<std::vector<std::vector<std::uint64_t>>> masks(shape.dimension());
  for (std::size_t dim = 0; dim < shape.dimension(); ++dim) {
    const std::size_t n = shape.dims[dim];
    const std::size_t expected = shape.vertex_count() / n;
    if (!lines[dim].is_array() || lines[dim].size() != expected) {
      fail("dimension " + std::to_string(dim) + " needs " + std::to_string(expected) + " line matrices");
    }
    for (const Json& m : lines[dim]) {
      if (!m.is_array() || m.size() != n) fail("line matrix has the wrong size");
      std::vector<std::uint64_t> row_masks(n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        if (!m[a].is_array() || m[a].size() != n) fail("line matrix has the wrong size");
        for (std::size_t b = 0; b < n; ++b) {
          if (!m[a][b].is_number_integer() || !m[b][a].is_number_integer()) fail("matrix entries must be integers");
          const int x = m[a][b].get<int>();
          const int y = m[b][a].get<int>();
          const bool ok = a == b ? x == 0 : ((x == 1 && y == -1) || (x == -1 && y == 1));
          if (!ok) fail("line matrix must be antisymmetric with entries +1 / -1 off the diagonal");
          if (x == 1) row_masks[a] |= std::uint64_t{1} << b;
        }
      }
      masks[dim].push_back(std::move(row_masks));
    }
  }
  return GridOrientation(shape, [masks = std::move(masks), shape](const GridVertex& v, std::size_t dim) {
    return masks[dim][line_rank(shape, v, dim)][v[dim]];
  });
}

Json to_json(const Subgrid& sub, const GridShape& shape) {
  Json out = Json::array();
  for (std::size_t i = 0; i < sub.size(); ++i) {
    Json kept = Json::array();
    for (std::size_t b = 0; b < shape.dims[i]; ++b) {
      if (sub[i] >> b & 1) kept.push_back(b);
    }
    out.push_back(std::move(kept));
  }
  return out;
}

Json to_json(const UsoReport& report, const GridShape& shape) {
  Json out{{"is_uso", report.is_uso}};
  if (report.witness) {
    out["witness_subgrid"] = to_json(*report.witness, shape);
    out["witness_sinks"] = report.witness_sinks;
    out["cube_criterion_failed"] = report.cube_criterion_failed;
  }
  return out;
}

Json to_json(const Cut& cut) {
  Json counts = Json::array();
  std::vector<std::size_t> alpha;
  for (const SideCounts& c : cut.counts) {
    counts.push_back({{"below", c.below}, {"on", c.on}, {"above", c.above}});
    alpha.push_back(c.below + 1);
  }
  return {{"alpha", alpha}, {"tuple", cut.tuple}, {"hyperplane", to_json(cut.hyperplane)}, {"counts", counts}};
}

Json to_json(const SeparationReport& report) {
  Json out{{"satisfied", report.satisfied}};
  if (report.witness) out["witness"] = to_json(*report.witness);
  if (report.violating_subset) {
    out["violating_subset"] = *report.violating_subset;
    out["touching"] = report.touching;
  }
  return out;
}

Json to_json(const WeakPositionReport& report) {
  Json out{{"satisfied", report.satisfied}};
  if (report.tuple) out["tuple"] = *report.tuple;
  if (report.extra_point) out["extra_point"] = {report.extra_point->first, report.extra_point->second};
  if (!report.satisfied) out["degenerate_span"] = report.degenerate_span;
  return out;
}

Json to_json(const LevelPolyline& level) {
  Json vertices = Json::array();
  for (const Point& v : level.world_vertices()) vertices.push_back(to_json(v));
  return {{"k", level.k},
          {"vertices", std::move(vertices)},
          {"left_direction", to_json(level.left_ray_direction())},
          {"right_direction", to_json(level.right_ray_direction())}};
}

Json to_json(const AllowableSequence& seq) { return {{"n", seq.n}, {"perms", seq.perms}}; }

AllowableSequence sequence_from(const Json& j) {
  AllowableSequence seq;
  seq.n = count_from(field(j, "n"), "n");
  seq.perms = list_from<std::vector<std::size_t>>(array_field(j, "perms"), [](const Json& p) {
    return list_from<std::size_t>(p, [](const Json& e) { return count_from(e, "permutation entry"); });
  });
  return seq;
}

Json to_json(const BicoloredDescription& desc) {
  Json reds = Json::array();
  Json blues = Json::array();
  for (const auto& e : desc.reds) reds.push_back({{"id", e.id}, {"blue_order", e.order}});
  for (const auto& e : desc.blues) blues.push_back({{"id", e.id}, {"red_order", e.order}});
  return {{"reds", std::move(reds)}, {"blues", std::move(blues)}};
}

BicoloredDescription description_from(const Json& j) {
  auto entries = [](const Json& a, const char* key) {
    return list_from<BicoloredDescription::Entry>(a, [key](const Json& e) {
      return BicoloredDescription::Entry{
          string_from(field(e, "id"), "id"),
          list_from<std::string>(array_field(e, key), [](const Json& s) { return string_from(s, "order entry"); })};
    });
  };
  BicoloredDescription desc;
  desc.reds = entries(array_field(j, "reds"), "blue_order");
  desc.blues = entries(array_field(j, "blues"), "red_order");
  return desc;
}

Json to_json(const PolylineArrangement& arrangement) {
  Json lines = Json::array();
  for (const Pseudoline& p : arrangement) {
    Json vertices = Json::array();
    for (const Point& v : p.vertices) vertices.push_back(to_json(v));
    lines.push_back({{"id", p.id},
                     {"color", std::string(to_string(p.color))},
                     {"orientation", p.orientation == Sign::Above ? "above" : "below"},
                     {"vertices", std::move(vertices)},
                     {"end_slopes", {to_json(p.left_slope), to_json(p.right_slope)}}});
  }
  return {{"lines", std::move(lines)}};
}

PolylineArrangement polylines_from(const Json& j) {
  return list_from<Pseudoline>(array_field(j, "lines"), [](const Json& e) {
    Pseudoline p;
    p.id = string_from(field(e, "id"), "id");
    p.color = color_from(field(e, "color"));
    const std::string o = string_from(field(e, "orientation"), "orientation");
    if (o != "above" && o != "below") fail("orientation must be \"above\" or \"below\"");
    p.orientation = o == "above" ? Sign::Above : Sign::Below;
    p.vertices = list_from<Point>(array_field(e, "vertices"), point_from);
    for (const Point& v : p.vertices) {
      if (v.size() != 2) fail("polyline vertices are planar");
    }
    const Json& slopes = array_field(e, "end_slopes");
    if (slopes.size() != 2) fail("end_slopes needs two entries");
    p.left_slope = rational_from(slopes[0]);
    p.right_slope = rational_from(slopes[1]);
    return p;
  });
}

Json to_json(const LineArrangement2D& arrangement) {
  Json lines = Json::array();
  for (const ColoredLine& l : arrangement) {
    lines.push_back({{"id", l.id},
                     {"color", std::string(to_string(l.color))},
                     {"normal", to_json(l.line.normal)},
                     {"offset", to_json(l.line.offset)}});
  }
  return {{"lines", std::move(lines)}};
}

LineArrangement2D lines2d_from(const Json& j) {
  return list_from<ColoredLine>(array_field(j, "lines"), [](const Json& e) {
    ColoredLine l{string_from(field(e, "id"), "id"), color_from(field(e, "color")), hyperplane_from(e)};
    if (l.line.dimension() != 2) fail("lines must be planar");
    return l;
  });
}

bool is_straight(const Json& j) {
  const Json& lines = array_field(j, "lines");
  return !lines.empty() && lines.front().is_object() && lines.front().contains("normal");
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hamcut::io

#include "hamcut/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "hamcut/error.hpp"

namespace hamcut::svg {

namespace {

constexpr const char* kRed = "#c0392b";
constexpr const char* kBlue = "#2471a3";
constexpr const char* kCut = "#444444";

struct Vec {
  double x = 0;
  double y = 0;
};

Vec approx(const Point& p) { return {to_double(p[0]), to_double(p[1])}; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0 ? 0.0 : v);
  return buf;
}

// Polyline with optional unbounded ends; a full line is one vertex with
// both rays.
struct Path {
  std::vector<Vec> vertices;
  std::optional<Vec> back;     // direction of the ray before vertices.front()
  std::optional<Vec> forward;  // direction of the ray after vertices.back()
  std::string color;
  bool dashed = false;
  bool bold = false;
};

struct Dot {
  Vec at;
  std::string color;
};

class Canvas {
 public:
  void anchor(const Point& p) { anchors_.push_back(approx(p)); }
  void dot(const Point& p, std::string color) {
    anchor(p);
    dots_.push_back({approx(p), std::move(color)});
  }
  void path(Path p) { paths_.push_back(std::move(p)); }

  void line(const Hyperplane& h, std::string color, bool dashed = false) {
    // Foot of the perpendicular from the origin, then the direction along h.
    const Rational n2 = h.normal[0] * h.normal[0] + h.normal[1] * h.normal[1];
    const Point foot{h.offset * h.normal[0] / n2, h.offset * h.normal[1] / n2};
    const Vec dir{-to_double(h.normal[1]), to_double(h.normal[0])};
    path({{approx(foot)}, Vec{-dir.x, -dir.y}, dir, std::move(color), dashed, false});
  }

  std::string render() const {
    double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
    if (!anchors_.empty()) {
      lo_x = hi_x = anchors_.front().x;
      lo_y = hi_y = anchors_.front().y;
      for (const Vec& a : anchors_) {
        lo_x = std::min(lo_x, a.x);
        hi_x = std::max(hi_x, a.x);
        lo_y = std::min(lo_y, a.y);
        hi_y = std::max(hi_y, a.y);
      }
    }
    double w = hi_x - lo_x;
    double h = hi_y - lo_y;
    if (w <= 0) w = std::max(1.0, h);
    if (h <= 0) h = w;
    const double cx = (lo_x + hi_x) / 2;
    const double cy = (lo_y + hi_y) / 2;
    lo_x = cx - 0.55 * w;
    lo_y = cy - 0.55 * h;
    w *= 1.1;
    h *= 1.1;
    const double diag = std::hypot(w, h);
    const double stroke = diag / 400;

    std::ostringstream out;
    // SVG's y axis points down, so every y is negated.
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(lo_x) << ' ' << num(-(lo_y + h)) << ' '
        << num(w) << ' ' << num(h) << "\" width=\"800\" height=\"" << num(std::round(800 * h / w)) << "\">\n";
    out << "<rect x=\"" << num(lo_x) << "\" y=\"" << num(-(lo_y + h)) << "\" width=\"" << num(w) << "\" height=\""
        << num(h) << "\" fill=\"white\"/>\n";
    auto far = [&](const Vec& from, const Vec& dir) {
      const double len = std::hypot(dir.x, dir.y);
      const double reach = std::hypot(from.x - cx, from.y - cy) + 2 * diag;
      return Vec{from.x + dir.x / len * reach, from.y + dir.y / len * reach};
    };
    for (const Path& p : paths_) {
      std::vector<Vec> pts;
      if (p.back) pts.push_back(far(p.vertices.front(), *p.back));
      pts.insert(pts.end(), p.vertices.begin(), p.vertices.end());
      if (p.forward) pts.push_back(far(p.vertices.back(), *p.forward));
      out << "<polyline fill=\"none\" stroke=\"" << p.color << "\" stroke-width=\""
          << num(p.bold ? 3 * stroke : stroke) << '"';
      if (p.dashed) out << " stroke-dasharray=\"" << num(4 * stroke) << ' ' << num(3 * stroke) << '"';
      out << " points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << num(pts[i].x) << ',' << num(-pts[i].y);
      out << "\"/>\n";
    }
    for (const Dot& d : dots_) {
      out << "<circle cx=\"" << num(d.at.x) << "\" cy=\"" << num(-d.at.y) << "\" r=\"" << num(3 * stroke)
          << "\" fill=\"" << d.color << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
  }

 private:
  std::vector<Vec> anchors_;
  std::vector<Dot> dots_;
  std::vector<Path> paths_;
};

const char* class_color(std::size_t cls) { return cls == 0 ? kRed : kBlue; }

void require_planar(std::size_t d) {
  if (d != 2) throw Error(ErrorKind::NotPlottable, "only planar objects can be drawn");
}

void anchor_crossings(Canvas& canvas, const std::vector<Hyperplane>& lines) {
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (auto p = solve_linear({lines[a].normal, lines[b].normal}, {lines[a].offset, lines[b].offset})) {
        canvas.anchor(*p);
      }
    }
  }
}

}  // namespace

std::string plot_instance(const ColoredPointSet& set, const std::vector<Cut>& cuts) {
  require_planar(set.dimension());
  Canvas canvas;
  for (const Cut& cut : cuts) canvas.line(cut.hyperplane, kCut, true);
  for (std::size_t cls = 0; cls < 2; ++cls) {
    for (const Point& p : set.points(cls)) canvas.dot(p, class_color(cls));
  }
  return canvas.render();
}

std::string plot_arrangement(const ColoredLineArrangement& arrangement, const std::vector<LevelPolyline>& levels,
                             const std::vector<Point>& marks) {
  require_planar(arrangement.dimension());
  Canvas canvas;
  std::vector<Hyperplane> all;
  for (std::size_t cls = 0; cls < 2; ++cls) {
    for (const Hyperplane& h : arrangement.lines(cls)) {
      canvas.line(h, class_color(cls));
      all.push_back(h);
    }
  }
  anchor_crossings(canvas, all);
  for (const LevelPolyline& level : levels) {
    // A level belongs to the class whose lines support it.
    const Hyperplane first = level.world_lines().front();
    std::size_t cls = 0;
    for (std::size_t c = 0; c < 2; ++c) {
      const auto& lines = arrangement.lines(c);
      if (std::find(lines.begin(), lines.end(), first) != lines.end()) cls = c;
    }
    Path p;
    p.color = class_color(cls);
    p.bold = true;
    const std::vector<Point> vertices = level.world_vertices();
    if (vertices.empty()) {
      canvas.line(first, class_color(cls));
      continue;
    }
    for (const Point& v : vertices) p.vertices.push_back(approx(v));
    p.back = approx(level.left_ray_direction());
    p.forward = approx(level.right_ray_direction());
    canvas.path(std::move(p));
  }
  for (const Point& m : marks) canvas.dot(m, "black");
  return canvas.render();
}

std::string plot_pseudolines(const PolylineArrangement& arrangement) {
  Canvas canvas;
  for (const Pseudoline& line : arrangement) {
    Path p;
    p.color = line.color == Color::Red ? kRed : kBlue;
    for (const Point& v : line.vertices) {
      canvas.anchor(v);
      p.vertices.push_back(approx(v));
    }
    if (p.vertices.empty()) continue;
    p.back = Vec{-1, -to_double(line.left_slope)};
    p.forward = Vec{1, to_double(line.right_slope)};
    canvas.path(std::move(p));
  }
  return canvas.render();
}

std::string plot_lines(const LineArrangement2D& arrangement) {
  Canvas canvas;
  std::vector<Hyperplane> all;
  for (const ColoredLine& l : arrangement) {
    require_planar(l.line.dimension());
    canvas.line(l.line, l.color == Color::Red ? kRed : kBlue);
    all.push_back(l.line);
  }
  anchor_crossings(canvas, all);
  return canvas.render();
}

}  // namespace hamcut::svg

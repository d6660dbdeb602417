#include "hamcut/stretchability.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "hamcut/arrangement.hpp"
#include "hamcut/error.hpp"

namespace hamcut {

namespace {

struct Event {
  Rational x;
  Rational y;
  std::size_t a;  // ids, a < b
  std::size_t b;
};

struct Sweep {
  AllowableSequence seq;
  std::vector<Rational> xs;  // perms[m] holds strictly between xs[m-1] and xs[m]
};

Sweep sweep(const std::vector<Hyperplane>& lines) {
  const std::size_t n = lines.size();
  std::vector<std::pair<Rational, Rational>> si;
  for (const Hyperplane& h : lines) si.push_back(slope_intercept(h));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (si[a] == si[b]) throw Error(ErrorKind::DuplicateLine, "lines " + std::to_string(b + 1) + " and " +
                                                                    std::to_string(a + 1) + " coincide");
    }
  }
  // Far left, a smaller slope is higher; parallel lines by intercept.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (si[a].first != si[b].first) return si[a].first < si[b].first;
    return si[a].second > si[b].second;
  });

  std::vector<Event> events;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (si[a].first == si[b].first) continue;
      Rational x = (si[b].second - si[a].second) / (si[a].first - si[b].first);
      Rational y = si[a].first * x + si[a].second;
      events.push_back({std::move(x), std::move(y), a, b});
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& e, const Event& f) {
    if (e.x != f.x) return e.x < f.x;
    return std::pair(e.a, e.b) < std::pair(f.a, f.b);
  });
  for (std::size_t e = 0; e < events.size(); ++e) {
    for (std::size_t f = e + 1; f < events.size() && events[f].x == events[e].x; ++f) {
      if (events[f].y == events[e].y) {
        throw Error(ErrorKind::ConcurrentLines, "three or more lines meet at (" + to_string(events[e].x) + ", " +
                                                    to_string(events[e].y) + ")");
      }
    }
  }

  Sweep out;
  out.seq.n = n;
  auto ids = [&] {
    std::vector<std::size_t> perm;
    for (std::size_t idx : order) perm.push_back(idx + 1);
    return perm;
  };
  out.seq.perms.push_back(ids());
  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;
  for (const Event& e : events) {
    const std::size_t pa = position[e.a];
    const std::size_t pb = position[e.b];
    if (std::max(pa, pb) - std::min(pa, pb) != 1) {
      throw Error(ErrorKind::ConcurrentLines, "crossing lines are not adjacent in the sweep");
    }
    std::swap(order[pa], order[pb]);
    position[e.a] = pb;
    position[e.b] = pa;
    out.seq.perms.push_back(ids());
    out.xs.push_back(e.x);
  }
  return out;
}

// Index into sweep.perms of each permutation of seq, greedily.
std::optional<std::vector<std::size_t>> match(const AllowableSequence& sweep, const AllowableSequence& seq) {
  if (sweep.n != seq.n) return std::nullopt;
  std::vector<std::size_t> at;
  std::size_t next = 0;
  for (const auto& perm : seq.perms) {
    while (next < sweep.perms.size() && sweep.perms[next] != perm) ++next;
    if (next == sweep.perms.size()) return std::nullopt;
    at.push_back(next++);
  }
  return at;
}

}  // namespace

bool validate_allowable(const AllowableSequence& seq) {
  if (seq.n == 0 || seq.perms.empty()) return false;
  for (const auto& perm : seq.perms) {
    if (perm.size() != seq.n) return false;
    std::vector<bool> seen(seq.n + 1, false);
    for (std::size_t id : perm) {
      if (id < 1 || id > seq.n || seen[id]) return false;
      seen[id] = true;
    }
  }
  for (std::size_t i = 1; i < seq.perms.size(); ++i) {
    const auto& a = seq.perms[i - 1];
    const auto& b = seq.perms[i];
    std::vector<std::size_t> diff;
    for (std::size_t p = 0; p < seq.n; ++p) {
      if (a[p] != b[p]) diff.push_back(p);
    }
    if (diff.size() != 2 || diff[1] != diff[0] + 1 || a[diff[0]] != b[diff[1]] || a[diff[1]] != b[diff[0]]) {
      return false;
    }
  }
  return true;
}

AllowableSequence sweep_sequence(const std::vector<Hyperplane>& lines) { return sweep(lines).seq; }

bool contains_subsequence(const AllowableSequence& sweep, const AllowableSequence& seq) {
  return match(sweep, seq).has_value();
}

std::string_view to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

std::string red_id(long index) { return "r" + std::to_string(index); }

std::string blue_id(std::size_t index, bool primed) {
  return (primed ? "b'" : "b") + std::to_string(index);
}

BicoloredDescription reduce_to_bicolored(const AllowableSequence& seq) {
  if (!validate_allowable(seq)) throw Error(ErrorKind::InvalidSequence, "not an allowable sequence");
  const long n = static_cast<long>(seq.n);
  const std::size_t k = seq.perms.size();
  auto alternate = [&](bool primed_first) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= k; ++i) {
      out.push_back(blue_id(i, primed_first));
      out.push_back(blue_id(i, !primed_first));
    }
    return out;
  };
  auto block = [&](bool reversed) {
    std::vector<std::string> out;
    for (bool primed : {false, true}) {
      for (std::size_t j = 1; j <= k; ++j) out.push_back(blue_id(reversed ? k + 1 - j : j, primed));
    }
    return out;
  };

  BicoloredDescription desc;
  desc.reds.push_back({red_id(-1), alternate(true)});
  desc.reds.push_back({red_id(0), alternate(false)});
  for (long j = 1; j <= n; ++j) desc.reds.push_back({red_id(j), alternate(false)});
  desc.reds.push_back({red_id(n + 1), block(false)});
  desc.reds.push_back({red_id(n + 2), block(true)});
  for (bool primed : {false, true}) {
    for (std::size_t i = 1; i <= k; ++i) {
      std::vector<std::string> order{red_id(-1), red_id(0)};
      for (std::size_t id : seq.perms[i - 1]) order.push_back(red_id(static_cast<long>(id)));
      order.push_back(red_id(n + 1));
      order.push_back(red_id(n + 2));
      desc.blues.push_back({blue_id(i, primed), std::move(order)});
    }
  }
  return desc;
}

AllowableSequence sequence_from_description(const BicoloredDescription& desc) {
  if (desc.reds.size() < 5 || desc.blues.empty() || desc.blues.size() % 2 != 0) {
    throw Error(ErrorKind::WrongFamily, "wrong number of pseudo-lines for a reduction");
  }
  AllowableSequence seq;
  seq.n = desc.reds.size() - 4;
  const std::size_t k = desc.blues.size() / 2;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& order = desc.blues[i].order;
    if (order.size() != seq.n + 4) throw Error(ErrorKind::WrongFamily, "blue " + desc.blues[i].id + " is malformed");
    std::vector<std::size_t> perm;
    for (std::size_t p = 2; p < seq.n + 2; ++p) {
      const std::string& id = order[p];
      std::size_t value = 0;
      try {
        if (id.size() < 2 || id[0] != 'r' || id[1] == '-') throw std::invalid_argument(id);
        value = std::stoul(id.substr(1));
      } catch (const std::exception&) {
        throw Error(ErrorKind::WrongFamily, "unexpected red id " + id);
      }
      perm.push_back(value);
    }
    seq.perms.push_back(std::move(perm));
  }
  if (!validate_allowable(seq) || reduce_to_bicolored(seq) != desc) {
    throw Error(ErrorKind::WrongFamily, "description is not the reduction of an allowable sequence");
  }
  return seq;
}

Rational Pseudoline::y_at(const Rational& x) const {
  if (vertices.empty()) throw Error(ErrorKind::MalformedDescription, "pseudo-line " + id + " has no vertex");
  if (x <= vertices.front()[0]) return vertices.front()[1] + left_slope * (x - vertices.front()[0]);
  if (x >= vertices.back()[0]) return vertices.back()[1] + right_slope * (x - vertices.back()[0]);
  std::size_t j = 1;
  while (vertices[j][0] < x) ++j;
  const Point& a = vertices[j - 1];
  const Point& b = vertices[j];
  return a[1] + (b[1] - a[1]) * (x - a[0]) / (b[0] - a[0]);
}

Pseudoline to_pseudoline(const ColoredLine& line) {
  auto [slope, intercept] = slope_intercept(line.line);
  Pseudoline p;
  p.id = line.id;
  p.color = line.color;
  p.orientation = line.line.normal[1] > 0 ? Sign::Above : Sign::Below;
  p.vertices = {{Rational(0), intercept}};
  p.left_slope = slope;
  p.right_slope = slope;
  return p;
}

PolylineArrangement to_pseudolines(const LineArrangement2D& lines) {
  PolylineArrangement out;
  for (const ColoredLine& l : lines) out.push_back(to_pseudoline(l));
  return out;
}

CrossingReport crossings(const Pseudoline& a, const Pseudoline& b) {
  std::set<Rational> breaks;
  for (const Point& v : a.vertices) breaks.insert(v[0]);
  for (const Point& v : b.vertices) breaks.insert(v[0]);
  const std::vector<Rational> xs(breaks.begin(), breaks.end());
  std::vector<Rational> f;
  for (const Rational& x : xs) f.push_back(a.y_at(x) - b.y_at(x));
  const Rational dl = a.left_slope - b.left_slope;
  const Rational dr = a.right_slope - b.right_slope;

  // Signs at -inf, at each breakpoint, and at +inf; the difference is
  // linear in between.
  std::vector<int> s;
  s.push_back(dl != 0 ? -sign(dl) : sign(f.front()));
  for (const Rational& v : f) s.push_back(sign(v));
  s.push_back(dr != 0 ? sign(dr) : sign(f.back()));

  CrossingReport report;
  auto add = [&](const Rational& x) { report.points.push_back({x, a.y_at(x)}); };
  for (std::size_t j = 0; j + 1 < s.size(); ++j) {
    if (s[j] == 0 && s[j + 1] == 0) {
      report.degenerate = true;
      continue;
    }
    if (s[j] != 0 && s[j + 1] != 0 && s[j] != s[j + 1]) {
      if (j == 0) {
        add(xs.front() - f.front() / dl);
      } else if (j + 1 == s.size() - 1) {
        add(xs.back() - f.back() / dr);
      } else {
        const Rational& x0 = xs[j - 1];
        const Rational& x1 = xs[j];
        add(x0 + f[j - 1] * (x1 - x0) / (f[j - 1] - f[j]));
      }
    }
    if (j > 0 && s[j] == 0 && s[j - 1] != 0 && s[j + 1] != 0) {
      if (s[j - 1] != s[j + 1]) {
        add(xs[j - 1]);
      } else {
        report.degenerate = true;
      }
    }
  }
  return report;
}

namespace {

void require_monotone(const PolylineArrangement& arrangement) {
  std::set<std::string> ids;
  for (const Pseudoline& p : arrangement) {
    if (p.vertices.empty()) throw Error(ErrorKind::MalformedDescription, "pseudo-line " + p.id + " has no vertex");
    if (p.orientation == Sign::On) throw Error(ErrorKind::MalformedDescription, "pseudo-line " + p.id + " lacks an orientation");
    for (std::size_t j = 1; j < p.vertices.size(); ++j) {
      if (!(p.vertices[j - 1][0] < p.vertices[j][0])) {
        throw Error(ErrorKind::MalformedDescription, "vertices of " + p.id + " are not x-increasing");
      }
    }
    if (!ids.insert(p.id).second) throw Error(ErrorKind::MalformedDescription, "repeated id " + p.id);
  }
}

std::string join(const std::vector<std::string>& ids) {
  std::string out = "[";
  for (std::size_t j = 0; j < ids.size(); ++j) out += (j ? ", " : "") + ids[j];
  return out + "]";
}

// Index of every id in an order; MalformedDescription unless the order is a
// permutation of `expected`.
std::map<std::string, std::size_t> positions(const std::string& owner, const std::vector<std::string>& order,
                                             const std::vector<std::string>& expected) {
  std::map<std::string, std::size_t> at;
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (!at.emplace(order[p], p).second) throw Error(ErrorKind::MalformedDescription, owner + " lists " + order[p] + " twice");
  }
  if (at.size() != expected.size()) throw Error(ErrorKind::MalformedDescription, owner + " has a wrong number of crossings");
  for (const std::string& id : expected) {
    if (!at.contains(id)) throw Error(ErrorKind::MalformedDescription, owner + " never meets " + id);
  }
  return at;
}

}  // namespace

BicoloredDescription describe(const PolylineArrangement& arrangement) {
  require_monotone(arrangement);
  std::vector<const Pseudoline*> reds;
  std::vector<const Pseudoline*> blues;
  for (const Pseudoline& p : arrangement) (p.color == Color::Red ? reds : blues).push_back(&p);

  std::vector<std::vector<Point>> at(reds.size(), std::vector<Point>(blues.size()));
  for (std::size_t r = 0; r < reds.size(); ++r) {
    for (std::size_t b = 0; b < blues.size(); ++b) {
      const CrossingReport c = crossings(*reds[r], *blues[b]);
      if (c.degenerate || c.points.size() != 1) {
        throw Error(ErrorKind::MalformedDescription,
                    reds[r]->id + " and " + blues[b]->id +
                        (c.degenerate ? " touch without crossing" : " cross " + std::to_string(c.points.size()) + " times"));
      }
      at[r][b] = c.points.front();
    }
  }
  // Traversal keeps the positive side on the left: left to right when it is
  // the upper side, right to left otherwise.
  auto ordered = [](const Pseudoline& line, std::vector<std::pair<Rational, std::string>> hits) {
    std::sort(hits.begin(), hits.end());
    for (std::size_t j = 1; j < hits.size(); ++j) {
      if (hits[j].first == hits[j - 1].first) {
        throw Error(ErrorKind::ConcurrentLines, hits[j - 1].second + " and " + hits[j].second + " meet " + line.id +
                                                    " at the same point");
      }
    }
    if (line.orientation == Sign::Below) std::reverse(hits.begin(), hits.end());
    std::vector<std::string> ids;
    for (auto& h : hits) ids.push_back(std::move(h.second));
    return ids;
  };
  BicoloredDescription desc;
  for (std::size_t r = 0; r < reds.size(); ++r) {
    std::vector<std::pair<Rational, std::string>> hits;
    for (std::size_t b = 0; b < blues.size(); ++b) hits.emplace_back(at[r][b][0], blues[b]->id);
    desc.reds.push_back({reds[r]->id, ordered(*reds[r], std::move(hits))});
  }
  for (std::size_t b = 0; b < blues.size(); ++b) {
    std::vector<std::pair<Rational, std::string>> hits;
    for (std::size_t r = 0; r < reds.size(); ++r) hits.emplace_back(at[r][b][0], reds[r]->id);
    desc.blues.push_back({blues[b]->id, ordered(*blues[b], std::move(hits))});
  }
  return desc;
}

BicoloredDescription describe(const LineArrangement2D& arrangement) { return describe(to_pseudolines(arrangement)); }

bool pseudolines_well_separated(const PolylineArrangement& arrangement) {
  for (int s_red : {1, -1}) {
    for (int s_blue : {1, -1}) {
      auto side = [&](const Pseudoline& p) {
        return (p.color == Color::Red ? s_red : s_blue) * static_cast<int>(p.orientation);
      };
      // Far points t (1, u) or t (-1, u): the side against a line is fixed
      // by comparing u with its end slope, so the admissible u form an
      // open interval.
      auto horizontal = [&](bool right) {
        std::optional<Rational> lo;
        std::optional<Rational> hi;
        for (const Pseudoline& p : arrangement) {
          const Rational threshold = right ? p.right_slope : Rational(-p.left_slope);
          if (side(p) > 0) {
            if (!lo || threshold > *lo) lo = threshold;
          } else {
            if (!hi || threshold < *hi) hi = threshold;
          }
        }
        return !lo || !hi || *lo < *hi;
      };
      auto vertical = [&](int dir) {
        return std::all_of(arrangement.begin(), arrangement.end(), [&](const Pseudoline& p) { return side(p) == dir; });
      };
      if (!(horizontal(true) || horizontal(false) || vertical(1) || vertical(-1))) return false;
    }
  }
  return true;
}

VerifyReport verify_description(const PolylineArrangement& arrangement, const BicoloredDescription& desc) {
  VerifyReport report;
  auto fail = [&](std::string why) {
    report.ok = false;
    report.diff = std::move(why);
    return report;
  };
  BicoloredDescription actual;
  try {
    actual = describe(arrangement);
  } catch (const Error& e) {
    return fail(e.what());
  }
  auto compare = [&](const std::vector<BicoloredDescription::Entry>& want,
                     const std::vector<BicoloredDescription::Entry>& got, std::string_view color) -> std::optional<std::string> {
    std::map<std::string, const std::vector<std::string>*> by_id;
    for (const auto& e : got) by_id[e.id] = &e.order;
    if (want.size() != got.size()) return "expected " + std::to_string(want.size()) + " " + std::string(color) +
                                          " pseudo-lines, found " + std::to_string(got.size());
    for (const auto& e : want) {
      auto it = by_id.find(e.id);
      if (it == by_id.end()) return "missing " + std::string(color) + " " + e.id;
      if (*it->second != e.order) return "along " + e.id + ": expected " + join(e.order) + ", found " + join(*it->second);
    }
    return std::nullopt;
  };
  if (auto diff = compare(desc.reds, actual.reds, "red")) return fail(*diff);
  if (auto diff = compare(desc.blues, actual.blues, "blue")) return fail(*diff);
  if (!pseudolines_well_separated(arrangement)) return fail("no far direction realizes every sign pattern");
  return report;
}

VerifyReport verify_description(const LineArrangement2D& arrangement, const BicoloredDescription& desc) {
  PolylineArrangement pseudo;
  try {
    pseudo = to_pseudolines(arrangement);
  } catch (const Error& e) {
    return {false, e.what()};
  }
  VerifyReport report = verify_description(pseudo, desc);
  if (!report.ok) return report;
  std::vector<std::vector<Hyperplane>> classes(2);
  for (const ColoredLine& l : arrangement) classes[l.color == Color::Red ? 0 : 1].push_back(l.line);
  try {
    if (!verify_rainbow_ws(ColoredLineArrangement(2, std::move(classes))).well_separated) {
      return {false, "the unbounded-cell program finds a missing sign pattern"};
    }
  } catch (const Error& e) {
    return {false, e.what()};
  }
  return report;
}

std::size_t crossing_lower_bound(const BicoloredDescription& desc, const std::string& first, const std::string& second) {
  auto find = [](const std::vector<BicoloredDescription::Entry>& entries, const std::string& id) {
    return std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.id == id; });
  };
  const bool red = find(desc.reds, first) != desc.reds.end() && find(desc.reds, second) != desc.reds.end();
  const bool blue = find(desc.blues, first) != desc.blues.end() && find(desc.blues, second) != desc.blues.end();
  if ((!red && !blue) || first == second) {
    throw Error(ErrorKind::UnknownId, first + " and " + second + " are not two pseudo-lines of one color");
  }
  const auto& same = red ? desc.reds : desc.blues;
  const auto& other = red ? desc.blues : desc.reds;
  std::size_t changes = 0;
  std::optional<bool> previous;
  for (const std::string& o : find(same, first)->order) {
    auto it = find(other, o);
    if (it == other.end()) throw Error(ErrorKind::MalformedDescription, "unknown pseudo-line " + o);
    const auto a = std::find(it->order.begin(), it->order.end(), first);
    const auto b = std::find(it->order.begin(), it->order.end(), second);
    if (a == it->order.end() || b == it->order.end()) {
      throw Error(ErrorKind::MalformedDescription, o + " does not meet both " + first + " and " + second);
    }
    const bool first_earlier = a < b;
    if (previous && *previous != first_earlier) ++changes;
    previous = first_earlier;
  }
  return changes;
}

GridOrientation orientation_from_description(const BicoloredDescription& desc) {
  std::vector<std::string> red_ids;
  std::vector<std::string> blue_ids;
  for (const auto& e : desc.reds) red_ids.push_back(e.id);
  for (const auto& e : desc.blues) blue_ids.push_back(e.id);
  if (red_ids.empty() || blue_ids.empty()) throw Error(ErrorKind::MalformedDescription, "both colors are needed");
  std::vector<std::map<std::string, std::size_t>> along_red;
  std::vector<std::map<std::string, std::size_t>> along_blue;
  for (const auto& e : desc.reds) along_red.push_back(positions(e.id, e.order, blue_ids));
  for (const auto& e : desc.blues) along_blue.push_back(positions(e.id, e.order, red_ids));
  GridShape shape({red_ids.size(), blue_ids.size()});
  return GridOrientation::from_edges(std::move(shape), [&](const GridVertex& v, std::size_t dim, std::size_t other) {
    const std::size_t a = v[0];
    const std::size_t j = v[1];
    if (dim == 0) {
      // Points to (a, j) iff r_other precedes r_a along b_j.
      const auto& at = along_blue[j];
      return !(at.at(red_ids[other]) < at.at(red_ids[a]));
    }
    // Points to (a, j) iff b_other follows b_j along r_a.
    const auto& at = along_red[a];
    return !(at.at(blue_ids[other]) > at.at(blue_ids[j]));
  });
}

LineArrangement2D dual_line_arrangement(const ColoredPointSet& set) {
  if (set.dimension() != 2) throw Error(ErrorKind::DimensionMismatch, "duality is planar");
  LineArrangement2D out;
  for (std::size_t cls = 0; cls < 2; ++cls) {
    for (std::size_t j = 0; j < set.size(cls); ++j) {
      out.push_back({(cls == 0 ? "r" : "b") + std::to_string(j + 1), cls == 0 ? Color::Red : Color::Blue,
                     dualize(set.point(cls, j))});
    }
  }
  return out;
}

PolylineArrangement realize_pseudolines(const BicoloredDescription& desc) {
  const AllowableSequence seq = sequence_from_description(desc);
  const std::size_t n = seq.n;
  const std::size_t k = seq.perms.size();
  const long ln = static_cast<long>(n);
  // Blues through p_i = (i, 1/2) and q = (0, y_q) or q' = (k + 1, y_q) are
  // steeper than 6, so they cross the band -1 <= y <= 0 inside
  // [i - 1/4, i + 1/4], where every ordinary red runs flat.
  const Rational y_upper = -Rational(static_cast<long>(6 * (k + 1) + 10));
  const Rational y_lower = y_upper - 1;
  const Rational y_q = y_upper - Rational(1, 2);
  const Rational quarter(1, 4);

  auto flat = [](std::string id, const Rational& y) {
    return Pseudoline{std::move(id), Color::Red, Sign::Above, {{Rational(0), y}}, Rational(0), Rational(0)};
  };
  PolylineArrangement out;
  out.push_back(flat(red_id(-1), Rational(1)));
  out.push_back(flat(red_id(0), Rational(0)));
  for (std::size_t j = 1; j <= n; ++j) {
    Pseudoline r{red_id(static_cast<long>(j)), Color::Red, Sign::Above, {}, Rational(0), Rational(0)};
    for (std::size_t i = 1; i <= k; ++i) {
      const auto& perm = seq.perms[i - 1];
      const auto rank = static_cast<long>(std::find(perm.begin(), perm.end(), j) - perm.begin());
      const Rational height = ratio(-(rank + 1), ln + 2);
      const Rational x(static_cast<long>(i));
      r.vertices.push_back({x - quarter, height});
      r.vertices.push_back({x + quarter, height});
    }
    out.push_back(std::move(r));
  }
  out.push_back(flat(red_id(ln + 1), y_upper));
  out.push_back(flat(red_id(ln + 2), y_lower));
  for (bool primed : {false, true}) {
    for (std::size_t i = 1; i <= k; ++i) {
      const Rational x(static_cast<long>(i));
      const Rational qx = primed ? Rational(static_cast<long>(k + 1)) : Rational(0);
      const Rational slope = (Rational(1, 2) - y_q) / (x - qx);
      // The positive side faces east, so the line runs top to bottom.
      out.push_back({blue_id(i, primed), Color::Blue, slope > 0 ? Sign::Below : Sign::Above,
                     {{x, Rational(1, 2)}}, slope, slope});
    }
  }
  return out;
}

namespace {

Hyperplane upward(const Hyperplane& h) { return h.normal[1] < 0 ? flipped(h) : h; }

// Line through two points with its positive side east (first point above).
Hyperplane east_line(const Point& top, const Point& bottom) {
  const Rational vx = top[0] - bottom[0];
  const Rational vy = top[1] - bottom[1];
  return make_hyperplane({vy, -vx}, vy * bottom[0] - vx * bottom[1]);
}

Hyperplane horizontal(const Rational& y) { return line_from_slope(Rational(0), y); }

}  // namespace

LineArrangement2D realize_straight(const AllowableSequence& seq, const std::vector<Hyperplane>& lines) {
  if (!validate_allowable(seq)) throw Error(ErrorKind::InvalidSequence, "not an allowable sequence");
  if (lines.size() != seq.n) throw Error(ErrorKind::NotARealization, "need one line per element");
  const Sweep s = sweep(lines);
  const auto at = match(s.seq, seq);
  if (!at) throw Error(ErrorKind::NotARealization, "the sweep of the lines does not contain the sequence");
  const std::size_t k = seq.perms.size();

  // p_i sits above a vertical window of half-width g_i in which the lines
  // keep the order pi_i; capping g at 1/2 keeps the blues steeper than the
  // reds.
  std::vector<Rational> x(k);
  std::vector<Rational> g(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t m = (*at)[i];
    const bool has_left = m > 0;
    const bool has_right = m < s.xs.size();
    if (has_left && has_right) {
      const Rational& l = s.xs[m - 1];
      const Rational& r = s.xs[m];
      if (l == r) throw Error(ErrorKind::NotARealization, "permutation " + std::to_string(i + 1) +
                                                              " is never seen on a vertical line");
      x[i] = (l + r) / 2;
      g[i] = std::min(Rational(1, 2), Rational((r - l) / 4));
    } else if (has_left) {
      x[i] = s.xs[m - 1] + 1;
      g[i] = Rational(1, 2);
    } else if (has_right) {
      x[i] = s.xs[m] - 1;
      g[i] = Rational(1, 2);
    } else {
      x[i] = 0;
      g[i] = Rational(1, 2);
    }
  }
  const Rational x_lo = x.front() - 1;
  const Rational x_hi = x.back() + 1;
  const Rational width = x_hi - x_lo;
  std::vector<Hyperplane> reds;
  for (const Hyperplane& h : lines) reds.push_back(upward(h));
  Rational y_max = slope_intercept(reds.front()).second;
  Rational y_min = y_max;
  for (const Hyperplane& h : reds) {
    const auto [m, c] = slope_intercept(h);
    for (const Rational& xx : {x_lo, x_hi}) {
      const Rational y = m * xx + c;
      y_max = std::max(y_max, y);
      y_min = std::min(y_min, y);
    }
  }
  const Rational y_top = y_max + 2;
  const Rational y_bottom = y_min - 1;
  const Rational g_min = *std::min_element(g.begin(), g.end());
  // Deep enough that a blue drifts less than g_min horizontally while it
  // descends through the reds, and less than 1/2 near q.
  const Rational y_q = std::min({Rational(y_bottom - 2), Rational(y_top - width * (y_top - y_bottom) / g_min - 1),
                                 Rational(y_top - 2 * width - 1)});

  LineArrangement2D out;
  const long n = static_cast<long>(seq.n);
  out.push_back({red_id(-1), Color::Red, horizontal(y_top + 1)});
  out.push_back({red_id(0), Color::Red, horizontal(y_top - 1)});
  for (long j = 1; j <= n; ++j) out.push_back({red_id(j), Color::Red, reds[static_cast<std::size_t>(j - 1)]});
  out.push_back({red_id(n + 1), Color::Red, horizontal(y_q + 1)});
  out.push_back({red_id(n + 2), Color::Red, horizontal(y_q - 1)});
  for (bool primed : {false, true}) {
    const Point q{primed ? x_hi : x_lo, y_q};
    for (std::size_t i = 0; i < k; ++i) {
      out.push_back({blue_id(i + 1, primed), Color::Blue, east_line({x[i], y_top}, q)});
    }
  }
  const VerifyReport check = verify_description(out, reduce_to_bicolored(seq));
  if (!check.ok) throw Error(ErrorKind::VerificationFailed, "construction failed its own check: " + check.diff);
  return out;
}

namespace {

using Row = std::array<Rational, 3>;

Rational apply_row(const Row& h, const Point& p) { return h[0] * p[0] + h[1] * p[1] + h[2]; }

// Row (a, b, -c) of the line a x + b y = c in homogeneous coordinates.
Row row_of(const Hyperplane& h) { return {h.normal[0], h.normal[1], -h.offset}; }

std::optional<Point> meet(const Hyperplane& a, const Hyperplane& b) {
  return solve_linear({a.normal, b.normal}, {a.offset, b.offset});
}

}  // namespace

Extraction extract_allowable(const LineArrangement2D& realization, const std::optional<Rational>& q_position) {
  BicoloredDescription desc;
  AllowableSequence seq;
  try {
    desc = describe(realization);
    seq = sequence_from_description(desc);
  } catch (const Error& e) {
    throw Error(ErrorKind::VerificationFailed, std::string("not a realization of a reduction: ") + e.what());
  }
  const VerifyReport report = verify_description(realization, desc);
  if (!report.ok) throw Error(ErrorKind::VerificationFailed, report.diff);

  std::map<std::string, Hyperplane> by_id;
  for (const ColoredLine& l : realization) by_id.emplace(l.id, l.line);
  const long n = static_cast<long>(seq.n);
  const std::size_t k = seq.perms.size();
  const Hyperplane& far = by_id.at(red_id(n + 2));

  std::vector<Point> p;
  for (std::size_t i = 1; i <= k; ++i) {
    auto hit = meet(by_id.at(blue_id(i, false)), by_id.at(blue_id(i, true)));
    if (!hit) throw Error(ErrorKind::DegenerateHomography, "b" + std::to_string(i) + " and its partner are parallel");
    p.push_back(std::move(*hit));
  }
  // Along r{n+2} every b_i comes before every b'_i, so the stretch between
  // b_1 and b'_k meets no blue; pick q there, off every ordinary red.
  const auto left = meet(far, by_id.at(blue_id(1, false)));
  const auto right = meet(far, by_id.at(blue_id(k, true)));
  if (!left || !right) throw Error(ErrorKind::DegenerateHomography, "control line parallel to a blue");
  auto on_gap = [&](const Rational& t) {
    return Point{(*left)[0] + t * ((*right)[0] - (*left)[0]), (*left)[1] + t * ((*right)[1] - (*left)[1])};
  };
  std::optional<Point> q;
  if (q_position) {
    if (*q_position <= 0 || *q_position >= 1) throw Error(ErrorKind::OutOfRange, "q position must lie in (0, 1)");
    q = on_gap(*q_position);
    for (long j = 1; j <= n; ++j) {
      if (classify(by_id.at(red_id(j)), *q) == Sign::On) {
        throw Error(ErrorKind::DegenerateHomography, "q lies on " + red_id(j));
      }
    }
  }
  for (long den = 2; den < 64 && !q; ++den) {
    for (long num = 1; num < den && !q; ++num) {
      Point c = on_gap(ratio(num, den));
      bool clear = true;
      for (long j = 1; j <= n; ++j) clear = clear && classify(by_id.at(red_id(j)), c) != Sign::On;
      if (clear) q = std::move(c);
    }
  }
  if (!q) throw Error(ErrorKind::DegenerateHomography, "every candidate q lies on a red line");

  const Row ell = row_of(far);
  const Row h1{Rational(1), Rational(0), -(*q)[0]};
  std::optional<Row> h2;
  for (const Row& cand : {Row{Rational(0), Rational(1), Rational(0)}, Row{Rational(1), Rational(0), Rational(0)},
                          Row{Rational(0), Rational(0), Rational(1)}}) {
    if (determinant({{h1.begin(), h1.end()}, {cand.begin(), cand.end()}, {ell.begin(), ell.end()}}) != 0) {
      h2 = cand;
      break;
    }
  }
  if (!h2) throw Error(ErrorKind::DegenerateHomography, "no independent chart row");

  // Lines through q become vertical. Flip the chart so that the p_i run left
  // to right and the stretch from p_i towards q runs downward.
  auto image = [&](const Row& a, const Row& b, const Point& pt) {
    const Rational w = apply_row(ell, pt);
    return Point{apply_row(a, pt) / w, apply_row(b, pt) / w};
  };
  Row r1 = h1;
  Row r2 = *h2;
  {
    const Point a = image(r1, r2, p.front());
    const Point mid{(p.front()[0] + (*q)[0]) / 2, (p.front()[1] + (*q)[1]) / 2};
    if (image(r1, r2, mid)[1] > a[1]) {
      for (Rational& c : r2) c = -c;
    }
    if (k > 1 && image(r1, r2, p[1])[0] < a[0]) {
      for (Rational& c : r1) c = -c;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Point a = image(r1, r2, p[i]);
    const Point mid{(p[i][0] + (*q)[0]) / 2, (p[i][1] + (*q)[1]) / 2};
    if (!(image(r1, r2, mid)[1] < a[1]) || (i > 0 && !(image(r1, r2, p[i - 1])[0] < a[0]))) {
      throw Error(ErrorKind::DegenerateHomography, "chart does not order the points p_i consistently");
    }
  }

  Extraction out;
  out.q = *q;
  out.homography = {{r1.begin(), r1.end()}, {r2.begin(), r2.end()}, {ell.begin(), ell.end()}};
  // Column j of the inverse solves H x = e_j; a line row m maps to m H^-1.
  std::vector<std::vector<Rational>> inverse(3, std::vector<Rational>(3));
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<Rational> e(3, Rational(0));
    e[j] = 1;
    auto col = solve_linear(out.homography, e);
    if (!col) throw Error(ErrorKind::DegenerateHomography, "singular chart");
    for (std::size_t i = 0; i < 3; ++i) inverse[i][j] = (*col)[i];
  }
  for (long j = 1; j <= n; ++j) {
    const Row m = row_of(by_id.at(red_id(j)));
    Row img;
    for (std::size_t c = 0; c < 3; ++c) img[c] = m[0] * inverse[0][c] + m[1] * inverse[1][c] + m[2] * inverse[2][c];
    if (img[1] == 0) throw Error(ErrorKind::DegenerateHomography, red_id(j) + " becomes vertical");
    out.lines.push_back(upward(make_hyperplane({img[0], img[1]}, -img[2])));
  }
  AllowableSequence swept;
  try {
    swept = sweep_sequence(out.lines);
  } catch (const Error& e) {
    throw Error(ErrorKind::DegenerateHomography, e.what());
  }
  if (!contains_subsequence(swept, seq)) {
    throw Error(ErrorKind::VerificationFailed, "extracted lines do not sweep through the sequence");
  }
  return out;
}

}  // namespace hamcut

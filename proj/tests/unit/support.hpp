#pragma once

// Independent oracles shared by the unit tests. Nothing here calls into the
// library's predicates, so agreement is evidence rather than tautology.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hamcut/geometry.hpp"

namespace oracle {

using hamcut::Matrix;
using hamcut::Point;
using hamcut::Rational;

// Permutation expansion: sum over sigma of sgn(sigma) prod a[i][sigma(i)].
inline Rational leibniz_det(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rational total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Rational term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Sign of det [[p_1, 1], ..., [p_d, 1], [q, 1]].
inline int orient_sign(const std::vector<Point>& spanning, const Point& q) {
  Matrix m;
  for (const Point& p : spanning) {
    m.push_back(p);
    m.back().push_back(1);
  }
  m.push_back(q);
  m.back().push_back(1);
  return sgn(leibniz_det(m));
}

inline Rational random_rational(std::mt19937_64& rng, long range, long den) {
  std::uniform_int_distribution<long> num(-range * den, range * den);
  Rational r(num(rng));
  return r / den;
}

inline Point random_point(std::mt19937_64& rng, std::size_t d, long range = 10, long den = 7) {
  Point p;
  for (std::size_t i = 0; i < d; ++i) {
    p.push_back(random_rational(rng, range, den));
  }
  return p;
}

}  // namespace oracle

namespace oracle {

// Closed segment intersection by orientation signs.
inline bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto o = [](const Point& p, const Point& q, const Point& r) { return orient_sign({p, q}, r); };
  auto within = [](const Point& p, const Point& q, const Point& r) {
    return std::min(p[0], q[0]) <= r[0] && r[0] <= std::max(p[0], q[0]) && std::min(p[1], q[1]) <= r[1] &&
           r[1] <= std::max(p[1], q[1]);
  };
  if (a == b) return c == d ? a == c : (o(c, d, a) == 0 && within(c, d, a));
  if (c == d) return o(a, b, c) == 0 && within(a, b, c);
  const int o1 = o(a, b, c), o2 = o(a, b, d), o3 = o(c, d, a), o4 = o(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && within(a, b, c)) || (o2 == 0 && within(a, b, d)) || (o3 == 0 && within(c, d, a)) ||
         (o4 == 0 && within(c, d, b));
}

// Closed triangle (possibly degenerate) membership.
inline bool in_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  if (orient_sign({a, b}, c) == 0) return segments_meet(a, b, p, p) || segments_meet(b, c, p, p) || segments_meet(a, c, p, p);
  const int s1 = orient_sign({a, b}, p), s2 = orient_sign({b, c}, p), s3 = orient_sign({c, a}, p);
  return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

inline bool in_hull_2d(const std::vector<Point>& s, const Point& p) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      for (std::size_t k = j; k < s.size(); ++k) {
        if (in_triangle(s[i], s[j], s[k], p)) return true;
      }
    }
  }
  return false;
}

// Two finite planar sets are strictly separable iff their closed hulls are
// disjoint: no point inside the other hull and no crossing edges.
inline bool hulls_disjoint_2d(const std::vector<Point>& a, const std::vector<Point>& b) {
  for (const Point& p : a) {
    if (in_hull_2d(b, p)) return false;
  }
  for (const Point& p : b) {
    if (in_hull_2d(a, p)) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        for (std::size_t l = k + 1; l < b.size(); ++l) {
          if (segments_meet(a[i], a[j], b[k], b[l])) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace oracle

#include "hamcut/grid_uso.hpp"

namespace oracle {

// Sinks of the subgrid, using nothing but the per-edge direction.
inline std::size_t count_sinks(const hamcut::GridOrientation& o, const hamcut::Subgrid& sub) {
  const hamcut::GridShape& shape = o.shape();
  std::size_t sinks = 0;
  for (std::size_t idx = 0; idx < shape.vertex_count(); ++idx) {
    const hamcut::GridVertex v = shape.vertex_at(idx);
    bool inside = true;
    for (std::size_t i = 0; i < v.size(); ++i) inside = inside && (sub[i] >> v[i] & 1);
    if (!inside) continue;
    bool sink = true;
    for (std::size_t i = 0; i < v.size() && sink; ++i) {
      for (std::size_t b = 0; b < shape.dims[i]; ++b) {
        if (b != v[i] && (sub[i] >> b & 1) && o.points_out(v, i, b)) {
          sink = false;
          break;
        }
      }
    }
    sinks += sink;
  }
  return sinks;
}

// Unique sink in every non-empty induced subgrid.
inline bool unique_sinks_everywhere(const hamcut::GridOrientation& o) {
  const auto& dims = o.shape().dims;
  hamcut::Subgrid sub(dims.size(), 1);
  for (;;) {
    if (count_sinks(o, sub) != 1) return false;
    std::size_t i = dims.size();
    for (;;) {
      if (i == 0) return true;
      --i;
      if (++sub[i] < (std::uint64_t{1} << dims[i])) break;
      sub[i] = 1;
    }
  }
}

}  // namespace oracle

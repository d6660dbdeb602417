#include "hamcut/geometry.hpp"

#include <utility>

#include "hamcut/error.hpp"

namespace hamcut {

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Below: return "below";
    case Sign::On: return "on";
    case Sign::Above: return "above";
  }
  return "?";
}

Hyperplane make_hyperplane(std::vector<Rational> normal, Rational offset) {
  for (const Rational& entry : normal) {
    if (entry == 0) continue;
    Rational scale = abs(entry);
    for (Rational& x : normal) x /= scale;
    offset /= scale;
    return Hyperplane{std::move(normal), std::move(offset)};
  }
  throw Error(ErrorKind::DegenerateSpan, "hyperplane normal is the zero vector");
}

Hyperplane flipped(const Hyperplane& h) {
  Hyperplane out = h;
  for (Rational& x : out.normal) x = -x;
  out.offset = -out.offset;
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of unequal lengths");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t row = r + 1; row < rows; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[r][col];
      for (std::size_t k = col; k < cols; ++k) m[row][k] -= factor * m[r][k];
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

namespace {

void require_dimension(std::span<const Point> spanning, std::size_t d) {
  for (const Point& p : spanning) {
    if (p.size() != d) throw Error(ErrorKind::DimensionMismatch, "point dimension differs from ambient dimension");
  }
}

Matrix lifted_rows(std::span<const Point> points) {
  Matrix rows;
  rows.reserve(points.size());
  for (const Point& p : points) {
    std::vector<Rational> row(p.begin(), p.end());
    row.emplace_back(1);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

bool affinely_independent(std::span<const Point> points) {
  if (points.empty()) return true;
  return rank(lifted_rows(points)) == points.size();
}

Sign orient(std::span<const Point> spanning, const Point& q) {
  const std::size_t d = q.size();
  if (spanning.size() != d) throw Error(ErrorKind::DimensionMismatch, "orient needs exactly d spanning points");
  require_dimension(spanning, d);
  if (!affinely_independent(spanning)) throw Error(ErrorKind::DegenerateSpan, "spanning points are affinely dependent");
  Matrix m = lifted_rows(spanning);
  std::vector<Rational> last(q.begin(), q.end());
  last.emplace_back(1);
  m.push_back(std::move(last));
  return sign_of(sign(determinant(std::move(m))));
}

Hyperplane hyperplane_through(std::span<const Point> spanning) {
  if (spanning.empty()) throw Error(ErrorKind::DimensionMismatch, "no spanning points");
  const std::size_t d = spanning.front().size();
  if (spanning.size() != d) throw Error(ErrorKind::DimensionMismatch, "hyperplane needs exactly d spanning points");
  require_dimension(spanning, d);
  const Matrix rows = lifted_rows(spanning);

  // Cofactor expansion of the orientation determinant along its last row
  // (q_1, ..., q_d, 1): det = sum_j (-1)^(d+1+j) M_j q_j + M_{d+1}.
  auto minor_without = [&](std::size_t skip) {
    Matrix m(d, std::vector<Rational>());
    for (std::size_t r = 0; r < d; ++r) {
      m[r].reserve(d);
      for (std::size_t c = 0; c <= d; ++c) {
        if (c != skip) m[r].push_back(rows[r][c]);
      }
    }
    return determinant(std::move(m));
  };
  std::vector<Rational> normal(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rational minor = minor_without(j);
    // Zero-based j corresponds to column j+1, so the exponent is d + j.
    normal[j] = ((d + j) % 2 == 0) ? minor : Rational(-minor);
  }
  Rational constant = minor_without(d);
  bool zero = true;
  for (const Rational& w : normal) zero = zero && w == 0;
  if (zero) throw Error(ErrorKind::DegenerateSpan, "spanning points are affinely dependent");
  return make_hyperplane(std::move(normal), -constant);
}

Sign classify(const Hyperplane& h, const Point& q) {
  if (q.size() != h.dimension()) throw Error(ErrorKind::DimensionMismatch, "point and hyperplane dimensions differ");
  return sign_of(cmp(dot(h.normal, q), h.offset));
}

SideCounts side_counts(const Hyperplane& h, std::span<const Point> points) {
  SideCounts counts;
  for (const Point& p : points) {
    switch (classify(h, p)) {
      case Sign::Below: ++counts.below; break;
      case Sign::On: ++counts.on; break;
      case Sign::Above: ++counts.above; break;
    }
  }
  return counts;
}

Hyperplane dualize(const Point& p) {
  if (p.size() != 2) throw Error(ErrorKind::DimensionMismatch, "duality is planar");
  // y = a x - b  <=>  -a x + y = -b, positive side above.
  return make_hyperplane({-p[0], Rational(1)}, -p[1]);
}

std::pair<Rational, Rational> slope_intercept(const Hyperplane& h) {
  if (h.dimension() != 2) throw Error(ErrorKind::DimensionMismatch, "expected a planar line");
  if (h.normal[1] == 0) throw Error(ErrorKind::VerticalLine, "vertical line has no slope");
  return {-h.normal[0] / h.normal[1], h.offset / h.normal[1]};
}

Point dualize_line(const Hyperplane& h) {
  auto [slope, intercept] = slope_intercept(h);
  if (h.normal[1] < 0) {
    throw Error(ErrorKind::OrientationNotNormalized, "dual point needs the upper half-plane as positive side");
  }
  return {slope, -intercept};
}

Hyperplane line_from_slope(const Rational& slope, const Rational& intercept) {
  return make_hyperplane({-slope, Rational(1)}, intercept);
}

Rotation2 Rotation2::from_half_tangent(const Rational& t) {
  Rational denom = 1 + t * t;
  return {(1 - t * t) / denom, 2 * t / denom};
}

Point Rotation2::apply(const Point& p) const {
  if (p.size() != 2) throw Error(ErrorKind::DimensionMismatch, "rotation is planar");
  return {cos * p[0] - sin * p[1], sin * p[0] + cos * p[1]};
}

Hyperplane Rotation2::apply(const Hyperplane& h) const {
  // w . q = c with q = R^T q' gives (R w) . q' = c.
  return make_hyperplane(apply(h.normal), h.offset);
}

}  // namespace hamcut

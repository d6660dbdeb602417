#include "hamcut/separation.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "hamcut/error.hpp"
#include "hamcut/linear_program.hpp"

namespace hamcut {

WeakPositionReport check_weak_general_position(const ColoredPointSet& set) {
  WeakPositionReport report;
  const auto sizes = set.sizes();
  bool done = false;
  for_each_tuple(sizes, [&](const std::vector<std::size_t>& tuple) {
    if (done) return;
    const auto spanning = set.colorful_points(tuple);
    if (!affinely_independent(spanning)) {
      report = {false, tuple, std::nullopt, true};
      done = true;
      return;
    }
    const Hyperplane h = hyperplane_through(spanning);
    for (std::size_t i = 0; i < set.dimension() && !done; ++i) {
      for (std::size_t j = 0; j < set.size(i); ++j) {
        if (j == tuple[i]) continue;
        if (classify(h, set.point(i, j)) == Sign::On) {
          report = {false, tuple, std::make_pair(i, j), false};
          done = true;
          break;
        }
      }
    }
  });
  return report;
}

std::optional<Hyperplane> strictly_separate(std::span<const Point> above, std::span<const Point> below) {
  const Point& any = !above.empty() ? above.front() : below.front();
  const std::size_t d = any.size();
  // Unknowns (w, c): w.a - c >= 1 on `above`, w.b - c <= -1 on `below`.
  std::vector<LinearConstraint> rows;
  auto add = [&](const Point& p, Relation rel, int rhs) {
    std::vector<Rational> coeffs(p.begin(), p.end());
    coeffs.emplace_back(-1);
    rows.push_back({std::move(coeffs), rel, Rational(rhs)});
  };
  for (const Point& p : above) add(p, Relation::GreaterEqual, 1);
  for (const Point& p : below) add(p, Relation::LessEqual, -1);
  auto solution = find_feasible_point(rows, d + 1);
  if (!solution) return std::nullopt;
  std::vector<Rational> normal(solution->begin(), solution->begin() + static_cast<std::ptrdiff_t>(d));
  bool zero = std::all_of(normal.begin(), normal.end(), [](const Rational& x) { return x == 0; });
  if (zero) {
    // Only possible when one side is empty: any hyperplane far away works.
    normal.assign(d, 0);
    normal[0] = 1;
    Rational extreme = 0;
    bool first = true;
    for (const Point& p : above) {
      if (first || p[0] < extreme) extreme = p[0];
      first = false;
    }
    for (const Point& p : below) {
      if (first || p[0] > extreme) extreme = p[0];
      first = false;
    }
    return make_hyperplane(std::move(normal), above.empty() ? Rational(extreme + 1) : Rational(extreme - 1));
  }
  return make_hyperplane(std::move(normal), (*solution)[d]);
}

bool weakly_separable(std::span<const Point> above, std::span<const Point> below) {
  const Point& any = !above.empty() ? above.front() : below.front();
  const std::size_t d = any.size();
  for (std::size_t k = 0; k < d; ++k) {
    for (int fixed : {1, -1}) {
      std::vector<LinearConstraint> rows;
      for (const Point& p : above) {
        std::vector<Rational> coeffs(p.begin(), p.end());
        coeffs.emplace_back(-1);
        rows.push_back({std::move(coeffs), Relation::GreaterEqual, Rational(0)});
      }
      for (const Point& p : below) {
        std::vector<Rational> coeffs(p.begin(), p.end());
        coeffs.emplace_back(-1);
        rows.push_back({std::move(coeffs), Relation::LessEqual, Rational(0)});
      }
      std::vector<Rational> pin(d + 1);
      pin[k] = 1;
      rows.push_back({std::move(pin), Relation::Equal, Rational(fixed)});
      if (find_feasible_point(rows, d + 1)) return true;
    }
  }
  return false;
}

namespace {

std::pair<std::vector<Point>, std::vector<Point>> split_classes(const ColoredPointSet& set, std::uint32_t mask) {
  std::vector<Point> positive;
  std::vector<Point> negative;
  for (std::size_t i = 0; i < set.dimension(); ++i) {
    auto& target = (mask >> i) & 1U ? positive : negative;
    target.insert(target.end(), set.points(i).begin(), set.points(i).end());
  }
  return {std::move(positive), std::move(negative)};
}

std::vector<std::size_t> mask_to_indices(std::uint32_t mask, std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d; ++i) {
    if ((mask >> i) & 1U) out.push_back(i);
  }
  return out;
}

}  // namespace

SeparationReport check_separation_for(const ColoredPointSet& set, std::uint32_t positive_classes) {
  auto [positive, negative] = split_classes(set, positive_classes);
  SeparationReport report;
  if (auto h = strictly_separate(positive, negative)) {
    report.witness = std::move(h);
    return report;
  }
  report.satisfied = false;
  report.violating_subset = mask_to_indices(positive_classes, set.dimension());
  report.touching = weakly_separable(positive, negative);
  return report;
}

SeparationReport check_well_separated(const ColoredPointSet& set) {
  const std::uint32_t full = (1U << set.dimension()) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    SeparationReport report = check_separation_for(set, mask);
    if (!report.satisfied) return report;
  }
  return {};
}

namespace {

// Drops to coordinates in which the projection is an affine isomorphism of
// the points' affine hull, so affine functions on the hull are unchanged.
std::vector<Point> project_to_hull(const std::vector<Point>& points, std::size_t& hull_dim) {
  const std::size_t k = points.front().size();
  Matrix directions;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Point v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = points[i][j] - points[0][j];
    directions.push_back(std::move(v));
  }
  hull_dim = rank(directions);
  if (hull_dim == k) return points;
  // Greedily keep coordinate columns that raise the rank of the direction
  // matrix restricted to them.
  std::vector<std::size_t> keep;
  for (std::size_t col = 0; col < k && keep.size() < hull_dim; ++col) {
    auto trial = keep;
    trial.push_back(col);
    Matrix restricted;
    for (const auto& v : directions) {
      std::vector<Rational> row;
      for (std::size_t c : trial) row.push_back(v[c]);
      restricted.push_back(std::move(row));
    }
    if (rank(restricted) == trial.size()) keep = std::move(trial);
  }
  std::vector<Point> out;
  for (const Point& p : points) {
    Point q;
    for (std::size_t c : keep) q.push_back(p[c]);
    out.push_back(std::move(q));
  }
  return out;
}

void collect_dichotomies(const std::vector<Point>& points, const std::vector<std::uint64_t>& bits,
                         std::set<std::uint64_t>& out) {
  std::uint64_t all = 0;
  for (std::uint64_t b : bits) all |= b;
  out.insert(0);
  out.insert(all);
  if (points.size() <= 1 || points.front().empty()) return;

  std::size_t hull_dim = 0;
  const std::vector<Point> local = project_to_hull(points, hull_dim);
  if (hull_dim == 0) return;
  const std::size_t k = local.front().size();

  // Every strictly realizable dichotomy is an infinitesimal perturbation of
  // a hyperplane through k affinely independent points: the closed cone of
  // separating (w, c) is pointed and its extreme rays are such hyperplanes.
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  const std::size_t n = local.size();
  for (;;) {
    std::vector<Point> spanning;
    for (std::size_t idx : pick) spanning.push_back(local[idx]);
    if (affinely_independent(spanning)) {
      const Hyperplane h = hyperplane_through(spanning);
      std::uint64_t above = 0;
      std::uint64_t below = 0;
      std::vector<Point> on_points;
      std::vector<std::uint64_t> on_bits;
      for (std::size_t j = 0; j < n; ++j) {
        switch (classify(h, local[j])) {
          case Sign::Above: above |= bits[j]; break;
          case Sign::Below: below |= bits[j]; break;
          case Sign::On: {
            // Coordinates of the hyperplane itself: drop one axis along
            // which the normal is nonzero.
            std::size_t drop = 0;
            while (h.normal[drop] == 0) ++drop;
            Point q;
            for (std::size_t c = 0; c < k; ++c) {
              if (c != drop) q.push_back(local[j][c]);
            }
            on_points.push_back(std::move(q));
            on_bits.push_back(bits[j]);
            break;
          }
        }
      }
      std::set<std::uint64_t> patterns;
      collect_dichotomies(on_points, on_bits, patterns);
      for (std::uint64_t pattern : patterns) {
        out.insert(above | pattern);
        out.insert(below | pattern);
      }
    }
    // Next k-combination of n.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<std::uint64_t> class_masks(const ColoredPointSet& set) {
  std::vector<std::uint64_t> masks;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < set.dimension(); ++i) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < set.size(i); ++j) m |= std::uint64_t{1} << (offset + j);
    masks.push_back(m);
    offset += set.size(i);
  }
  return masks;
}

}  // namespace

std::vector<std::uint64_t> realizable_dichotomies(std::span<const Point> points) {
  if (points.size() > 64) throw Error(ErrorKind::TooLarge, "dichotomy enumeration is limited to 64 points");
  if (points.empty()) return {0};
  std::vector<Point> pts(points.begin(), points.end());
  std::vector<std::uint64_t> bits;
  for (std::size_t j = 0; j < pts.size(); ++j) bits.push_back(std::uint64_t{1} << j);
  std::set<std::uint64_t> out;
  collect_dichotomies(pts, bits, out);
  return {out.begin(), out.end()};
}

bool well_separated_by_enumeration(const ColoredPointSet& set) {
  const auto dichotomies = realizable_dichotomies(set.all_points());
  const auto masks = class_masks(set);
  const std::uint32_t full = (1U << set.dimension()) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::uint64_t wanted = 0;
    for (std::size_t i = 0; i < set.dimension(); ++i) {
      if ((mask >> i) & 1U) wanted |= masks[i];
    }
    if (!std::binary_search(dichotomies.begin(), dichotomies.end(), wanted)) return false;
  }
  return true;
}

void validate_beta_gamma(const ColoredPointSet& set, const BetaGamma& bg) {
  if (bg.beta.size() != set.dimension() || bg.gamma.size() != set.dimension()) {
    throw Error(ErrorKind::InvalidBetaGamma, "beta and gamma need one entry per class");
  }
  for (std::size_t i = 0; i < set.dimension(); ++i) {
    if (bg.beta[i] < 1 || bg.beta[i] > bg.gamma[i] || bg.gamma[i] > set.size(i)) {
      throw Error(ErrorKind::InvalidBetaGamma, "need 1 <= beta_i <= gamma_i <= n_i");
    }
  }
}

namespace {

std::optional<std::uint64_t> find_beta_gamma_dichotomy(const std::vector<std::uint64_t>& dichotomies,
                                                       const std::vector<std::uint64_t>& masks,
                                                       const BetaGamma& bg, std::uint32_t positive) {
  for (std::uint64_t m : dichotomies) {
    bool ok = true;
    for (std::size_t i = 0; i < masks.size() && ok; ++i) {
      const auto above = static_cast<std::size_t>(std::popcount(m & masks[i]));
      ok = ((positive >> i) & 1U) ? above >= bg.gamma[i] : above + 1 <= bg.beta[i];
    }
    if (ok) return m;
  }
  return std::nullopt;
}

}  // namespace

SeparationReport check_beta_gamma(const ColoredPointSet& set, const BetaGamma& bg) {
  validate_beta_gamma(set, bg);
  const auto dichotomies = realizable_dichotomies(set.all_points());
  const auto masks = class_masks(set);
  const std::uint32_t count = 1U << set.dimension();
  for (std::uint32_t positive = 0; positive < count; ++positive) {
    if (!find_beta_gamma_dichotomy(dichotomies, masks, bg, positive)) {
      SeparationReport report;
      report.satisfied = false;
      report.violating_subset = mask_to_indices(positive, set.dimension());
      return report;
    }
  }
  return {};
}

std::optional<Hyperplane> beta_gamma_witness(const ColoredPointSet& set, const BetaGamma& bg,
                                             std::uint32_t positive_classes) {
  validate_beta_gamma(set, bg);
  const auto points = set.all_points();
  const auto dichotomies = realizable_dichotomies(points);
  auto m = find_beta_gamma_dichotomy(dichotomies, class_masks(set), bg, positive_classes);
  if (!m) return std::nullopt;
  std::vector<Point> above;
  std::vector<Point> below;
  for (std::size_t j = 0; j < points.size(); ++j) {
    ((*m >> j) & 1U ? above : below).push_back(points[j]);
  }
  return strictly_separate(above, below);
}

}  // namespace hamcut

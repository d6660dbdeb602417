#include "hamcut/alpha_cut.hpp"

#include <sstream>

#include "hamcut/error.hpp"
#include "hamcut/grid_uso.hpp"
#include "hamcut/linear_program.hpp"

namespace hamcut {

namespace {

std::string format_tuples(const std::vector<std::vector<std::size_t>>& tuples) {
  std::ostringstream out;
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    out << (k ? " " : "") << '(';
    for (std::size_t i = 0; i < tuples[k].size(); ++i) out << (i ? "," : "") << tuples[k][i];
    out << ')';
  }
  return out.str();
}

}  // namespace

std::optional<Cut> evaluate_tuple(const ColoredPointSet& set, const std::vector<std::size_t>& tuple) {
  const auto spanning = set.colorful_points(tuple);
  if (!affinely_independent(spanning)) return std::nullopt;
  Cut cut{tuple, hyperplane_through(spanning), {}};
  for (std::size_t i = 0; i < set.dimension(); ++i) {
    SideCounts c = side_counts(cut.hyperplane, set.points(i));
    if (c.on != 1) return std::nullopt;
    cut.counts.push_back(c);
  }
  return cut;
}

void validate_alpha(const ColoredPointSet& set, const AlphaVector& alpha) {
  if (alpha.size() != set.dimension()) throw Error(ErrorKind::OutOfRange, "alpha needs one entry per class");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 1 || alpha[i] > set.size(i)) throw Error(ErrorKind::OutOfRange, "alpha_i must lie in 1..n_i");
  }
}

Cut find_alpha_cut(const ColoredPointSet& set, const AlphaVector& alpha) {
  validate_alpha(set, alpha);
  std::vector<Cut> found;
  for_each_tuple(set.sizes(), [&](const std::vector<std::size_t>& tuple) {
    auto cut = evaluate_tuple(set, tuple);
    if (!cut) return;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (cut->counts[i].below != alpha[i] - 1) return;
    }
    found.push_back(std::move(*cut));
  });
  if (found.empty()) throw Error(ErrorKind::NoCut, "no colorful hyperplane has the requested counts");
  if (found.size() > 1) {
    std::vector<std::vector<std::size_t>> tuples;
    for (const Cut& c : found) tuples.push_back(c.tuple);
    throw Error(ErrorKind::MultipleCuts, "tuples " + format_tuples(tuples));
  }
  return std::move(found.front());
}

std::map<AlphaVector, Cut> all_alpha_cuts(const ColoredPointSet& set) {
  std::map<AlphaVector, Cut> cuts;
  std::vector<std::vector<std::size_t>> duplicated;
  for_each_tuple(set.sizes(), [&](const std::vector<std::size_t>& tuple) {
    auto cut = evaluate_tuple(set, tuple);
    if (!cut) return;
    AlphaVector alpha;
    for (const SideCounts& c : cut->counts) alpha.push_back(c.below + 1);
    if (!cuts.emplace(alpha, std::move(*cut)).second) duplicated.push_back(alpha);
  });
  std::size_t expected = 1;
  for (std::size_t n : set.sizes()) expected *= n;
  if (!duplicated.empty() || cuts.size() != expected) {
    throw Error(ErrorKind::NotBijective, std::to_string(cuts.size()) + " of " + std::to_string(expected) +
                                             " count vectors hit; duplicated " + format_tuples(duplicated));
  }
  return cuts;
}

Cut cut_from_grid(const ColoredPointSet& set, const AlphaVector& alpha) {
  validate_alpha(set, alpha);
  const GridOrientation sigma = build_sigma(set);
  Outmap target;
  for (std::size_t a : alpha) target.push_back(a - 1);
  const GridVertex v = find_vertex_with_outmap(sigma, target);
  auto cut = evaluate_tuple(set, v);
  if (!cut) throw Error(ErrorKind::OnPredicate, "grid vertex spans a degenerate hyperplane");
  return std::move(*cut);
}

SemiCutResult find_semi_cuts(const ColoredPointSet& set, const SemiCutQuery& query) {
  const std::size_t d = set.dimension();
  if (d < 2) throw Error(ErrorKind::DimensionMismatch, "semi-cuts need d >= 2");
  if (query.base_point >= set.size(0)) throw Error(ErrorKind::OutOfRange, "base point out of range");
  if (query.targets.size() != d - 1) throw Error(ErrorKind::OutOfRange, "need one target per class 2..d");
  SemiCutResult result;
  std::vector<std::size_t> sizes = set.sizes();
  sizes[0] = 1;
  for_each_tuple(sizes, [&](const std::vector<std::size_t>& t) {
    std::vector<std::size_t> tuple = t;
    tuple[0] = query.base_point;
    auto cut = evaluate_tuple(set, tuple);
    if (!cut) {
      result.degenerate_tuples.push_back(tuple);
      return;
    }
    for (std::size_t i = 1; i < d; ++i) {
      if (cut->counts[i].above != query.targets[i - 1]) return;
    }
    result.cuts.push_back(std::move(*cut));
  });
  return result;
}

SemiCutProbeReport probe_lemma_a1(const ColoredPointSet& set) {
  const std::size_t d = set.dimension();
  if (d < 2) throw Error(ErrorKind::DimensionMismatch, "semi-cuts need d >= 2");
  SemiCutProbeReport report;
  for (std::size_t x = 0; x < set.size(0); ++x) {
    std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> by_target;
    std::vector<std::size_t> sizes = set.sizes();
    sizes[0] = 1;
    for_each_tuple(sizes, [&](const std::vector<std::size_t>& t) {
      std::vector<std::size_t> tuple = t;
      tuple[0] = x;
      auto cut = evaluate_tuple(set, tuple);
      if (!cut) {
        ++report.degenerate_tuples;
        return;
      }
      ++report.semi_cuts;
      std::vector<std::size_t> targets;
      for (std::size_t i = 1; i < d; ++i) targets.push_back(cut->counts[i].above);
      by_target[targets].push_back(tuple);
    });
    for (auto& [targets, tuples] : by_target) {
      if (tuples.size() >= 2) report.multiple.push_back({x, targets, std::move(tuples)});
    }
  }
  return report;
}

bool in_convex_hull(std::span<const Point> points, const Point& q) {
  if (points.empty()) return false;
  const std::size_t n = points.size();
  std::vector<LinearConstraint> rows;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> unit(n);
    unit[k] = 1;
    rows.push_back({std::move(unit), Relation::GreaterEqual, Rational(0)});
  }
  rows.push_back({std::vector<Rational>(n, Rational(1)), Relation::Equal, Rational(1)});
  for (std::size_t c = 0; c < q.size(); ++c) {
    std::vector<Rational> coords;
    for (const Point& p : points) coords.push_back(p.at(c));
    rows.push_back({std::move(coords), Relation::Equal, q[c]});
  }
  return find_feasible_point(rows, n).has_value();
}

std::vector<SemiCutPair> semi_cut_pairs(const ColoredPointSet& set) {
  if (set.dimension() != 2) throw Error(ErrorKind::DimensionMismatch, "semi-cut pairs are planar");
  std::vector<SemiCutPair> pairs;
  for (std::size_t x = 0; x < set.size(0); ++x) {
    for (std::size_t y = x + 1; y < set.size(0); ++y) {
      for (std::size_t a = 0; a <= set.size(1); ++a) {
        const auto cuts_x = find_semi_cuts(set, {x, {a}}).cuts;
        const auto cuts_y = find_semi_cuts(set, {y, {a}}).cuts;
        for (const Cut& cx : cuts_x) {
          for (const Cut& cy : cuts_y) {
            SemiCutPair pair{x, y, {a}, cx, cy, std::nullopt, false};
            pair.intersection = solve_linear({cx.hyperplane.normal, cy.hyperplane.normal},
                                             {cx.hyperplane.offset, cy.hyperplane.offset});
            if (pair.intersection) pair.intersection_in_hull = in_convex_hull(set.points(0), *pair.intersection);
            pairs.push_back(std::move(pair));
          }
        }
      }
    }
  }
  return pairs;
}

}  // namespace hamcut

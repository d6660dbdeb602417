#include "hamcut/generate.hpp"

#include "hamcut/error.hpp"

namespace hamcut {

Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t den) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const auto num = lo + static_cast<std::int64_t>(rng() % span);
  Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

std::vector<std::size_t> random_sizes(std::size_t d, std::size_t lo, std::size_t hi, Rng& rng) {
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < d; ++i) sizes.push_back(lo + rng() % (hi - lo + 1));
  return sizes;
}

bool in_general_position(const ColoredPointSet& set) {
  const std::vector<Point> points = set.all_points();
  const std::size_t d = set.dimension();
  const std::size_t n = points.size();
  if (n <= d) return affinely_independent(points);
  std::vector<std::size_t> pick(d + 1);
  for (std::size_t i = 0; i <= d; ++i) pick[i] = i;
  for (;;) {
    std::vector<Point> subset;
    for (std::size_t idx : pick) subset.push_back(points[idx]);
    if (!affinely_independent(subset)) return false;
    std::size_t i = d + 1;
    while (i > 0 && pick[i - 1] == n - (d + 1) + (i - 1)) --i;
    if (i == 0) return true;
    ++pick[i - 1];
    for (std::size_t j = i; j <= d; ++j) pick[j] = pick[j - 1] + 1;
  }
}

ColoredPointSet generate_well_separated(std::size_t d, const std::vector<std::size_t>& sizes, Rng& rng,
                                        std::size_t budget) {
  if (d == 0 || sizes.size() != d) throw Error(ErrorKind::DimensionMismatch, "need one size per class");
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<std::vector<Point>> classes(d);
    for (std::size_t i = 0; i < d; ++i) {
      Point center(d, Rational(0));
      if (d == 2) {
        center[0] = i == 0 ? 0 : 10;
      } else {
        center[i] = 10;
      }
      for (std::size_t j = 0; j < sizes[i]; ++j) {
        Point p = center;
        for (Rational& x : p) x += random_rational(rng, -2000, 2000, 1000);
        classes[i].push_back(std::move(p));
      }
    }
    ColoredPointSet set(d, std::move(classes));
    if (in_general_position(set) && check_well_separated(set).satisfied) return set;
  }
  throw Error(ErrorKind::GenerationBudgetExceeded, "no well-separated instance within the attempt budget");
}

ColoredPointSet generate_beta_gamma_instance(Rng& rng, std::size_t budget) {
  const BetaGamma bg{{2, 2}, {2, 2}};
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<std::vector<Point>> classes(2);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        Point p{random_rational(rng, -10, 10, 1), random_rational(rng, -10, 10, 1)};
        if (i == 1) p[0] += 4;
        classes[i].push_back(std::move(p));
      }
    }
    ColoredPointSet set(2, std::move(classes));
    if (!in_general_position(set)) continue;
    if (check_well_separated(set).satisfied) continue;
    if (check_beta_gamma(set, bg).satisfied) return set;
  }
  throw Error(ErrorKind::GenerationBudgetExceeded, "no (beta, gamma)-separated instance within the attempt budget");
}

std::vector<Hyperplane> generate_simple_lines(std::size_t n, Rng& rng, std::size_t budget) {
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<Hyperplane> lines;
    for (std::size_t i = 0; i < n; ++i) {
      lines.push_back(line_from_slope(random_rational(rng, -1000, 1000, 100), random_rational(rng, -1000, 1000, 100)));
    }
    try {
      // Parallel pairs show up as missing swaps.
      if (sweep_sequence(lines).perms.size() == n * (n - 1) / 2 + 1) return lines;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::GenerationBudgetExceeded, "no simple arrangement within the attempt budget");
}

AllowableSequence random_walk_sequence(std::size_t n, std::size_t length, Rng& rng) {
  AllowableSequence seq;
  seq.n = n;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i + 1;
  seq.perms.push_back(perm);
  for (std::size_t step = 1; step < std::max<std::size_t>(length, 1) && n >= 2; ++step) {
    const std::size_t p = rng() % (n - 1);
    std::swap(perm[p], perm[p + 1]);
    seq.perms.push_back(perm);
  }
  return seq;
}

AllowableSequence random_window(const AllowableSequence& sweep, std::size_t length, Rng& rng) {
  if (length == 0 || length >= sweep.perms.size()) return sweep;
  const std::size_t start = rng() % (sweep.perms.size() - length + 1);
  AllowableSequence out{sweep.n, {}};
  out.perms.assign(sweep.perms.begin() + static_cast<std::ptrdiff_t>(start),
                   sweep.perms.begin() + static_cast<std::ptrdiff_t>(start + length));
  return out;
}

}  // namespace hamcut

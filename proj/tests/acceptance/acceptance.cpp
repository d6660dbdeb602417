// Desk-scale acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails. HAMCUT_WORKERS (default 1) spreads seeded batches
// over threads; results are merged in trial order, so output is identical
// for every worker count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hamcut/alpha_cut.hpp"
#include "hamcut/arrangement.hpp"
#include "hamcut/error.hpp"
#include "hamcut/generate.hpp"
#include "hamcut/grid_uso.hpp"
#include "hamcut/io.hpp"
#include "hamcut/levels.hpp"
#include "hamcut/miranda.hpp"
#include "hamcut/separation.hpp"
#include "hamcut/stretchability.hpp"

using namespace hamcut;

namespace {

std::string fixture(const std::string& name) { return std::string(HAMCUT_FIXTURE_DIR) + "/" + name; }

std::size_t workers() {
  const char* env = std::getenv("HAMCUT_WORKERS");
  if (!env) return 1;
  const long n = std::strtol(env, nullptr, 10);
  return n >= 1 && n <= 256 ? static_cast<std::size_t>(n) : 1;
}

// Runs fn(i) for i in [0, count) on the worker pool; fn must only touch
// its own slot.
template <typename T>
std::vector<T> run_batch(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  const std::size_t w = std::min(workers(), std::max<std::size_t>(count, 1));
  if (w <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += w) out[i] = fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
  return out;
}

// Outcome of one trial: empty when fine, otherwise what went wrong.
using Failure = std::string;

std::size_t count_failures(const std::vector<Failure>& v, std::string& first) {
  std::size_t n = 0;
  for (const Failure& f : v) {
    if (f.empty()) continue;
    if (n++ == 0) first = f;
  }
  return n;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& run) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream t;
  t.precision(1);
  t << std::fixed << secs;
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << o.detail << " (" << t.str()
            << " s)" << std::endl;
  failures += !o.pass;
}

Rng trial_rng(std::uint64_t criterion, std::size_t trial) { return Rng(criterion * 1'000'003ULL + trial); }

// Sinks counted straight from the edge directions.
bool unique_sinks_everywhere(const GridOrientation& o) {
  const GridShape& shape = o.shape();
  Subgrid sub(shape.dimension(), 1);
  for (;;) {
    std::size_t sinks = 0;
    for (std::size_t idx = 0; idx < shape.vertex_count(); ++idx) {
      const GridVertex v = shape.vertex_at(idx);
      bool inside = true, sink = true;
      for (std::size_t i = 0; i < v.size(); ++i) inside = inside && (sub[i] >> v[i] & 1);
      for (std::size_t i = 0; i < v.size() && inside && sink; ++i) {
        for (std::size_t b = 0; b < shape.dims[i] && sink; ++b) {
          if (b != v[i] && (sub[i] >> b & 1) && o.points_out(v, i, b)) sink = false;
        }
      }
      sinks += inside && sink;
    }
    if (sinks != 1) return false;
    std::size_t i = shape.dimension();
    for (;;) {
      if (i == 0) return true;
      --i;
      if (++sub[i] < (std::uint64_t{1} << shape.dims[i])) break;
      sub[i] = 1;
    }
  }
}

Outcome uso_modes_exhaustive() {
  std::size_t total = 0, disagreements = 0, usos = 0;
  for (const GridShape& shape : {GridShape({3, 3}), GridShape({2, 2, 2})}) {
    for_each_orientation(shape, [&](const GridOrientation& o) {
      ++total;
      const bool full = is_uso(o, UsoMode::Full).is_uso;
      disagreements += full != is_uso(o, UsoMode::CubeCriterion).is_uso;
      usos += full;
    });
  }
  std::ostringstream d;
  d << total << " orientations of [3]x[3] and [2]^3, " << usos << " USOs, " << disagreements
    << " disagreements between full and cube-based checks";
  return {total == (1u << 18) + (1u << 12) && disagreements == 0, d.str()};
}

Outcome cube_criterion() {
  std::size_t total = 0, disagreements = 0, usos = 0;
  for_each_orientation(GridShape({2, 2, 2}), [&](const GridOrientation& o) {
    ++total;
    const bool expected = unique_sinks_everywhere(o);
    usos += expected;
    disagreements += is_cube_uso(o, {3, 3, 3}) != expected;
  });
  std::ostringstream d;
  d << total << " 3-cube orientations, " << usos << " USOs, " << disagreements << " disagreements";
  return {total == 4096 && disagreements == 0, d.str()};
}

Failure alpha_cut_trial(const ColoredPointSet& set) {
  const GridOrientation o = build_sigma(set);
  if (!is_uso(o, UsoMode::Full).is_uso) return "sigma is not a USO";
  if (!outmap_table(o).bijection) return "outmap is not a bijection";
  std::size_t total = 1;
  for (std::size_t n : set.sizes()) total *= n;
  const auto cuts = all_alpha_cuts(set);
  if (cuts.size() != total) return "wrong number of cuts";
  for (const auto& [alpha, cut] : cuts) {
    if (!(cut_from_grid(set, alpha) == cut)) return "grid and scan disagree";
  }
  return {};
}

std::vector<ColoredPointSet> desk_instances() {
  return run_batch<ColoredPointSet>(250, [](std::size_t i) {
    Rng rng = trial_rng(3, i);
    if (i < 200) return generate_well_separated(2, random_sizes(2, 1, 6, rng), rng);
    return generate_well_separated(3, random_sizes(3, 1, 4, rng), rng);
  });
}

Outcome alpha_cuts_desk_scale(const std::vector<ColoredPointSet>& sets) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_batch<Failure>(sets.size(), [&](std::size_t i) { return alpha_cut_trial(sets[i]); });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string first;
  const std::size_t bad = count_failures(results, first);
  std::ostringstream d;
  d << sets.size() << " instances (200 planar, 50 in 3D), " << bad << " failures";
  if (bad) d << " (first: " << first << ")";
  return {bad == 0 && secs < 120, d.str()};
}

Outcome duality_exactness() {
  Rng rng(4);
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Point p{random_rational(rng, -100000, 100000, 997), random_rational(rng, -100000, 100000, 991)};
    const Point q{random_rational(rng, -100000, 100000, 983), random_rational(rng, -100000, 100000, 977)};
    const Hyperplane h = dualize(p);
    if (!(dualize_line(h) == p)) ++bad;
    // p above q* iff q above p*, and both sides of On agree.
    if (classify(dualize(q), p) != classify(dualize(p), q)) ++bad;
  }
  std::ostringstream d;
  d << "1000 random rational points, " << bad << " involution or incidence failures";
  return {bad == 0, d.str()};
}

Failure planar_x_alpha_trial(std::size_t trial) {
  Rng rng = trial_rng(5, trial);
  const ColoredPointSet set = generate_well_separated(2, random_sizes(2, 1, 6, rng), rng);
  const ColoredLineArrangement arr = dualize(set);
  const RainbowReport rep = verify_rainbow_ws(arr);
  if (!rep.rainbow || !rep.well_separated) return "generated arrangement is not rainbow well-separated";
  std::set<Point> crossings;
  for_each_tuple(arr.sizes(), [&](const std::vector<std::size_t>& t) { crossings.insert(*colorful_intersection(arr, t)); });
  std::set<Point> hit;
  for (std::size_t a = 1; a <= arr.size(0); ++a) {
    for (std::size_t b = 1; b <= arr.size(1); ++b) {
      const Point x = x_alpha_bruteforce(arr, {a, b});  // throws on zero or several
      hit.insert(x);
      const auto meet = level_intersections(k_level(arr.lines(0), a), k_level(arr.lines(1), b));
      if (meet != std::vector<Point>{x}) return "level intersection differs from x_alpha";
      const MirandaResult m = miranda_solve(level_problem(arr, {a, b}), ratio(1, 1000000000));
      if (std::hypot(to_double(m.point[0] - x[0]), to_double(m.point[1] - x[1])) > 1e-6) {
        return "Miranda solver missed x_alpha";
      }
    }
  }
  if (hit != crossings) return "alpha -> x_alpha is not a bijection onto the colorful crossings";
  return {};
}

Outcome planar_x_alpha() {
  const auto results = run_batch<Failure>(100, planar_x_alpha_trial);
  std::string first;
  const std::size_t bad = count_failures(results, first);
  std::ostringstream d;
  d << "100 dual arrangements (n_i <= 6), " << bad << " failures";
  if (bad) d << " (first: " << first << ")";
  return {bad == 0, d.str()};
}

// Number of colorful tuples with alpha_i - 1 points below, per alpha in the box.
std::map<AlphaVector, std::size_t> box_cut_counts(const ColoredPointSet& set, const BetaGamma& bg) {
  std::map<AlphaVector, std::size_t> counts;
  for (std::size_t a = bg.beta[0]; a <= bg.gamma[0]; ++a) {
    for (std::size_t b = bg.beta[1]; b <= bg.gamma[1]; ++b) counts[{a, b}] = 0;
  }
  for_each_tuple(set.sizes(), [&](const std::vector<std::size_t>& t) {
    if (auto cut = evaluate_tuple(set, t)) {
      const AlphaVector alpha{cut->counts[0].below + 1, cut->counts[1].below + 1};
      if (auto it = counts.find(alpha); it != counts.end()) ++it->second;
    }
  });
  return counts;
}

Outcome box_cuts() {
  const BetaGamma bg{{2, 2}, {2, 2}};
  std::vector<ColoredPointSet> sets{io::instance_from(io::read_file(fixture("beta_gamma.json")))};
  Rng rng(6);
  for (int i = 0; i < 20; ++i) sets.push_back(generate_beta_gamma_instance(rng));
  std::size_t separated = 0, unique = 0, none = 0, several = 0, max_cuts = 0;
  std::string fixture_counts;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    separated += check_beta_gamma(sets[s], bg).satisfied;
    for (const auto& [alpha, n] : box_cut_counts(sets[s], bg)) {
      unique += n == 1;
      none += n == 0;
      several += n > 1;
      max_cuts = std::max(max_cuts, n);
      if (s == 0) fixture_counts = std::to_string(n);
    }
  }
  std::ostringstream d;
  d << sets.size() << " (beta,gamma)=((2,2),(2,2)) instances, " << separated << " pass the separation check; alpha=(2,2): "
    << unique << " unique, " << none << " without, " << several << " with several cuts (max " << max_cuts
    << "; frozen fixture has " << fixture_counts << ")";
  return {separated == sets.size() && unique == sets.size(), d.str()};
}

Failure round_trip_trial(std::size_t trial) {
  Rng rng = trial_rng(7, trial);
  const std::size_t n = 2 + trial % 4;
  const std::vector<Hyperplane> lines = generate_simple_lines(n, rng);
  const AllowableSequence seq = sweep_sequence(lines);
  const LineArrangement2D r = realize_straight(seq, lines);
  const VerifyReport v = verify_description(r, reduce_to_bicolored(seq));
  if (!v.ok) return "verifier rejected the straight realization: " + v.diff;
  if (!contains_subsequence(sweep_sequence(extract_allowable(r).lines), seq)) return "extracted sweep lost the sequence";
  return {};
}

Outcome straight_round_trip() {
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_batch<Failure>(50, round_trip_trial);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string first;
  const std::size_t bad = count_failures(results, first);
  std::ostringstream d;
  d << "50 simple arrangements (n = 2..5) with full sweeps, " << 50 - bad << "/50 round trips";
  if (bad) d << " (first failure: " << first << ")";
  return {bad == 0 && secs < 60, d.str()};
}

Outcome pseudoline_realization() {
  const auto results = run_batch<Failure>(60, [](std::size_t trial) -> Failure {
    Rng rng = trial_rng(8, trial);
    const std::size_t n = 1 + rng() % 5;
    AllowableSequence seq;
    if (trial % 2) {
      seq = random_walk_sequence(n, 1 + rng() % 10, rng);
    } else {
      seq = random_window(sweep_sequence(generate_simple_lines(std::max<std::size_t>(n, 2), rng)), 1 + rng() % 10, rng);
    }
    const BicoloredDescription d = reduce_to_bicolored(seq);
    const PolylineArrangement a = realize_pseudolines(d);
    const VerifyReport v = verify_description(a, d);
    if (!v.ok) return v.diff;
    if (!pseudolines_well_separated(a)) return "drawing is not well separated";
    return {};
  });
  std::string first;
  const std::size_t bad = count_failures(results, first);
  std::ostringstream d;
  d << "60 sequences (30 adjacent-swap walks, 30 sweep windows), " << 60 - bad << "/60 verified";
  if (bad) d << " (first failure: " << first << ")";
  return {bad == 0, d.str()};
}

std::size_t max_same_color_bound(const BicoloredDescription& d) {
  std::size_t worst = 0;
  for (const auto* list : {&d.reds, &d.blues}) {
    for (std::size_t a = 0; a < list->size(); ++a) {
      for (std::size_t b = a + 1; b < list->size(); ++b) {
        worst = std::max(worst, crossing_lower_bound(d, (*list)[a].id, (*list)[b].id));
      }
    }
  }
  return worst;
}

Outcome crossing_certificate() {
  const auto worst = run_batch<std::size_t>(100, [](std::size_t trial) {
    Rng rng = trial_rng(9, trial);
    if (trial % 2) return max_same_color_bound(describe(dual_line_arrangement(
        generate_well_separated(2, random_sizes(2, 1, 6, rng), rng))));
    const std::vector<Hyperplane> lines = generate_simple_lines(2 + trial % 4, rng);
    const AllowableSequence seq = random_window(sweep_sequence(lines), 1 + rng() % 6, rng);
    return max_same_color_bound(describe(realize_straight(seq, lines)));
  });
  const std::size_t overall = *std::max_element(worst.begin(), worst.end());
  const BicoloredDescription dipping = describe(io::polylines_from(io::read_file(fixture("crossing_pair.json"))));
  const std::size_t dip_bound = crossing_lower_bound(dipping, "r1", "r2");
  std::ostringstream d;
  d << "100 straight descriptions, largest same-color bound " << overall << "; dipping-red fixture bound "
    << dip_bound;
  return {overall <= 1 && dip_bound == 2, d.str()};
}

Outcome description_bridge() {
  const auto results = run_batch<Failure>(50, [](std::size_t trial) -> Failure {
    Rng rng = trial_rng(10, trial);
    const ColoredPointSet set = generate_well_separated(2, random_sizes(2, 1, 6, rng), rng);
    if (!(orientation_from_description(describe(dual_line_arrangement(set))) == build_sigma(set))) {
      return "orientations differ";
    }
    return {};
  });
  std::string first;
  const std::size_t bad = count_failures(results, first);
  std::ostringstream d;
  d << "50 planar well-separated sets, " << 50 - bad << "/50 edge-for-edge equal to sigma";
  return {bad == 0, d.str()};
}

Outcome semi_cut_probe(const std::vector<ColoredPointSet>& sets) {
  const auto multiple = run_batch<std::size_t>(sets.size(), [&](std::size_t i) {
    return probe_lemma_a1(sets[i]).multiple.size();
  });
  std::size_t reports = 0;
  for (std::size_t m : multiple) reports += m;
  const ColoredPointSet pairs = io::instance_from(io::read_file(fixture("semi_cut_pairs.json")));
  std::size_t outside = 0;
  for (const SemiCutPair& p : semi_cut_pairs(pairs)) outside += p.intersection && !p.intersection_in_hull;
  std::ostringstream d;
  d << sets.size() << " generated instances, " << reports << " multi-semi-cut reports; semi-cut pair fixture: "
    << outside << " same-target pairs meeting outside conv(P_1) (exploratory, nothing asserted about uniqueness)";
  return {reports == 0 && outside > 0, d.str()};
}

}  // namespace

int main() {
  std::cout << "hamcut acceptance, workers = " << workers() << std::endl;
  report(1, "USO check modes agree exhaustively", uso_modes_exhaustive);
  report(2, "cube outmap criterion vs brute-force sinks", cube_criterion);
  std::vector<ColoredPointSet> sets;
  report(3, "alpha-cuts at desk scale", [&] {
    sets = desk_instances();
    return alpha_cuts_desk_scale(sets);
  });
  report(4, "duality exactness", duality_exactness);
  report(5, "planar x_alpha: scan, levels, Miranda, bijection", planar_x_alpha);
  report(6, "unique cuts inside the (beta,gamma) box", box_cuts);
  report(7, "straight round trip", straight_round_trip);
  report(8, "pseudo-line realization of arbitrary sequences", pseudoline_realization);
  report(9, "crossing certificate soundness", crossing_certificate);
  report(10, "description-to-orientation bridge", description_bridge);
  report(11, "semi-cut probe", [&] { return semi_cut_probe(sets); });
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

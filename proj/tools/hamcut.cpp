// hamcut: command-line front end. JSON report on stdout (or --out), a short
// human summary on stderr. Exit 0 = ok / true, 1 = false with a witness,
// 2 = error.

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

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
#include "hamcut/svg.hpp"

using namespace hamcut;
using io::Json;

namespace {

struct Outcome {
  int code = 0;
  Json results;
  std::string summary;
};

struct Options {
  std::uint64_t seed = 1;
  std::string out;
  bool timing = false;
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> beta;
  std::vector<std::size_t> gamma;
  std::string mode = "full";
  std::string tol = "1/1000000000";
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

// Inputs may be bare objects or earlier reports carrying them under
// results.<key>.
Json unwrap(const Json& j, const char* key) {
  if (j.is_object() && j.contains("results") && j["results"].is_object() && j["results"].contains(key)) {
    return j["results"][key];
  }
  return j;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::size_t workers() {
  const char* env = std::getenv("HAMCUT_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long n = std::strtoul(env, &end, 10);
  if (*end != '\0' || n == 0) throw Error(ErrorKind::ParseError, "HAMCUT_WORKERS must be a positive integer");
  return n;
}

// ---------------------------------------------------------------- commands

Outcome cmd_generate(const std::string& kind, const Options& o, std::size_t dim, std::vector<std::size_t> sizes,
                     std::size_t n, std::size_t length, const std::string& source) {
  Rng rng(o.seed);
  Outcome out;
  if (kind == "well-separated" || kind == "arrangement") {
    if (dim == 0 || dim > 4) throw Error(ErrorKind::OutOfRange, "dimension must lie in 1..4");
    if (kind == "arrangement" && dim != 2) throw Error(ErrorKind::OutOfRange, "arrangements are planar");
    if (sizes.empty()) sizes = random_sizes(dim, 1, dim == 2 ? 6 : 4, rng);
    for (std::size_t s : sizes) {
      if (s == 0 || s > 8) throw Error(ErrorKind::OutOfRange, "class sizes must lie in 1..8");
    }
    const ColoredPointSet set = generate_well_separated(dim, sizes, rng, 100000);
    if (kind == "well-separated") {
      out.results = io::to_json(set);
      out.summary = "well-separated instance with sizes " + join(set.sizes());
    } else {
      out.results = io::to_json(dualize(set));
      out.summary = "rainbow well-separated arrangement with sizes " + join(set.sizes());
    }
  } else if (kind == "beta-gamma") {
    out.results = io::to_json(generate_beta_gamma_instance(rng));
    out.summary = "(2,2)/(2,2)-separated instance that is not well separated";
  } else if (kind == "allowable") {
    if (n == 0 || n > 12) throw Error(ErrorKind::OutOfRange, "n must lie in 1..12");
    AllowableSequence seq;
    if (source == "walk") {
      seq = random_walk_sequence(n, length, rng);
      out.results = io::to_json(seq);
    } else if (source == "sweep") {
      const std::vector<Hyperplane> lines = generate_simple_lines(n, rng);
      seq = random_window(sweep_sequence(lines), length, rng);
      out.results = io::to_json(seq);
      Json lj = Json::array();
      for (const Hyperplane& h : lines) lj.push_back(io::to_json(h));
      out.results["lines"] = std::move(lj);
    } else {
      throw Error(ErrorKind::OutOfRange, "source must be sweep or walk");
    }
    out.summary = "allowable sequence of " + std::to_string(seq.perms.size()) + " permutations of " + std::to_string(n);
  } else {
    throw Error(ErrorKind::OutOfRange, "unknown kind " + kind);
  }
  return out;
}

Outcome cmd_check_sep(const Json& input, const Options& o) {
  const ColoredPointSet set = io::instance_from(unwrap(input, "instance"));
  Outcome out;
  out.results["weak_general_position"] = io::to_json(check_weak_general_position(set));
  if (!o.beta.empty() || !o.gamma.empty()) {
    const BetaGamma bg{o.beta, o.gamma};
    const SeparationReport r = check_beta_gamma(set, bg);
    out.results["beta_gamma"] = io::to_json(r);
    out.code = r.satisfied ? 0 : 1;
    out.summary = std::string("(beta, gamma)-separated: ") + (r.satisfied ? "yes" : "no");
  } else {
    const SeparationReport r = check_well_separated(set);
    out.results["well_separated"] = io::to_json(r);
    out.code = r.satisfied ? 0 : 1;
    out.summary = std::string("well separated: ") + (r.satisfied ? "yes" : "no");
  }
  return out;
}

Outcome cmd_build_uso(const Json& input) {
  const ColoredPointSet set = io::instance_from(unwrap(input, "instance"));
  const GridOrientation o = build_sigma(set);
  return {0, {{"orientation", io::to_json(o)}}, "built the grid orientation on shape " + join(set.sizes())};
}

Outcome cmd_check_uso(const Json& input, const Options& o) {
  const GridOrientation orientation = io::orientation_from(unwrap(input, "orientation"));
  if (o.mode != "full" && o.mode != "lemma21" && o.mode != "both") {
    throw Error(ErrorKind::OutOfRange, "mode must be full, lemma21 or both");
  }
  Outcome out;
  std::optional<bool> full;
  std::optional<bool> lemma;
  if (o.mode != "lemma21") {
    const UsoReport r = is_uso(orientation, UsoMode::Full);
    out.results["full"] = io::to_json(r, orientation.shape());
    full = r.is_uso;
  }
  if (o.mode != "full") {
    const UsoReport r = is_uso(orientation, UsoMode::CubeCriterion);
    out.results["lemma21"] = io::to_json(r, orientation.shape());
    lemma = r.is_uso;
  }
  if (full && lemma) out.results["agree"] = *full == *lemma;
  const bool ok = full.value_or(true) && lemma.value_or(true);
  if (ok && orientation.is_explicit()) out.results["outmap_bijective"] = outmap_table(orientation).bijection;
  out.code = ok ? 0 : 1;
  out.summary = std::string("unique sink orientation: ") + (ok ? "yes" : "no");
  if (full && lemma && *full != *lemma) out.summary += " (the two criteria DISAGREE)";
  return out;
}

Outcome cmd_find_cut(const Json& input, const Options& o) {
  const ColoredPointSet set = io::instance_from(unwrap(input, "instance"));
  try {
    const Cut cut = find_alpha_cut(set, o.alpha);
    return {0, {{"cut", io::to_json(cut)}}, "alpha-cut for (" + join(o.alpha) + ") through tuple (" + join(cut.tuple) + ")"};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoCut && e.kind() != ErrorKind::MultipleCuts) throw;
    return {1, {{"found", false}, {"reason", e.what()}}, e.what()};
  }
}

Outcome cmd_all_cuts(const Json& input) {
  const ColoredPointSet set = io::instance_from(unwrap(input, "instance"));
  try {
    const auto cuts = all_alpha_cuts(set);
    Json list = Json::array();
    for (const auto& [alpha, cut] : cuts) list.push_back(io::to_json(cut));
    return {0, {{"cuts", std::move(list)}, {"bijective", true}}, std::to_string(cuts.size()) + " alpha-cuts, one per alpha"};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotBijective) throw;
    return {1, {{"bijective", false}, {"reason", e.what()}}, e.what()};
  }
}

Outcome cmd_semi_cuts(const Json& input) {
  const ColoredPointSet set = io::instance_from(unwrap(input, "instance"));
  const SemiCutProbeReport r = probe_lemma_a1(set);
  Outcome out;
  Json multiple = Json::array();
  for (const auto& m : r.multiple) {
    multiple.push_back({{"base_point", m.base_point}, {"targets", m.targets}, {"tuples", m.tuples}});
  }
  out.results = {{"semi_cuts", r.semi_cuts}, {"degenerate_tuples", r.degenerate_tuples}, {"multiple", multiple},
                 {"exploratory", true}};
  if (set.dimension() == 2) {
    Json pairs = Json::array();
    for (const SemiCutPair& p : semi_cut_pairs(set)) {
      Json pj{{"base_x", p.base_x}, {"base_y", p.base_y}, {"targets", p.targets}, {"cut_x", io::to_json(p.cut_x)},
              {"cut_y", io::to_json(p.cut_y)}, {"intersection_in_hull", p.intersection_in_hull}};
      if (p.intersection) pj["intersection"] = io::to_json(*p.intersection);
      pairs.push_back(std::move(pj));
    }
    out.results["pairs"] = std::move(pairs);
  }
  out.summary = std::to_string(r.semi_cuts) + " semi-cuts, " + std::to_string(r.multiple.size()) +
                " (base, target) pairs with several (exploratory, nothing asserted)";
  return out;
}

Outcome cmd_dualize(const Json& input) {
  const ColoredPointSet set = io::instance_from(unwrap(input, "instance"));
  const ColoredLineArrangement arr = dualize(set);
  const RainbowReport r = verify_rainbow_ws(arr);
  Outcome out;
  out.results = {{"arrangement", io::to_json(arr)}, {"rainbow", r.rainbow}, {"well_separated", r.well_separated}};
  if (r.non_rainbow_tuple) out.results["non_rainbow_tuple"] = *r.non_rainbow_tuple;
  if (r.failing_sign_vector) out.results["failing_sign_vector"] = *r.failing_sign_vector;
  out.code = r.rainbow && r.well_separated ? 0 : 1;
  out.summary = std::string("dual arrangement; rainbow: ") + (r.rainbow ? "yes" : "no") +
                ", well separated: " + (r.well_separated ? "yes" : "no");
  return out;
}

Outcome cmd_levels(const Json& input, const Options& o) {
  const ColoredLineArrangement arr = io::arrangement_from(unwrap(input, "arrangement"));
  if (arr.dimension() != 2 || o.alpha.size() != 2) throw Error(ErrorKind::DimensionMismatch, "levels need a planar arrangement and --alpha k1,k2");
  const LevelPolyline a = k_level_framed(arr.lines(0), o.alpha[0]);
  const LevelPolyline b = k_level_framed(arr.lines(1), o.alpha[1]);
  Json meet = Json::array();
  for (const Point& p : level_intersections(a, b)) meet.push_back(io::to_json(p));
  return {0, {{"levels", {io::to_json(a), io::to_json(b)}}, {"intersections", meet}},
          std::to_string(meet.size()) + " intersection point(s) of the two levels"};
}

Outcome cmd_x_alpha(const Json& input, const Options& o) {
  const ColoredLineArrangement arr = io::arrangement_from(unwrap(input, "arrangement"));
  const Point exact = x_alpha_bruteforce(arr, o.alpha);
  Outcome out;
  out.results["x_alpha"] = io::to_json(exact);
  if (arr.dimension() == 2) {
    const MirandaResult m = miranda_solve(level_problem(arr, o.alpha), parse_rational(o.tol));
    const double dist = std::hypot(to_double(m.point[0] - exact[0]), to_double(m.point[1] - exact[1]));
    out.results["miranda"] = {{"point", io::to_json(m.point)}, {"boxes_examined", m.boxes_examined}, {"distance", dist}};
    std::ostringstream msg;
    msg << "x_alpha found; subdivision lands " << dist << " away";
    out.summary = msg.str();
  } else {
    out.summary = "x_alpha found by scanning colorful intersections";
  }
  return out;
}

Outcome cmd_reduce(const Json& input) {
  const AllowableSequence seq = io::sequence_from(unwrap(input, "sequence"));
  const BicoloredDescription desc = reduce_to_bicolored(seq);
  return {0, {{"description", io::to_json(desc)}},
          "bicolored description with " + std::to_string(desc.reds.size()) + " reds and " +
              std::to_string(desc.blues.size()) + " blues"};
}

Outcome cmd_realize(const Json& input, const std::string& method, const std::string& lines_path) {
  Outcome out;
  if (method == "pseudo") {
    const Json j = unwrap(input, "description");
    const BicoloredDescription desc =
        j.contains("reds") ? io::description_from(j) : reduce_to_bicolored(io::sequence_from(unwrap(input, "sequence")));
    const PolylineArrangement arr = realize_pseudolines(desc);
    out.results = {{"arrangement", io::to_json(arr)}};
    out.summary = "pseudo-line drawing with " + std::to_string(arr.size()) + " pseudo-lines";
    return out;
  }
  if (method != "straight") throw Error(ErrorKind::OutOfRange, "method must be pseudo or straight");
  const Json sj = unwrap(input, "sequence");
  const AllowableSequence seq = io::sequence_from(sj);
  Json lj = lines_path.empty() ? sj.value("lines", Json()) : unwrap(io::read_file(lines_path), "lines");
  if (lj.is_object() && lj.contains("lines")) lj = lj["lines"];
  if (!lj.is_array()) throw Error(ErrorKind::ParseError, "straight realization needs lines (--lines or a \"lines\" field)");
  std::vector<Hyperplane> lines;
  for (const Json& h : lj) lines.push_back(io::hyperplane_from(h));
  const LineArrangement2D arr = realize_straight(seq, lines);
  out.results = {{"arrangement", io::to_json(arr)}};
  out.summary = "straight realization with " + std::to_string(arr.size()) + " lines";
  return out;
}

Outcome cmd_extract(const Json& input) {
  const LineArrangement2D arr = io::lines2d_from(unwrap(input, "arrangement"));
  const Extraction ex = extract_allowable(arr);
  Json lines = Json::array();
  for (const Hyperplane& h : ex.lines) lines.push_back(io::to_json(h));
  Json h = Json::array();
  for (const auto& row : ex.homography) h.push_back(io::to_json(row));
  return {0,
          {{"lines", lines}, {"q", io::to_json(ex.q)}, {"homography", h}, {"sweep", io::to_json(sweep_sequence(ex.lines))}},
          "extracted " + std::to_string(ex.lines.size()) + " lines whose sweep contains the sequence"};
}

Outcome cmd_verify(const Json& arrangement, const Json& description) {
  const Json aj = unwrap(arrangement, "arrangement");
  const BicoloredDescription desc = io::description_from(unwrap(description, "description"));
  const VerifyReport r = io::is_straight(aj) ? verify_description(io::lines2d_from(aj), desc)
                                             : verify_description(io::polylines_from(aj), desc);
  Outcome out;
  out.results = {{"ok", r.ok}};
  if (!r.ok) out.results["diff"] = r.diff;
  out.code = r.ok ? 0 : 1;
  out.summary = r.ok ? "arrangement realizes the description" : "mismatch: " + r.diff;
  return out;
}

// A description, or an arrangement whose description is read off.
BicoloredDescription description_or_drawing(const Json& input) {
  const Json j = unwrap(input, "description");
  if (j.contains("reds")) return io::description_from(j);
  const Json a = unwrap(input, "arrangement");
  return io::is_straight(a) ? describe(io::lines2d_from(a)) : describe(io::polylines_from(a));
}

Outcome cmd_lower_bound(const Json& input, const std::vector<std::string>& pair) {
  const BicoloredDescription desc = description_or_drawing(input);
  Outcome out;
  Json bounds = Json::array();
  std::size_t best = 0;
  auto add = [&](const std::string& a, const std::string& b) {
    const std::size_t lb = crossing_lower_bound(desc, a, b);
    best = std::max(best, lb);
    bounds.push_back({{"pair", {a, b}}, {"lower_bound", lb}});
  };
  if (!pair.empty()) {
    if (pair.size() != 2) throw Error(ErrorKind::UnknownId, "--pair takes two ids");
    add(pair[0], pair[1]);
  } else {
    for (const auto* group : {&desc.reds, &desc.blues}) {
      for (std::size_t a = 0; a < group->size(); ++a) {
        for (std::size_t b = a + 1; b < group->size(); ++b) add((*group)[a].id, (*group)[b].id);
      }
    }
  }
  out.results = {{"bounds", bounds}, {"max", best}};
  // Straight lines cross at most once, so a bound of 2 certifies that the
  // description is not stretchable.
  out.code = best >= 2 ? 1 : 0;
  out.summary = "largest same-color crossing lower bound: " + std::to_string(best) +
                (best >= 2 ? " (not realizable by straight lines)" : "");
  return out;
}

Outcome cmd_bridge(const Json& input) {
  const Json j = unwrap(input, "description");
  Outcome out;
  if (j.contains("reds") || unwrap(input, "arrangement").contains("lines")) {
    const GridOrientation o = orientation_from_description(description_or_drawing(input));
    out.results = {{"orientation", io::to_json(o)}};
    out.summary = "grid orientation read off the description";
    return out;
  }
  const ColoredPointSet set = io::instance_from(unwrap(input, "instance"));
  const GridOrientation from_desc = orientation_from_description(describe(dual_line_arrangement(set)));
  const bool same = from_desc == build_sigma(set);
  out.results = {{"orientation", io::to_json(from_desc)}, {"equals_sigma", same}};
  out.code = same ? 0 : 1;
  out.summary = std::string("orientation from the dual description ") + (same ? "equals" : "DIFFERS from") +
                " the point orientation";
  return out;
}

std::string cmd_plot(const Json& document, const Options& o, bool all_cuts) {
  const Json input = unwrap(document, "arrangement");
  if (input.contains("classes")) {
    const Json& first = input["classes"].at(0).at(0);
    if (first.is_array()) {
      const ColoredPointSet set = io::instance_from(input);
      std::vector<Cut> cuts;
      if (all_cuts) {
        for (auto& [alpha, cut] : all_alpha_cuts(set)) cuts.push_back(cut);
      } else if (!o.alpha.empty()) {
        cuts.push_back(find_alpha_cut(set, o.alpha));
      }
      return svg::plot_instance(set, cuts);
    }
    const ColoredLineArrangement arr = io::arrangement_from(input);
    std::vector<LevelPolyline> levels;
    std::vector<Point> marks;
    if (!o.alpha.empty()) {
      if (arr.dimension() != 2) throw Error(ErrorKind::NotPlottable, "only planar objects can be drawn");
      for (std::size_t c = 0; c < 2; ++c) levels.push_back(k_level_framed(arr.lines(c), o.alpha.at(c)));
      marks.push_back(x_alpha_bruteforce(arr, o.alpha));
    }
    return svg::plot_arrangement(arr, levels, marks);
  }
  if (input.contains("lines")) {
    return io::is_straight(input) ? svg::plot_lines(io::lines2d_from(input)) : svg::plot_pseudolines(io::polylines_from(input));
  }
  throw Error(ErrorKind::NotPlottable, "unrecognized document");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact colorful ham-sandwich cuts, grid unique sink orientations and bicolored stretchability"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--out", o.out, "write the report (or SVG) to this file");
  app.add_flag("--timing", o.timing, "add wall-clock time to the report (breaks byte-determinism)");

  auto with_alpha = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--alpha", o.alpha, "comma list, 1-based")->delimiter(',');
    if (required) opt->required();
  };
  std::string file;
  std::string file2;

  auto* gen = app.add_subcommand("generate", "seeded random instance");
  std::string kind;
  std::size_t dim = 2, n = 4, length = 0;
  std::vector<std::size_t> sizes;
  std::string source = "sweep";
  gen->add_option("kind", kind, "well-separated | beta-gamma | arrangement | allowable")->required();
  gen->add_option("--dim", dim, "dimension")->capture_default_str();
  gen->add_option("--sizes", sizes, "class sizes")->delimiter(',');
  gen->add_option("--n", n, "number of lines (allowable)")->capture_default_str();
  gen->add_option("--length", length, "number of permutations (allowable; 0 = full sweep)");
  gen->add_option("--source", source, "sweep | walk (allowable)")->capture_default_str();

  auto* check_sep = app.add_subcommand("check-sep", "well-separation or (beta, gamma)-separation");
  check_sep->add_option("instance", file)->required();
  check_sep->add_option("--beta", o.beta)->delimiter(',');
  check_sep->add_option("--gamma", o.gamma)->delimiter(',');

  auto* build_uso = app.add_subcommand("build-uso", "grid orientation of a point set");
  build_uso->add_option("instance", file)->required();

  auto* check_uso = app.add_subcommand("check-uso", "unique sink test");
  check_uso->add_option("orientation", file)->required();
  check_uso->add_option("--mode", o.mode, "full | lemma21 | both")->capture_default_str();

  auto* find_cut = app.add_subcommand("find-cut", "alpha-cut by exhaustive scan");
  find_cut->add_option("instance", file)->required();
  with_alpha(find_cut, true);

  auto* all_cuts = app.add_subcommand("all-cuts", "every alpha-cut");
  all_cuts->add_option("instance", file)->required();

  auto* semi = app.add_subcommand("semi-cuts", "exploratory semi-cut census");
  semi->add_option("instance", file)->required();

  auto* dual = app.add_subcommand("dualize", "dual line arrangement of a planar instance");
  dual->add_option("instance", file)->required();

  auto* levels = app.add_subcommand("levels", "k-levels of both classes");
  levels->add_option("arrangement", file)->required();
  with_alpha(levels, true);

  auto* xalpha = app.add_subcommand("x-alpha", "the point on the alpha levels");
  xalpha->add_option("arrangement", file)->required();
  with_alpha(xalpha, true);
  xalpha->add_option("--tol", o.tol, "subdivision tolerance (rational)")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "allowable sequence to bicolored description");
  reduce->add_option("sequence", file)->required();

  auto* realize = app.add_subcommand("realize", "draw a reduction");
  std::string method = "pseudo";
  std::string lines_path;
  realize->add_option("input", file, "sequence or description")->required();
  realize->add_option("--method", method, "pseudo | straight")->capture_default_str();
  realize->add_option("--lines", lines_path, "lines whose sweep contains the sequence");

  auto* extract = app.add_subcommand("extract", "lines realizing the sequence behind a straight realization");
  extract->add_option("arrangement", file)->required();

  auto* verify = app.add_subcommand("verify", "does an arrangement realize a description?");
  verify->add_option("arrangement", file)->required();
  verify->add_option("description", file2)->required();

  auto* lower = app.add_subcommand("lower-bound", "crossing lower bounds for same-color pairs");
  std::vector<std::string> pair;
  lower->add_option("description", file)->required();
  lower->add_option("--pair", pair, "two ids")->delimiter(',');

  auto* bridge = app.add_subcommand("bridge", "grid orientation from a description (or check against a point set)");
  bridge->add_option("input", file)->required();

  auto* plot = app.add_subcommand("plot", "SVG of a planar object");
  bool plot_all = false;
  plot->add_option("input", file)->required();
  with_alpha(plot, false);
  plot->add_flag("--all-cuts", plot_all, "draw every alpha-cut of an instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::size_t worker_count = workers();
    std::string digest_input;
    Json input;
    Json input2;
    if (!file.empty()) {
      digest_input = read_text(file);
      input = io::parse(digest_input);
    }
    if (!file2.empty()) {
      const std::string text = read_text(file2);
      digest_input += text;
      input2 = io::parse(text);
    }

    if (command == "plot") {
      emit(cmd_plot(input, o, plot_all), o.out);
      std::cerr << "plot: wrote SVG\n";
      return 0;
    }

    Outcome result;
    if (command == "generate") result = cmd_generate(kind, o, dim, sizes, n, length, source);
    else if (command == "check-sep") result = cmd_check_sep(input, o);
    else if (command == "build-uso") result = cmd_build_uso(input);
    else if (command == "check-uso") result = cmd_check_uso(input, o);
    else if (command == "find-cut") result = cmd_find_cut(input, o);
    else if (command == "all-cuts") result = cmd_all_cuts(input);
    else if (command == "semi-cuts") result = cmd_semi_cuts(input);
    else if (command == "dualize") result = cmd_dualize(input);
    else if (command == "levels") result = cmd_levels(input, o);
    else if (command == "x-alpha") result = cmd_x_alpha(input, o);
    else if (command == "reduce") result = cmd_reduce(input);
    else if (command == "realize") result = cmd_realize(input, method, lines_path);
    else if (command == "extract") result = cmd_extract(input);
    else if (command == "verify") result = cmd_verify(input, input2);
    else if (command == "lower-bound") result = cmd_lower_bound(input, pair);
    else if (command == "bridge") result = cmd_bridge(input);

    if (command == "generate") {
      // Generators print the object itself so it can be fed straight back.
      emit(io::dump(result.results), o.out);
    } else {
      Json report{{"command", command}, {"seed", o.seed}, {"results", result.results}};
      if (!digest_input.empty()) report["input_digest"] = "sha256:" + sha256_hex(digest_input);
      if (o.timing) {
        report["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
      emit(io::dump(report), o.out);
    }
    std::cerr << command << ": " << result.summary;
    if (worker_count > 1) std::cerr << " [" << worker_count << " workers requested; commands run single-threaded]";
    std::cerr << "\n";
    return result.code;
  } catch (const Error& e) {
    std::cout << io::dump({{"command", command}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}});
    std::cerr << command << ": error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << io::dump({{"command", command}, {"error", {{"kind", "Internal"}, {"message", e.what()}}}});
    std::cerr << command << ": error: " << e.what() << "\n";
    return 2;
  }
}

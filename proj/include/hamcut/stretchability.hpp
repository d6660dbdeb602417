#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hamcut/colored_point_set.hpp"
#include "hamcut/geometry.hpp"
#include "hamcut/grid_uso.hpp"

namespace hamcut {

/// Permutations of 1..n, each listing line ids top to bottom.
struct AllowableSequence {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> perms;

  bool operator==(const AllowableSequence&) const = default;
};

/// True iff every entry is a permutation of 1..n and consecutive entries
/// differ by one adjacent transposition.
bool validate_allowable(const AllowableSequence& seq);

/// Left-to-right sweep of non-vertical lines with ids 1..n: the order at
/// x -> -infinity and after every crossing. Crossings at a common abscissa
/// are taken in lexicographic order of their line ids. Throws
/// DuplicateLine, VerticalLine, ConcurrentLines (three lines through one
/// point).
AllowableSequence sweep_sequence(const std::vector<Hyperplane>& lines);

/// Greedy subsequence test: does `sweep` list every permutation of `seq`
/// in order (not necessarily consecutively)?
bool contains_subsequence(const AllowableSequence& sweep, const AllowableSequence& seq);

enum class Color { Red, Blue };

std::string_view to_string(Color c);

/// For every pseudo-line, the ids of the other color in the order it meets
/// them. A pseudo-line is traversed with its positive side on the left, so
/// upward-oriented lines run left to right.
struct BicoloredDescription {
  struct Entry {
    std::string id;
    std::vector<std::string> order;

    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> reds;   // order = blue ids
  std::vector<Entry> blues;  // order = red ids

  bool operator==(const BicoloredDescription&) const = default;
};

/// Red ids r-1, r0, r1..rn, r{n+1}, r{n+2}; blue ids b1..bk, b'1..b'k.
std::string red_id(long index);
std::string blue_id(std::size_t index, bool primed);

/// The bicolored stretchability instance built from an allowable sequence.
/// Throws InvalidSequence.
BicoloredDescription reduce_to_bicolored(const AllowableSequence& seq);

/// x-monotone oriented pseudo-line: the graph of a piecewise linear
/// function through `vertices` (increasing x), continued by rays of the
/// given slopes. orientation = Above when the positive side is the upper
/// one. A straight line has one vertex and equal end slopes.
struct Pseudoline {
  std::string id;
  Color color = Color::Red;
  Sign orientation = Sign::Above;
  std::vector<Point> vertices;
  Rational left_slope;
  Rational right_slope;

  Rational y_at(const Rational& x) const;

  bool operator==(const Pseudoline&) const = default;
};

using PolylineArrangement = std::vector<Pseudoline>;

struct ColoredLine {
  std::string id;
  Color color = Color::Red;
  Hyperplane line;

  bool operator==(const ColoredLine&) const = default;
};

using LineArrangement2D = std::vector<ColoredLine>;

/// Straight line as a pseudo-line; throws VerticalLine.
Pseudoline to_pseudoline(const ColoredLine& line);
PolylineArrangement to_pseudolines(const LineArrangement2D& lines);

struct CrossingReport {
  std::vector<Point> points;  // sign changes of the height difference, by x
  bool degenerate = false;    // touching without crossing, or overlapping
};

CrossingReport crossings(const Pseudoline& a, const Pseudoline& b);

/// Description read off an arrangement; reds and blues keep input order.
/// Throws MalformedDescription unless every colorful pair crosses exactly
/// once, ConcurrentLines when two crossings along a line coincide.
BicoloredDescription describe(const PolylineArrangement& arrangement);
BicoloredDescription describe(const LineArrangement2D& arrangement);

struct VerifyReport {
  bool ok = true;
  std::string diff;  // first mismatch, human readable
};

/// Far-direction well-separation test on end rays: for each sign vector,
/// an open set of directions whose far points lie on side s_red of every
/// red and s_blue of every blue.
bool pseudolines_well_separated(const PolylineArrangement& arrangement);

VerifyReport verify_description(const PolylineArrangement& arrangement, const BicoloredDescription& desc);
/// Straight version; additionally runs the exact unbounded-cell LP.
VerifyReport verify_description(const LineArrangement2D& arrangement, const BicoloredDescription& desc);

/// Drawing of the reduction's description with four horizontal control
/// reds, straight blues through p_i and q / q', and polyline reds threaded
/// just below r0. Throws WrongFamily if desc is not the reduction of an
/// allowable sequence.
PolylineArrangement realize_pseudolines(const BicoloredDescription& desc);

/// Recovers the allowable sequence behind a reduction description.
/// Throws WrongFamily.
AllowableSequence sequence_from_description(const BicoloredDescription& desc);

/// Straight realization from lines whose sweep contains seq (lines are ids
/// 1..n, any non-vertical orientation). Throws NotARealization.
LineArrangement2D realize_straight(const AllowableSequence& seq, const std::vector<Hyperplane>& lines);

struct Extraction {
  std::vector<Hyperplane> lines;     // images of r1..rn, positive side up
  Point q;                           // chosen point on r{n+2}
  std::vector<std::vector<Rational>> homography;  // 3x3, row-major
};

/// Sends r{n+2} to infinity through a rational homography so the lines
/// through p_i = b_i /\ b'_i and q become vertical; returns the images of
/// r1..rn. Throws VerificationFailed if the input does not realize its own
/// reduction, DegenerateHomography if no admissible chart is found.
/// q_position in (0, 1) fixes q on the segment from b_1 to b'_k; by default
/// the first candidate off every red is taken.
Extraction extract_allowable(const LineArrangement2D& realization,
                             const std::optional<Rational>& q_position = std::nullopt);

/// Sign alternations, along the first id, of which of the pair each line
/// of the other color meets first. Throws UnknownId.
std::size_t crossing_lower_bound(const BicoloredDescription& desc, const std::string& first, const std::string& second);

/// Grid orientation on (reds x blues), in list order. Red dimension: the
/// edge (a,j)-(a',j) points to (a,j) iff r_a' precedes r_a along b_j. Blue
/// dimension: (a,j)-(a,j') points to (a,j) iff b_j' follows b_j along r_a.
/// Throws MalformedDescription.
GridOrientation orientation_from_description(const BicoloredDescription& desc);

/// Dual straight arrangement of a planar point set with ids r1.., b1..;
/// both classes upward, so every line is traversed left to right.
LineArrangement2D dual_line_arrangement(const ColoredPointSet& set);

}  // namespace hamcut

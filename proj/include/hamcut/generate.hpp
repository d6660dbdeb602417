#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hamcut/colored_point_set.hpp"
#include "hamcut/separation.hpp"
#include "hamcut/stretchability.hpp"

namespace hamcut {

using Rng = std::mt19937_64;

/// Uniform rational num/den with num drawn from [lo, hi].
Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t den);

/// Class i is a random cloud around 10 e_i (for d = 2: around (0,0) and
/// (10,0), so the vertical line x = 5 splits the classes). Retries until
/// the instance is well separated and in general position (no d + 1 points
/// on a hyperplane); throws GenerationBudgetExceeded after `budget` tries.
ColoredPointSet generate_well_separated(std::size_t d, const std::vector<std::size_t>& sizes, Rng& rng,
                                        std::size_t budget = 1000);

/// Sizes drawn uniformly from [lo, hi] per class.
std::vector<std::size_t> random_sizes(std::size_t d, std::size_t lo, std::size_t hi, Rng& rng);

/// True iff no d + 1 points of the union lie on a common hyperplane.
bool in_general_position(const ColoredPointSet& set);

/// Planar instance with three points per class that is (beta, gamma)
/// separated for beta = gamma = (2, 2), in general position, and not well
/// separated; found by rejection sampling of two overlapping clouds.
ColoredPointSet generate_beta_gamma_instance(Rng& rng, std::size_t budget = 100000);

/// n non-vertical lines, pairwise crossing, no three through a point:
/// their sweep has all C(n, 2) swaps.
std::vector<Hyperplane> generate_simple_lines(std::size_t n, Rng& rng, std::size_t budget = 100000);

/// Starts at the identity and applies length - 1 random adjacent swaps.
/// Such a walk need not come from any line arrangement.
AllowableSequence random_walk_sequence(std::size_t n, std::size_t length, Rng& rng);

/// `length` consecutive permutations of a sweep, starting at a random
/// position; the whole sweep when length is 0 or too large.
AllowableSequence random_window(const AllowableSequence& sweep, std::size_t length, Rng& rng);

}  // namespace hamcut

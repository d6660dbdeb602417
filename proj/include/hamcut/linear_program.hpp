#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hamcut/rational.hpp"

namespace hamcut {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// Exact phase-one simplex (Bland's rule, so it cannot cycle) over free
/// variables. Returns a feasible point or std::nullopt when the system has no
/// solution.
std::optional<std::vector<Rational>> find_feasible_point(std::span<const LinearConstraint> constraints,
                                                         std::size_t num_vars);

}  // namespace hamcut

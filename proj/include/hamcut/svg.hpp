#pragma once

#include <string>
#include <vector>

#include "hamcut/alpha_cut.hpp"
#include "hamcut/arrangement.hpp"
#include "hamcut/colored_point_set.hpp"
#include "hamcut/levels.hpp"
#include "hamcut/stretchability.hpp"

namespace hamcut::svg {

// Deterministic SVG output. Decimals are for display only: exact values are
// printed at 12 significant digits and never read back.

/// Points per class (class 0 red, class 1 blue), alpha-cuts dashed.
std::string plot_instance(const ColoredPointSet& set, const std::vector<Cut>& cuts = {});

/// Lines per class, levels as bold polylines in their class color.
std::string plot_arrangement(const ColoredLineArrangement& arrangement, const std::vector<LevelPolyline>& levels = {},
                             const std::vector<Point>& marks = {});

std::string plot_pseudolines(const PolylineArrangement& arrangement);
std::string plot_lines(const LineArrangement2D& arrangement);

}  // namespace hamcut::svg

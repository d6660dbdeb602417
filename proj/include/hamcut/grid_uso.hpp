#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hamcut/colored_point_set.hpp"

namespace hamcut {

/// Vertex set [n_1] x ... x [n_d]; coordinates are 0-based throughout.
struct GridShape {
  std::vector<std::size_t> dims;

  GridShape() = default;
  /// Throws OutOfRange for d = 0, an n_i = 0, or an n_i above 64.
  explicit GridShape(std::vector<std::size_t> dims);

  std::size_t dimension() const { return dims.size(); }
  std::size_t vertex_count() const;
  /// Number of edges: sum over i of (vertex_count / n_i) * C(n_i, 2).
  std::size_t edge_count() const;
  bool contains(const std::vector<std::size_t>& v) const;
  /// Lexicographic rank, last coordinate fastest.
  std::size_t index_of(const std::vector<std::size_t>& v) const;
  std::vector<std::size_t> vertex_at(std::size_t index) const;

  bool operator==(const GridShape&) const = default;
};

using GridVertex = std::vector<std::size_t>;
using Outmap = std::vector<std::size_t>;

/// For a vertex v and dimension i, bit b of the mask is set iff the edge
/// between v and v with coordinate i replaced by b points away from v.
using OutMaskFn = std::function<std::uint64_t(const GridVertex&, std::size_t)>;

/// Orientation of the grid graph. Each grid line carries a tournament; it is
/// kept as one out-mask per (vertex, dimension), which is the row of that
/// vertex in its line's tournament.
class GridOrientation {
 public:
  static constexpr std::size_t kExplicitEdgeLimit = 1'000'000;

  GridOrientation() = default;

  /// Tabulates `fn` when the grid has at most kExplicitEdgeLimit edges and
  /// keeps the closure otherwise. The caller guarantees antisymmetry.
  GridOrientation(GridShape shape, const OutMaskFn& fn);

  /// Builds from explicit edge directions: out(v, i, b) tells whether the
  /// edge from v to v[i := b] points away from v; only asked for a_i < b.
  static GridOrientation from_edges(GridShape shape,
                                    const std::function<bool(const GridVertex&, std::size_t, std::size_t)>& out);

  const GridShape& shape() const { return shape_; }
  bool is_explicit() const { return lazy_ == nullptr; }

  std::uint64_t out_mask(const GridVertex& v, std::size_t dim) const;
  std::uint64_t out_mask(std::size_t vertex_index, std::size_t dim) const;
  /// True iff the edge v -- v[dim := b] is oriented away from v.
  bool points_out(const GridVertex& v, std::size_t dim, std::size_t b) const;

  /// n_i x n_i matrix of the line through v in dimension i: +1 when the row
  /// index points to the column index, -1 for the reverse, 0 on the diagonal.
  std::vector<std::vector<int>> line_matrix(const GridVertex& v, std::size_t dim) const;

  bool operator==(const GridOrientation& other) const;

 private:
  GridShape shape_;
  std::vector<std::uint64_t> masks_;  // vertex_index * d + dim
  std::shared_ptr<OutMaskFn> lazy_;
};

/// Orientation sigma_P: the edge between v and v' (differing in dimension i)
/// points to v iff p^i_{a'_i} is above the colorful hyperplane of v.
/// Throws PreconditionFailed unless P is in weak general position and well
/// separated.
GridOrientation build_sigma(const ColoredPointSet& set);

/// One edge of sigma_P decided from the hyperplane of endpoint v alone:
/// true iff the edge v -- v[dim := b] points away from v. Throws OnPredicate
/// if the other point lies on that hyperplane.
bool sigma_points_out(const ColoredPointSet& set, const GridVertex& v, std::size_t dim, std::size_t b);

/// Outgoing edge count per dimension. Throws OutOfRange.
Outmap outmap(const GridOrientation& o, const GridVertex& v);

/// Induced subgrid: per dimension the bitmask of kept coordinates.
using Subgrid = std::vector<std::uint64_t>;

/// Vertices of the subgrid without outgoing edges inside it, in
/// lexicographic order.
std::vector<GridVertex> subgrid_sinks(const GridOrientation& o, const Subgrid& sub);

/// Pairwise outmap criterion on a subgrid with at most two coordinates kept
/// per dimension. Throws NotACube otherwise.
bool is_cube_uso(const GridOrientation& o, const Subgrid& cube);

enum class UsoMode { Full, CubeCriterion };

struct UsoReport {
  bool is_uso = true;
  std::optional<Subgrid> witness;
  std::vector<GridVertex> witness_sinks;
  /// CubeCriterion only: the witness is a subcube failing the outmap criterion.
  bool cube_criterion_failed = false;
};

constexpr std::size_t kDefaultSubgridBudget = 1'000'000;

/// Number of non-empty induced subgrids, saturating at SIZE_MAX.
std::size_t subgrid_count(const GridShape& shape);

/// Full: every induced subgrid has exactly one sink. CubeCriterion: every induced
/// subgrid has a sink and every subcube passes is_cube_uso. Subgrids are
/// visited in increasing mask order (dimension 0 most significant) and the
/// first violation is reported. Throws TooLarge above `budget` subgrids.
UsoReport is_uso(const GridOrientation& o, UsoMode mode, std::size_t budget = kDefaultSubgridBudget);

struct OutmapTable {
  std::vector<std::pair<GridVertex, Outmap>> entries;  // lexicographic order
  bool bijection = false;
};

/// Throws TooLarge for lazily stored orientations.
OutmapTable outmap_table(const GridOrientation& o);

/// First vertex in lexicographic order with the given outmap; NotFound when
/// none exists or the target is out of range.
GridVertex find_vertex_with_outmap(const GridOrientation& o, const Outmap& target);

constexpr std::size_t kMaxEnumeratedEdges = 20;

/// Calls fn on every orientation of the shape; edge k (in the order vertex,
/// dimension, larger endpoint) points from the smaller to the larger
/// coordinate iff bit k of the counter is set. TooLarge beyond 2^20.
void for_each_orientation(const GridShape& shape, const std::function<void(const GridOrientation&)>& fn);

}  // namespace hamcut

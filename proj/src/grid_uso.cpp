#include "hamcut/grid_uso.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

#include "hamcut/error.hpp"
#include "hamcut/separation.hpp"

namespace hamcut {

GridShape::GridShape(std::vector<std::size_t> d) : dims(std::move(d)) {
  if (dims.empty()) throw Error(ErrorKind::OutOfRange, "grid needs at least one dimension");
  for (std::size_t n : dims) {
    if (n == 0) throw Error(ErrorKind::OutOfRange, "grid dimensions must be positive");
    if (n > 64) throw Error(ErrorKind::TooLarge, "grid lines are limited to 64 vertices");
  }
}

std::size_t GridShape::vertex_count() const {
  std::size_t n = 1;
  for (std::size_t k : dims) n *= k;
  return n;
}

std::size_t GridShape::edge_count() const {
  const std::size_t n = vertex_count();
  std::size_t edges = 0;
  for (std::size_t k : dims) edges += n / k * (k * (k - 1) / 2);
  return edges;
}

bool GridShape::contains(const std::vector<std::size_t>& v) const {
  if (v.size() != dims.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= dims[i]) return false;
  }
  return true;
}

std::size_t GridShape::index_of(const std::vector<std::size_t>& v) const {
  if (!contains(v)) throw Error(ErrorKind::OutOfRange, "vertex outside the grid");
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) index = index * dims[i] + v[i];
  return index;
}

std::vector<std::size_t> GridShape::vertex_at(std::size_t index) const {
  std::vector<std::size_t> v(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    v[i] = index % dims[i];
    index /= dims[i];
  }
  return v;
}

GridOrientation::GridOrientation(GridShape shape, const OutMaskFn& fn) : shape_(std::move(shape)) {
  if (shape_.edge_count() > kExplicitEdgeLimit) {
    lazy_ = std::make_shared<OutMaskFn>(fn);
    return;
  }
  const std::size_t d = shape_.dimension();
  const std::size_t n = shape_.vertex_count();
  masks_.resize(n * d);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const GridVertex v = shape_.vertex_at(idx);
    for (std::size_t i = 0; i < d; ++i) masks_[idx * d + i] = fn(v, i) & ~(std::uint64_t{1} << v[i]);
  }
}

GridOrientation GridOrientation::from_edges(
    GridShape shape, const std::function<bool(const GridVertex&, std::size_t, std::size_t)>& out) {
  const std::size_t d = shape.dimension();
  const std::size_t n = shape.vertex_count();
  GridOrientation o;
  o.shape_ = std::move(shape);
  o.masks_.assign(n * d, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    GridVertex v = o.shape_.vertex_at(idx);
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t a = v[i];
      for (std::size_t b = a + 1; b < o.shape_.dims[i]; ++b) {
        const bool away = out(v, i, b);
        v[i] = b;
        const std::size_t other = o.shape_.index_of(v);
        v[i] = a;
        if (away) {
          o.masks_[idx * d + i] |= std::uint64_t{1} << b;
        } else {
          o.masks_[other * d + i] |= std::uint64_t{1} << a;
        }
      }
    }
  }
  return o;
}

std::uint64_t GridOrientation::out_mask(const GridVertex& v, std::size_t dim) const {
  if (dim >= shape_.dimension()) throw Error(ErrorKind::OutOfRange, "dimension index out of range");
  if (lazy_) {
    if (!shape_.contains(v)) throw Error(ErrorKind::OutOfRange, "vertex outside the grid");
    return (*lazy_)(v, dim) & ~(std::uint64_t{1} << v[dim]);
  }
  return masks_[shape_.index_of(v) * shape_.dimension() + dim];
}

std::uint64_t GridOrientation::out_mask(std::size_t vertex_index, std::size_t dim) const {
  if (lazy_) return out_mask(shape_.vertex_at(vertex_index), dim);
  return masks_.at(vertex_index * shape_.dimension() + dim);
}

bool GridOrientation::points_out(const GridVertex& v, std::size_t dim, std::size_t b) const {
  return (out_mask(v, dim) >> b) & 1U;
}

std::vector<std::vector<int>> GridOrientation::line_matrix(const GridVertex& v, std::size_t dim) const {
  const std::size_t n = shape_.dims.at(dim);
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  GridVertex u = v;
  for (std::size_t a = 0; a < n; ++a) {
    u[dim] = a;
    const std::uint64_t mask = out_mask(u, dim);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) m[a][b] = ((mask >> b) & 1U) ? 1 : -1;
    }
  }
  return m;
}

bool GridOrientation::operator==(const GridOrientation& other) const {
  if (shape_ != other.shape_) return false;
  if (!lazy_ && !other.lazy_) return masks_ == other.masks_;
  const std::size_t n = shape_.vertex_count();
  for (std::size_t idx = 0; idx < n; ++idx) {
    for (std::size_t i = 0; i < shape_.dimension(); ++i) {
      if (out_mask(idx, i) != other.out_mask(idx, i)) return false;
    }
  }
  return true;
}

namespace {

void require_sigma_preconditions(const ColoredPointSet& set) {
  const WeakPositionReport position = check_weak_general_position(set);
  if (!position.satisfied) {
    throw Error(ErrorKind::PreconditionFailed, "points are not in weak general position");
  }
  const SeparationReport separation = check_well_separated(set);
  if (!separation.satisfied) {
    throw Error(ErrorKind::PreconditionFailed, "point classes are not well separated");
  }
}

// Out-bit for the edge from the vertex whose hyperplane is h towards the
// point q of the varying class: q above h means the edge points back to us.
bool away_from(const Hyperplane& h, const Point& q) {
  switch (classify(h, q)) {
    case Sign::Above: return false;
    case Sign::Below: return true;
    case Sign::On: break;
  }
  throw Error(ErrorKind::OnPredicate, "input point lies on a colorful hyperplane");
}

}  // namespace

bool sigma_points_out(const ColoredPointSet& set, const GridVertex& v, std::size_t dim, std::size_t b) {
  if (dim >= set.dimension() || b >= set.size(dim)) throw Error(ErrorKind::OutOfRange, "edge outside the grid");
  const Hyperplane h = hyperplane_through(set.colorful_points(v));
  return away_from(h, set.point(dim, b));
}

GridOrientation build_sigma(const ColoredPointSet& set) {
  require_sigma_preconditions(set);
  GridShape shape(set.sizes());
  if (shape.edge_count() > GridOrientation::kExplicitEdgeLimit) {
    auto copy = std::make_shared<ColoredPointSet>(set);
    return GridOrientation(shape, [copy](const GridVertex& v, std::size_t i) {
      const Hyperplane h = hyperplane_through(copy->colorful_points(v));
      std::uint64_t mask = 0;
      for (std::size_t b = 0; b < copy->size(i); ++b) {
        if (b != v[i] && away_from(h, copy->point(i, b))) mask |= std::uint64_t{1} << b;
      }
      return mask;
    });
  }
  // One hyperplane per vertex, each edge decided from its smaller endpoint.
  std::vector<Hyperplane> planes;
  planes.reserve(shape.vertex_count());
  for (std::size_t idx = 0; idx < shape.vertex_count(); ++idx) {
    planes.push_back(hyperplane_through(set.colorful_points(shape.vertex_at(idx))));
  }
  return GridOrientation::from_edges(shape, [&](const GridVertex& v, std::size_t i, std::size_t b) {
    return away_from(planes[shape.index_of(v)], set.point(i, b));
  });
}

Outmap outmap(const GridOrientation& o, const GridVertex& v) {
  if (!o.shape().contains(v)) throw Error(ErrorKind::OutOfRange, "vertex outside the grid");
  Outmap out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::size_t>(std::popcount(o.out_mask(v, i)));
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> kept_coordinates(const GridShape& shape, const Subgrid& sub) {
  if (sub.size() != shape.dimension()) throw Error(ErrorKind::DimensionMismatch, "subgrid dimension");
  std::vector<std::vector<std::size_t>> kept(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t b = 0; b < shape.dims[i]; ++b) {
      if ((sub[i] >> b) & 1U) kept[i].push_back(b);
    }
    if (kept[i].empty() || (sub[i] >> shape.dims[i]) != 0) {
      throw Error(ErrorKind::OutOfRange, "subgrid must keep a non-empty set of valid coordinates");
    }
  }
  return kept;
}

template <typename Fn>
void for_each_subgrid_vertex(const std::vector<std::vector<std::size_t>>& kept, Fn&& fn) {
  std::vector<std::size_t> sizes;
  for (const auto& k : kept) sizes.push_back(k.size());
  GridVertex v(kept.size());
  for_each_tuple(sizes, [&](const std::vector<std::size_t>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) v[i] = kept[i][t[i]];
    fn(static_cast<const GridVertex&>(v));
  });
}

bool is_sink_in(const GridOrientation& o, const GridVertex& v, const Subgrid& sub) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (o.out_mask(v, i) & sub[i]) return false;
  }
  return true;
}

bool cube_criterion(const GridOrientation& o, const std::vector<std::vector<std::size_t>>& kept, const Subgrid& cube) {
  std::vector<GridVertex> vertices;
  std::vector<std::vector<bool>> outs;
  for_each_subgrid_vertex(kept, [&](const GridVertex& v) {
    vertices.push_back(v);
    std::vector<bool> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = (o.out_mask(v, i) & cube[i]) != 0;
    outs.push_back(std::move(out));
  });
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      bool separated = false;
      for (std::size_t i = 0; i < kept.size() && !separated; ++i) {
        separated = vertices[a][i] != vertices[b][i] && outs[a][i] != outs[b][i];
      }
      if (!separated) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<GridVertex> subgrid_sinks(const GridOrientation& o, const Subgrid& sub) {
  const auto kept = kept_coordinates(o.shape(), sub);
  std::vector<GridVertex> sinks;
  for_each_subgrid_vertex(kept, [&](const GridVertex& v) {
    if (is_sink_in(o, v, sub)) sinks.push_back(v);
  });
  return sinks;
}

bool is_cube_uso(const GridOrientation& o, const Subgrid& cube) {
  const auto kept = kept_coordinates(o.shape(), cube);
  for (const auto& k : kept) {
    if (k.size() > 2) throw Error(ErrorKind::NotACube, "subgrid keeps more than two coordinates in a dimension");
  }
  return cube_criterion(o, kept, cube);
}

std::size_t subgrid_count(const GridShape& shape) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (std::size_t n : shape.dims) {
    if (n >= 63) return kMax;
    const std::size_t factor = (std::size_t{1} << n) - 1;
    if (total > kMax / factor) return kMax;
    total *= factor;
  }
  return total;
}

UsoReport is_uso(const GridOrientation& o, UsoMode mode, std::size_t budget) {
  const GridShape& shape = o.shape();
  if (subgrid_count(shape) > budget) throw Error(ErrorKind::TooLarge, "subgrid enumeration exceeds the budget");
  const std::size_t d = shape.dimension();
  Subgrid sub(d, 1);
  for (;;) {
    const auto kept = kept_coordinates(shape, sub);
    std::vector<GridVertex> sinks;
    for_each_subgrid_vertex(kept, [&](const GridVertex& v) {
      if (is_sink_in(o, v, sub)) sinks.push_back(v);
    });
    bool cube = true;
    for (const auto& k : kept) cube = cube && k.size() <= 2;
    UsoReport report;
    if (mode == UsoMode::Full ? sinks.size() != 1 : sinks.empty()) {
      report.is_uso = false;
    } else if (mode == UsoMode::CubeCriterion && cube && !cube_criterion(o, kept, sub)) {
      report.is_uso = false;
      report.cube_criterion_failed = true;
    }
    if (!report.is_uso) {
      report.witness = sub;
      report.witness_sinks = std::move(sinks);
      return report;
    }
    std::size_t i = d;
    for (;;) {
      if (i == 0) return {};
      --i;
      if (++sub[i] < (std::uint64_t{1} << shape.dims[i])) break;
      sub[i] = 1;
    }
  }
}

OutmapTable outmap_table(const GridOrientation& o) {
  if (!o.is_explicit()) throw Error(ErrorKind::TooLarge, "outmap table needs an explicitly stored orientation");
  const GridShape& shape = o.shape();
  OutmapTable table;
  std::vector<bool> hit(shape.vertex_count(), false);
  table.bijection = true;
  for (std::size_t idx = 0; idx < shape.vertex_count(); ++idx) {
    GridVertex v = shape.vertex_at(idx);
    Outmap out = outmap(o, v);
    // Outmap components are bounded by n_i - 1, so they index the grid too.
    const std::size_t slot = shape.index_of(out);
    if (hit[slot]) table.bijection = false;
    hit[slot] = true;
    table.entries.emplace_back(std::move(v), std::move(out));
  }
  return table;
}

GridVertex find_vertex_with_outmap(const GridOrientation& o, const Outmap& target) {
  const GridShape& shape = o.shape();
  if (!shape.contains(target)) throw Error(ErrorKind::NotFound, "target outmap is out of range");
  for (std::size_t idx = 0; idx < shape.vertex_count(); ++idx) {
    GridVertex v = shape.vertex_at(idx);
    if (outmap(o, v) == target) return v;
  }
  throw Error(ErrorKind::NotFound, "no vertex has the requested outmap");
}

void for_each_orientation(const GridShape& shape, const std::function<void(const GridOrientation&)>& fn) {
  const std::size_t edges = shape.edge_count();
  if (edges > kMaxEnumeratedEdges) throw Error(ErrorKind::TooLarge, "too many edges for exhaustive enumeration");
  const std::uint64_t total = std::uint64_t{1} << edges;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::size_t k = 0;
    fn(GridOrientation::from_edges(shape, [&](const GridVertex&, std::size_t, std::size_t) {
      return ((code >> k++) & 1U) != 0;
    }));
  }
}

}  // namespace hamcut

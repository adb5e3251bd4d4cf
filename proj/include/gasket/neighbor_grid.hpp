#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gasket/geometry.hpp"

namespace gasket {

// Uniform-grid fixed-radius neighbor index over an immutable point set.
// Cells are half-open squares of side cell_size; a point lands in cell
// (floor(re/h), floor(im/h)). All counting is strict: d < radius.
class NeighborGrid {
 public:
  NeighborGrid(std::vector<Complex> points, double cell_size);

  std::size_t size() const { return pts_.size(); }
  double cell_size() const { return cell_; }
  const std::vector<Complex>& points() const { return pts_; }

  std::pair<std::int64_t, std::int64_t> cell_coords(std::size_t index) const;
  std::span<const std::uint32_t> cell_entries(std::int64_t cx, std::int64_t cy) const;

  // number of unordered pairs with point_distance < radius
  std::uint64_t pairs_within(double radius) const;

  // the distances themselves, in a deterministic order (ascending first
  // index, then scan order); same comparisons as pairs_within
  std::vector<double> pair_distances_within(double radius) const;

  // distance to the nearest other point, by expanding cell rings until the
  // best candidate provably beats every unscanned cell
  double nearest_distance(std::size_t index) const;

  // nearest_distance for every point; block-parallel, each block writes its
  // own output slots so the result is independent of the thread count
  std::vector<double> all_nearest_distances(int threads = 1) const;

 private:
  std::pair<std::int64_t, std::int64_t> cell_of(Complex p) const;

  std::vector<Complex> pts_;
  double cell_ = 0.0;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells_;
  std::int64_t cx_min_ = 0, cx_max_ = -1, cy_min_ = 0, cy_max_ = -1;
};

}  // namespace gasket

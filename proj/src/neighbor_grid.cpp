#include "gasket/neighbor_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gasket/parallel.hpp"

namespace gasket {

namespace {

inline std::uint64_t cell_key(std::int64_t cx, std::int64_t cy) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(cy));
}

}  // namespace

NeighborGrid::NeighborGrid(std::vector<Complex> points, double cell_size)
    : pts_(std::move(points)), cell_(cell_size) {
  if (!(cell_size > 0.0) || !std::isfinite(cell_size))
    throw std::invalid_argument("NeighborGrid: cell_size must be positive and finite");
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (!std::isfinite(pts_[i].real()) || !std::isfinite(pts_[i].imag()))
      throw std::invalid_argument("NeighborGrid: points must be finite");
    const auto [cx, cy] = cell_of(pts_[i]);
    cells_[cell_key(cx, cy)].push_back(static_cast<std::uint32_t>(i));
    if (i == 0) {
      cx_min_ = cx_max_ = cx;
      cy_min_ = cy_max_ = cy;
    } else {
      cx_min_ = std::min(cx_min_, cx);
      cx_max_ = std::max(cx_max_, cx);
      cy_min_ = std::min(cy_min_, cy);
      cy_max_ = std::max(cy_max_, cy);
    }
  }
}

std::pair<std::int64_t, std::int64_t> NeighborGrid::cell_of(Complex p) const {
  return {static_cast<std::int64_t>(std::floor(p.real() / cell_)),
          static_cast<std::int64_t>(std::floor(p.imag() / cell_))};
}

std::pair<std::int64_t, std::int64_t> NeighborGrid::cell_coords(std::size_t index) const {
  if (index >= pts_.size())
    throw std::out_of_range("NeighborGrid: point index out of range");
  return cell_of(pts_[index]);
}

std::span<const std::uint32_t> NeighborGrid::cell_entries(std::int64_t cx,
                                                          std::int64_t cy) const {
  const auto it = cells_.find(cell_key(cx, cy));
  if (it == cells_.end()) return {};
  return {it->second.data(), it->second.size()};
}

std::uint64_t NeighborGrid::pairs_within(double radius) const {
  if (!(radius > 0.0) || pts_.size() < 2) return 0;
  const auto reach = static_cast<std::int64_t>(std::ceil(radius / cell_));
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    const auto [cx, cy] = cell_of(pts_[i]);
    const std::int64_t x0 = std::max(cx - reach, cx_min_), x1 = std::min(cx + reach, cx_max_);
    const std::int64_t y0 = std::max(cy - reach, cy_min_), y1 = std::min(cy + reach, cy_max_);
    for (std::int64_t x = x0; x <= x1; ++x)
      for (std::int64_t y = y0; y <= y1; ++y)
        for (const std::uint32_t j : cell_entries(x, y))
          if (j > i && point_distance(pts_[i], pts_[j]) < radius) ++n;
  }
  return n;
}

std::vector<double> NeighborGrid::pair_distances_within(double radius) const {
  std::vector<double> out;
  if (!(radius > 0.0) || pts_.size() < 2) return out;
  const auto reach = static_cast<std::int64_t>(std::ceil(radius / cell_));
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    const auto [cx, cy] = cell_of(pts_[i]);
    const std::int64_t x0 = std::max(cx - reach, cx_min_), x1 = std::min(cx + reach, cx_max_);
    const std::int64_t y0 = std::max(cy - reach, cy_min_), y1 = std::min(cy + reach, cy_max_);
    for (std::int64_t x = x0; x <= x1; ++x)
      for (std::int64_t y = y0; y <= y1; ++y)
        for (const std::uint32_t j : cell_entries(x, y))
          if (j > i) {
            const double d = point_distance(pts_[i], pts_[j]);
            if (d < radius) out.push_back(d);
          }
  }
  return out;
}

double NeighborGrid::nearest_distance(std::size_t index) const {
  if (index >= pts_.size())
    throw std::out_of_range("NeighborGrid: point index out of range");
  if (pts_.size() < 2)
    throw std::invalid_argument("NeighborGrid: nearest_distance needs at least 2 points");
  const Complex p = pts_[index];
  const auto [cx, cy] = cell_of(p);
  // farthest occupied cell, in Chebyshev rings
  const std::int64_t ring_limit =
      std::max({cx - cx_min_, cx_max_ - cx, cy - cy_min_, cy_max_ - cy, std::int64_t{0}});
  double best = std::numeric_limits<double>::infinity();
  auto scan_cell = [&](std::int64_t x, std::int64_t y) {
    if (x < cx_min_ || x > cx_max_ || y < cy_min_ || y > cy_max_) return;
    for (const std::uint32_t j : cell_entries(x, y))
      if (j != index) best = std::min(best, point_distance(p, pts_[j]));
  };
  for (std::int64_t ring = 0; ring <= ring_limit; ++ring) {
    if (ring == 0) {
      scan_cell(cx, cy);
    } else {
      for (std::int64_t x = cx - ring; x <= cx + ring; ++x) {
        scan_cell(x, cy - ring);
        scan_cell(x, cy + ring);
      }
      for (std::int64_t y = cy - ring + 1; y <= cy + ring - 1; ++y) {
        scan_cell(cx - ring, y);
        scan_cell(cx + ring, y);
      }
    }
    // any point beyond ring r sits at distance >= r*cell
    if (best <= static_cast<double>(ring) * cell_) break;
  }
  return best;
}

std::vector<double> NeighborGrid::all_nearest_distances(int threads) const {
  std::vector<double> out(pts_.size());
  constexpr std::size_t kBlock = 4096;
  const std::size_t n_blocks = (pts_.size() + kBlock - 1) / kBlock;
  parallel_blocks(n_blocks, threads, [&](std::size_t b) {
    const std::size_t lo = b * kBlock;
    const std::size_t hi = std::min(lo + kBlock, pts_.size());
    for (std::size_t i = lo; i < hi; ++i) out[i] = nearest_distance(i);
  });
  return out;
}

}  // namespace gasket

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "gasket/neighbor_grid.hpp"
#include "oracles.hpp"

using namespace gasket;

TEST_CASE("construction, cells and edge cases") {
  CHECK_THROWS_AS(NeighborGrid({}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(NeighborGrid({}, -1.0), std::invalid_argument);

  const NeighborGrid empty({}, 1.0);
  CHECK(empty.size() == 0);
  CHECK(empty.pairs_within(10.0) == 0);

  const NeighborGrid one({Complex{0.5, 0.5}}, 1.0);
  CHECK(one.cell_coords(0) == std::pair<std::int64_t, std::int64_t>{0, 0});
  CHECK(one.pairs_within(10.0) == 0);
  CHECK_THROWS_AS(one.nearest_distance(0), std::invalid_argument);
  CHECK_THROWS_AS(one.nearest_distance(5), std::out_of_range);

  // floor semantics: a point exactly on a cell boundary belongs to the upper cell
  const NeighborGrid edge({Complex{1.0, -0.5}}, 0.5);
  CHECK(edge.cell_coords(0) == std::pair<std::int64_t, std::int64_t>{2, -1});
}

TEST_CASE("every point is indexed in exactly one cell and is retrievable") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> pts;
  for (int i = 0; i < 500; ++i) pts.push_back({u(rng), u(rng)});
  const NeighborGrid grid(pts, 0.13);
  std::size_t total = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [cx, cy] = grid.cell_coords(i);
    const auto entries = grid.cell_entries(cx, cy);
    CHECK(std::count(entries.begin(), entries.end(), i) == 1);
    total += 1;
  }
  CHECK(total == pts.size());
}

TEST_CASE("strict inequality at the radius") {
  const std::vector<Complex> pts = {{0.0, 0.0}, {0.25, 0.0}};
  const NeighborGrid grid(pts, 0.1);
  CHECK(grid.pairs_within(0.25) == 0);       // d == radius does not count
  CHECK(grid.pairs_within(0.2500001) == 1);
  CHECK(grid.pairs_within(0.2) == 0);
  CHECK(grid.nearest_distance(0) == 0.25);
  CHECK(grid.nearest_distance(1) == 0.25);
}

TEST_CASE("integer lattice hand count") {
  std::vector<Complex> pts;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) pts.push_back({double(x), double(y)});
  const NeighborGrid grid(pts, 1.0);
  CHECK(grid.pairs_within(1.0) == 0);         // unit separations excluded strictly
  CHECK(grid.pairs_within(1.0001) == 12);     // 6 horizontal + 6 vertical
  CHECK(grid.pairs_within(1.5) == 20);        // + 8 diagonals sqrt(2)
  CHECK(grid.pairs_within(100.0) == 36);      // all pairs, reach clamped to bbox
  const auto d = grid.pair_distances_within(1.5);
  CHECK(d.size() == 20);
}

TEST_CASE("ring expansion finds far-away nearest neighbors") {
  // tight cluster plus a lonely point far outside its cell neighborhood
  std::vector<Complex> pts = {{0.0, 0.0}, {0.001, 0.0}, {0.0, 0.002}, {0.9, 0.4}};
  const NeighborGrid grid(pts, 0.001);
  CHECK(grid.nearest_distance(0) == 0.001);
  // bitwise equality: same pair, same distance expression
  CHECK(grid.nearest_distance(3) == oracle::nearest_naive(pts, 3));
}

TEST_CASE("grid agrees with the quadratic oracle on random sets") {
  std::mt19937 rng(20250817);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + rng() % 300;
    std::vector<Complex> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
    const double cell = 0.02 + 0.28 * u(rng);
    const double radius = 0.5 * u(rng);
    const NeighborGrid grid(pts, cell);

    CHECK(grid.pairs_within(radius) == oracle::pairs_within_naive(pts, radius));

    auto sorted = grid.pair_distances_within(radius);
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> naive;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = point_distance(pts[i], pts[j]);
        if (d < radius) naive.push_back(d);
      }
    std::sort(naive.begin(), naive.end());
    REQUIRE(sorted.size() == naive.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == naive[i]);

    for (std::size_t i = 0; i < n; ++i)
      CHECK(grid.nearest_distance(i) == oracle::nearest_naive(pts, i));
  }
}

TEST_CASE("all_nearest_distances is identical across thread counts") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> pts;
  for (int i = 0; i < 5000; ++i) pts.push_back({u(rng), u(rng)});
  const NeighborGrid grid(pts, 0.01);
  const std::vector<double> a = grid.all_nearest_distances(1);
  const std::vector<double> b = grid.all_nearest_distances(4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

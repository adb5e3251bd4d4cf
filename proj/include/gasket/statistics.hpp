#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gasket/enumerate.hpp"
#include "gasket/geometry.hpp"

namespace gasket {

// A restriction window for center statistics. Membership is strict
// (boundary points excluded) so thresholds never depend on rounding slack.
struct Region {
  enum class Kind { whole_plane, half_plane_re_pos, first_quadrant, disk, rectangle };

  Kind kind = Kind::whole_plane;
  Complex center{};        // disk
  double radius = 0.0;     // disk
  Complex lo{}, hi{};      // rectangle corners, lo < hi componentwise

  static Region plane();
  static Region halfplane();
  static Region quadrant();
  static Region disk(Complex center, double radius);
  static Region rect(Complex lo, Complex hi);

  // CLI syntax: plane | halfplane | quadrant | disk:cx,cy,r | rect:x0,y0,x1,y1
  static Region parse(const std::string& text);

  bool contains(Complex z) const;
  std::string label() const;     // filename-safe tag
  std::string describe() const;  // human-readable, for metadata
  void validate() const;         // throws config_error
};

enum class SeriesKind { pair_correlation, pair_correlation_derivative, nearest_spacing };

// A statistic sampled on an s-grid, carrying the context needed to compare
// and serialize it.
struct StatSeries {
  std::vector<double> s_grid;
  std::vector<double> values;
  SeriesKind kind = SeriesKind::pair_correlation;
  double T = 0.0;
  Region region{};
  std::size_t n_points = 0;
};

// 0, step, 2*step, ... up to s_max (grid point i is i*step, not a running sum)
std::vector<double> make_s_grid(double s_max, double s_step);

std::vector<Complex> restrict_points(std::span<const Complex> pts, const Region& region);
std::vector<Complex> restrict_centers(const CircleSet& set, const Region& region);

// F_T(s): fraction of unordered center pairs with d*T < s, normalized by the
// point count; assembled from one sorted distance collection so every grid
// value matches a direct pairs_within query bit for bit.
StatSeries pair_correlation(std::span<const Complex> centers, double T,
                            std::span<const double> s_grid,
                            const Region& region = Region::plane());

// (F(s + delta) - F(s)) / delta on the trimmed grid; requires a uniform grid
// whose step divides delta
StatSeries empirical_derivative(const StatSeries& series, double delta = 0.1);

// H_T(s): empirical CDF of T * (nearest-neighbor distance)
StatSeries nearest_spacing(std::span<const Complex> centers, double T,
                           std::span<const double> s_grid,
                           const Region& region = Region::plane(), int threads = 1);

struct EnergyValue {
  double T = 0.0;
  double value = 0.0;
};

// G(T) = T^(-2*delta) * sum over ordered distinct pairs of 1/d.
// Fixed-size blocks with compensated per-block sums, combined in block
// order, keep the result independent of the thread count.
EnergyValue energy(std::span<const Complex> centers, double T, int threads = 1);

// 2*F_T(s) for the full center set: the expected number of other centers
// within normalized distance s of a random center
double expected_visible(const CircleSet& set, double s = 10.0);

// shape invariants: monotone CDF in [0,1] starting at 0, derivative >= 0
void validate_series(const StatSeries& series);

// max |a - b| over the shared s-grid, restricted to s <= s_limit
double sup_distance(const StatSeries& a, const StatSeries& b,
                    double s_limit = std::numeric_limits<double>::infinity());

}  // namespace gasket

#include "gasket/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "gasket/neighbor_grid.hpp"
#include "gasket/parallel.hpp"

namespace gasket {

namespace {

std::string fmt_g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

void check_grid(std::span<const double> s_grid) {
  if (s_grid.empty())
    throw std::invalid_argument("statistics: s_grid must be nonempty");
  if (!(s_grid.front() >= 0.0))
    throw std::invalid_argument("statistics: s_grid must start at s >= 0");
  for (std::size_t i = 1; i < s_grid.size(); ++i)
    if (!(s_grid[i] > s_grid[i - 1]))
      throw std::invalid_argument("statistics: s_grid must be strictly increasing");
}

void check_points(std::span<const Complex> pts, const char* who) {
  if (pts.size() < 2)
    throw std::invalid_argument(std::string(who) + ": need at least 2 points");
}

// counts of elements < s/T for each grid s, from one sorted distance list;
// bitwise-identical to issuing a strict range query per s
std::vector<double> cdf_from_sorted(const std::vector<double>& sorted_d, double T,
                                    std::span<const double> s_grid, std::size_t n) {
  std::vector<double> values;
  values.reserve(s_grid.size());
  for (const double s : s_grid) {
    const double radius = s / T;
    const auto it = std::lower_bound(sorted_d.begin(), sorted_d.end(), radius);
    values.push_back(static_cast<double>(it - sorted_d.begin()) /
                     static_cast<double>(n));
  }
  return values;
}

}  // namespace

Region Region::plane() { return {}; }

Region Region::halfplane() {
  Region r;
  r.kind = Kind::half_plane_re_pos;
  return r;
}

Region Region::quadrant() {
  Region r;
  r.kind = Kind::first_quadrant;
  return r;
}

Region Region::disk(Complex center, double radius) {
  Region r;
  r.kind = Kind::disk;
  r.center = center;
  r.radius = radius;
  r.validate();
  return r;
}

Region Region::rect(Complex lo, Complex hi) {
  Region r;
  r.kind = Kind::rectangle;
  r.lo = lo;
  r.hi = hi;
  r.validate();
  return r;
}

void Region::validate() const {
  switch (kind) {
    case Kind::disk:
      if (!(radius > 0.0) || !std::isfinite(radius) ||
          !std::isfinite(center.real()) || !std::isfinite(center.imag()))
        throw config_error("region: disk needs a finite center and positive radius");
      break;
    case Kind::rectangle:
      if (!(lo.real() < hi.real()) || !(lo.imag() < hi.imag()) ||
          !std::isfinite(lo.real()) || !std::isfinite(lo.imag()) ||
          !std::isfinite(hi.real()) || !std::isfinite(hi.imag()))
        throw config_error("region: rectangle needs lo < hi in both coordinates");
      break;
    default:
      break;
  }
}

bool Region::contains(Complex z) const {
  switch (kind) {
    case Kind::whole_plane:
      return true;
    case Kind::half_plane_re_pos:
      return z.real() > 0.0;
    case Kind::first_quadrant:
      return z.real() > 0.0 && z.imag() > 0.0;
    case Kind::disk:
      return point_distance(z, center) < radius;
    case Kind::rectangle:
      return lo.real() < z.real() && z.real() < hi.real() &&
             lo.imag() < z.imag() && z.imag() < hi.imag();
  }
  return false;
}

std::string Region::label() const {
  switch (kind) {
    case Kind::whole_plane:
      return "plane";
    case Kind::half_plane_re_pos:
      return "halfplane";
    case Kind::first_quadrant:
      return "quadrant";
    case Kind::disk:
      return "disk_" + fmt_g(center.real()) + "_" + fmt_g(center.imag()) + "_" +
             fmt_g(radius);
    case Kind::rectangle:
      return "rect_" + fmt_g(lo.real()) + "_" + fmt_g(lo.imag()) + "_" +
             fmt_g(hi.real()) + "_" + fmt_g(hi.imag());
  }
  return "unknown";
}

std::string Region::describe() const {
  switch (kind) {
    case Kind::whole_plane:
      return "whole plane";
    case Kind::half_plane_re_pos:
      return "half plane Re z > 0";
    case Kind::first_quadrant:
      return "first quadrant Re z > 0, Im z > 0";
    case Kind::disk:
      return "open disk, center (" + fmt_g(center.real()) + ", " +
             fmt_g(center.imag()) + "), radius " + fmt_g(radius);
    case Kind::rectangle:
      return "open rectangle (" + fmt_g(lo.real()) + ", " + fmt_g(lo.imag()) +
             ") to (" + fmt_g(hi.real()) + ", " + fmt_g(hi.imag()) + ")";
  }
  return "unknown";
}

Region Region::parse(const std::string& text) {
  if (text == "plane") return plane();
  if (text == "halfplane") return halfplane();
  if (text == "quadrant") return quadrant();
  auto parse_numbers = [&](const std::string& body, std::size_t want) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const std::size_t comma = body.find(',', pos);
      const std::string field =
          body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      if (field.empty() || end != field.c_str() + field.size() || !std::isfinite(v))
        throw config_error("region: bad number '" + field + "' in '" + text + "'");
      out.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (out.size() != want)
      throw config_error("region: expected " + std::to_string(want) +
                         " numbers in '" + text + "'");
    return out;
  };
  if (text.rfind("disk:", 0) == 0) {
    const auto v = parse_numbers(text.substr(5), 3);
    return disk({v[0], v[1]}, v[2]);
  }
  if (text.rfind("rect:", 0) == 0) {
    const auto v = parse_numbers(text.substr(5), 4);
    return rect({v[0], v[1]}, {v[2], v[3]});
  }
  throw config_error(
      "region: unknown region '" + text +
      "' (expected plane, halfplane, quadrant, disk:cx,cy,r or rect:x0,y0,x1,y1)");
}

std::vector<double> make_s_grid(double s_max, double s_step) {
  if (!(s_step > 0.0) || !std::isfinite(s_step) || !(s_max >= s_step))
    throw std::invalid_argument("make_s_grid: need 0 < s_step <= s_max");
  const auto n = static_cast<std::size_t>(std::floor(s_max / s_step + 1e-9));
  std::vector<double> grid;
  grid.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    grid.push_back(static_cast<double>(i) * s_step);
  return grid;
}

std::vector<Complex> restrict_points(std::span<const Complex> pts, const Region& region) {
  std::vector<Complex> out;
  for (const Complex& z : pts)
    if (region.contains(z)) out.push_back(z);
  return out;
}

std::vector<Complex> restrict_centers(const CircleSet& set, const Region& region) {
  std::vector<Complex> out;
  for (const Circle& c : set.circles) {
    const Complex z = c.center();
    if (region.contains(z)) out.push_back(z);
  }
  return out;
}

StatSeries pair_correlation(std::span<const Complex> centers, double T,
                            std::span<const double> s_grid, const Region& region) {
  check_points(centers, "pair_correlation");
  check_grid(s_grid);
  if (!(T > 0.0) || !std::isfinite(T))
    throw std::invalid_argument("pair_correlation: T must be positive");

  std::vector<double> d;
  const double r_max = s_grid.back() / T;
  if (r_max > 0.0) {
    NeighborGrid grid(std::vector<Complex>(centers.begin(), centers.end()), r_max);
    d = grid.pair_distances_within(r_max);
    std::sort(d.begin(), d.end());
  }

  StatSeries out;
  out.s_grid.assign(s_grid.begin(), s_grid.end());
  out.values = cdf_from_sorted(d, T, s_grid, centers.size());
  out.kind = SeriesKind::pair_correlation;
  out.T = T;
  out.region = region;
  out.n_points = centers.size();
  validate_series(out);
  return out;
}

StatSeries empirical_derivative(const StatSeries& series, double delta) {
  if (series.kind != SeriesKind::pair_correlation)
    throw std::invalid_argument("empirical_derivative: input must be a pair correlation series");
  if (!(delta > 0.0))
    throw std::invalid_argument("empirical_derivative: delta must be positive");
  if (series.s_grid.size() < 2)
    throw std::invalid_argument("empirical_derivative: series too short");
  const double step = series.s_grid[1] - series.s_grid[0];
  for (std::size_t i = 1; i < series.s_grid.size(); ++i)
    if (std::abs(series.s_grid[i] - series.s_grid[i - 1] - step) > 1e-12)
      throw std::invalid_argument("empirical_derivative: s_grid must be uniform");
  const auto stride = static_cast<std::size_t>(std::llround(delta / step));
  if (stride < 1 || std::abs(static_cast<double>(stride) * step - delta) > 1e-9)
    throw std::invalid_argument("empirical_derivative: grid step must divide delta");
  if (series.s_grid.size() <= stride)
    throw std::invalid_argument("empirical_derivative: series shorter than delta");

  StatSeries out;
  const std::size_t n = series.s_grid.size() - stride;
  out.s_grid.assign(series.s_grid.begin(), series.s_grid.begin() + n);
  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.values.push_back((series.values[i + stride] - series.values[i]) / delta);
  out.kind = SeriesKind::pair_correlation_derivative;
  out.T = series.T;
  out.region = series.region;
  out.n_points = series.n_points;
  validate_series(out);
  return out;
}

StatSeries nearest_spacing(std::span<const Complex> centers, double T,
                           std::span<const double> s_grid, const Region& region,
                           int threads) {
  check_points(centers, "nearest_spacing");
  check_grid(s_grid);
  if (!(T > 0.0) || !std::isfinite(T))
    throw std::invalid_argument("nearest_spacing: T must be positive");

  // start at the expected spacing scale 1/T and let rings expand as needed
  NeighborGrid grid(std::vector<Complex>(centers.begin(), centers.end()), 1.0 / T);
  std::vector<double> g = grid.all_nearest_distances(threads);
  for (double& v : g) v *= T;
  std::sort(g.begin(), g.end());

  StatSeries out;
  out.s_grid.assign(s_grid.begin(), s_grid.end());
  out.values.reserve(s_grid.size());
  for (const double s : s_grid) {
    const auto it = std::lower_bound(g.begin(), g.end(), s);
    out.values.push_back(static_cast<double>(it - g.begin()) /
                         static_cast<double>(g.size()));
  }
  out.kind = SeriesKind::nearest_spacing;
  out.T = T;
  out.region = region;
  out.n_points = centers.size();
  validate_series(out);
  return out;
}

EnergyValue energy(std::span<const Complex> centers, double T, int threads) {
  check_points(centers, "energy");
  if (!(T > 0.0) || !std::isfinite(T))
    throw std::invalid_argument("energy: T must be positive");

  const std::size_t n = centers.size();
  constexpr std::size_t kBlock = 512;
  const std::size_t n_blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(n_blocks, 0.0);
  parallel_blocks(n_blocks, threads, [&](std::size_t b) {
    NeumaierSum sum;
    const std::size_t lo = b * kBlock;
    const std::size_t hi = std::min(lo + kBlock, n);
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = point_distance(centers[i], centers[j]);
        if (d == 0.0) {
          char buf[96];
          std::snprintf(buf, sizeof buf,
                        "energy: duplicate points at indices %zu and %zu", i, j);
          throw numeric_error(buf);
        }
        sum.add(1.0 / d);
      }
    partial[b] = sum.value();
  });
  NeumaierSum total;
  for (const double p : partial) total.add(p);
  const double value =
      2.0 * total.value() / std::pow(T, 2.0 * kHausdorffDelta);
  return {T, value};
}

double expected_visible(const CircleSet& set, double s) {
  std::vector<Complex> pts = circle_centers(set);
  if (pts.size() < 2)
    throw std::invalid_argument("expected_visible: need at least 2 circles");
  if (!(set.T > 0.0))
    throw std::invalid_argument("expected_visible: curvature bound must be positive");
  if (!(s > 0.0)) return 0.0;
  const double radius = s / set.T;
  const std::size_t n = pts.size();
  NeighborGrid grid(std::move(pts), radius);
  return 2.0 * static_cast<double>(grid.pairs_within(radius)) /
         static_cast<double>(n);
}

void validate_series(const StatSeries& series) {
  if (series.s_grid.empty() || series.s_grid.size() != series.values.size())
    throw numeric_error("series: grid and values must be nonempty and aligned");
  for (std::size_t i = 1; i < series.s_grid.size(); ++i)
    if (!(series.s_grid[i] > series.s_grid[i - 1]))
      throw numeric_error("series: s_grid must be strictly increasing");
  for (const double v : series.values)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw numeric_error("series: values must be finite and non-negative");
  if (series.kind == SeriesKind::pair_correlation_derivative) return;
  for (std::size_t i = 1; i < series.values.size(); ++i)
    if (series.values[i] < series.values[i - 1])
      throw numeric_error("series: cumulative statistic must be non-decreasing");
  if (series.s_grid.front() == 0.0 && series.values.front() != 0.0)
    throw numeric_error("series: value at s = 0 must be 0");
  if (series.kind == SeriesKind::nearest_spacing)
    for (const double v : series.values)
      if (v > 1.0) throw numeric_error("series: spacing CDF must stay within [0, 1]");
}

double sup_distance(const StatSeries& a, const StatSeries& b, double s_limit) {
  const std::size_t n = std::min(a.s_grid.size(), b.s_grid.size());
  if (n == 0) throw std::invalid_argument("sup_distance: empty series");
  double sup = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(a.s_grid[i] - b.s_grid[i]) > 1e-12)
      throw std::invalid_argument("sup_distance: series use different grids");
    if (a.s_grid[i] > s_limit + 1e-12) break;
    sup = std::max(sup, std::abs(a.values[i] - b.values[i]));
  }
  return sup;
}

}  // namespace gasket

#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

namespace oracle {

using gasket::Circle;
using gasket::CircleSet;
using gasket::Complex;
using gasket::DescartesQuadruple;
using gasket::GasketSpec;

namespace {

using CircleKey = std::array<long long, 3>;
using QuadKey = std::array<CircleKey, 4>;

CircleKey circle_key(const Circle& c) {
  return {std::llround(c.k * 1e6), std::llround(c.m.real() * 1e6),
          std::llround(c.m.imag() * 1e6)};
}

QuadKey quad_key(const DescartesQuadruple& q) {
  QuadKey key;
  for (int i = 0; i < 4; ++i) key[i] = circle_key(q.circles[i]);
  std::sort(key.begin(), key.end());
  return key;
}

Complex tangency_point(const Circle& a, const Circle& b) {
  const Complex za = a.center(), zb = b.center();
  if (a.k > 0.0 && b.k > 0.0) {
    const double d = gasket::point_distance(za, zb);
    return za + a.radius() * (zb - za) / d;
  }
  const Circle& outer = a.k < 0.0 ? a : b;
  const Circle& inner = a.k < 0.0 ? b : a;
  const Complex zi = inner.center(), zo = outer.center();
  const double d = gasket::point_distance(zi, zo);
  if (d == 0.0) throw std::runtime_error("oracle: concentric tangency");
  return zi + inner.radius() * (zi - zo) / d;
}

}  // namespace

CircleSet bfs_enumerate(const GasketSpec& spec, double T, bool include_bounding) {
  const DescartesQuadruple root = gasket::root_quadruple(spec);

  std::set<CircleKey> seen_circles;
  std::set<QuadKey> seen_quads;
  std::vector<Circle> circles;

  auto add_circle = [&](const Circle& c) {
    if (!(c.k < T)) return;
    if (!include_bounding && c.k < 0.0) return;
    if (seen_circles.insert(circle_key(c)).second) circles.push_back(c);
  };

  for (const Circle& c : root.circles) add_circle(c);
  std::deque<DescartesQuadruple> queue;
  queue.push_back(root);
  seen_quads.insert(quad_key(root));

  while (!queue.empty()) {
    const DescartesQuadruple cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < 4; ++i) {
      double ksum = 0.0;
      for (int j = 0; j < 4; ++j)
        if (j != i) ksum += cur.circles[j].k;
      if (2.0 * ksum - cur.circles[i].k >= T) continue;
      const DescartesQuadruple child = gasket::swap_circle(cur, i);
      add_circle(child.circles[i]);
      if (seen_quads.insert(quad_key(child)).second) queue.push_back(child);
    }
  }

  std::sort(circles.begin(), circles.end(), [](const Circle& a, const Circle& b) {
    if (a.k != b.k) return a.k < b.k;
    const Complex za = a.center(), zb = b.center();
    if (za.real() != zb.real()) return za.real() < zb.real();
    return za.imag() < zb.imag();
  });

  CircleSet out;
  out.circles = std::move(circles);
  out.T = T;
  out.spec = spec;
  out.include_bounding = include_bounding;
  return out;
}

Circle inversion_swap(const DescartesQuadruple& q, int index) {
  std::array<const Circle*, 3> fixed{};
  int n = 0;
  for (int i = 0; i < 4; ++i)
    if (i != index) fixed[n++] = &q.circles[i];

  const Complex p0 = tangency_point(*fixed[0], *fixed[1]);
  const Complex p1 = tangency_point(*fixed[0], *fixed[2]);
  const Complex p2 = tangency_point(*fixed[1], *fixed[2]);

  // circumcircle of the three tangency points: 2(p1-p0).x = |p1|^2-|p0|^2 etc.
  const double ax = 2.0 * (p1.real() - p0.real()), ay = 2.0 * (p1.imag() - p0.imag());
  const double bx = 2.0 * (p2.real() - p0.real()), by = 2.0 * (p2.imag() - p0.imag());
  const double ra = std::norm(p1) - std::norm(p0);
  const double rb = std::norm(p2) - std::norm(p0);
  const double det = ax * by - ay * bx;
  const double scale = std::abs(p1 - p0) * std::abs(p2 - p0);
  if (std::abs(det) <= 4.0 * 1e-9 * scale) {
    // collinear tangency points: the mirror is a straight line, and the swap
    // is the reflection across it (an isometry, so curvature is preserved)
    std::array<Complex, 3> pts = {p0, p1, p2};
    Complex qa = p0, qb = p1;
    double span = std::abs(p1 - p0);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (std::abs(pts[b] - pts[a]) > span) {
          span = std::abs(pts[b] - pts[a]);
          qa = pts[a];
          qb = pts[b];
        }
    const Complex u = (qb - qa) / span;
    const Circle& c = q.circles[index];
    const Complex z_ref = qa + u * u * std::conj(c.center() - qa);
    return Circle{c.k, c.k * z_ref};
  }
  const Complex center{(ra * by - ay * rb) / det, (ax * rb - ra * bx) / det};
  const double rho2 = std::norm(p0 - center);

  // inversion in that circle carries the replaced circle to its mirror image
  const Circle& c = q.circles[index];
  const Complex z = c.center();
  const double r = c.radius();
  const double denom = std::norm(z - center) - r * r;
  if (denom == 0.0) throw std::runtime_error("oracle: inversion through circle");
  const Complex z_new = center + rho2 * (z - center) / denom;
  const double r_new = rho2 * r / std::abs(denom);
  const double k_new = 1.0 / r_new;
  return Circle{k_new, k_new * z_new};
}

std::uint64_t pairs_within_naive(std::span<const Complex> pts, double radius) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (gasket::point_distance(pts[i], pts[j]) < radius) ++n;
  return n;
}

double nearest_naive(std::span<const Complex> pts, std::size_t index) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < pts.size(); ++j)
    if (j != index)
      best = std::min(best, gasket::point_distance(pts[index], pts[j]));
  return best;
}

double energy_naive(std::span<const Complex> pts, double T) {
  double sum = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) sum += 1.0 / gasket::point_distance(pts[i], pts[j]);
  return sum / std::pow(T, 2.0 * gasket::kHausdorffDelta);
}

}  // namespace oracle

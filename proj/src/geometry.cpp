#include "gasket/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace gasket {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

}  // namespace

GasketSpec GasketSpec::from_pi_multiples(double a, double b) {
  GasketSpec spec{a * std::numbers::pi, b * std::numbers::pi};
  spec.validate();
  return spec;
}

void GasketSpec::validate() const {
  if (!std::isfinite(theta1) || !std::isfinite(theta2))
    throw degeneracy_error("gasket spec: tangency angles must be finite");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(0.0 < theta1 && theta1 < theta2 && theta2 < two_pi))
    throw degeneracy_error(
        fmt("gasket spec: need 0 < theta1 < theta2 < 2*pi, got theta1=%.17g theta2=%.17g",
            theta1, theta2));
  const double gap = std::min({theta1, theta2 - theta1, two_pi - theta2});
  if (gap < kAngleEps)
    throw degeneracy_error(
        fmt("gasket spec: tangency points nearly coincide (smallest gap %.3g rad, minimum %.3g)",
            gap, kAngleEps));
}

DescartesResiduals descartes_residual(const DescartesQuadruple& q) {
  double ks = 0.0, k2 = 0.0;
  Complex ms{}, m2{};
  for (const Circle& c : q.circles) {
    ks += c.k;
    k2 += c.k * c.k;
    ms += c.m;
    m2 += c.m * c.m;
  }
  const Complex rm = ms * ms - 2.0 * m2;
  return {std::abs(ks * ks - 2.0 * k2),
          std::max(std::abs(rm.real()), std::abs(rm.imag()))};
}

QuadrupleResiduals quadruple_residuals(const DescartesQuadruple& q) {
  const DescartesResiduals raw = descartes_residual(q);
  double k2 = 0.0, mm = 0.0;
  for (const Circle& c : q.circles) {
    k2 += c.k * c.k;
    mm += std::norm(c.m);
  }
  QuadrupleResiduals out;
  out.curvature_rel = raw.curvature / std::max(1.0, k2);
  out.center_rel = raw.curv_center / std::max(1.0, mm);
  out.tangency = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      out.tangency = std::max(
          out.tangency, tangency_residual(q.circles[i], q.circles[j]));
  return out;
}

bool satisfies_descartes(const DescartesQuadruple& q, double tol) {
  const QuadrupleResiduals r = quadruple_residuals(q);
  return r.curvature_rel <= tol && r.center_rel <= tol;
}

double tangency_residual(const Circle& a, const Circle& b) {
  const double d = point_distance(a.center(), b.center());
  double expected;
  if (a.k > 0.0 && b.k > 0.0) {
    expected = a.radius() + b.radius();
  } else {
    const Circle& outer = a.k < 0.0 ? a : b;
    const Circle& inner = a.k < 0.0 ? b : a;
    expected = outer.radius() - inner.radius();
  }
  return std::abs(d - expected);
}

void validate_quadruple(const DescartesQuadruple& q, double tol) {
  const QuadrupleResiduals r = quadruple_residuals(q);
  if (r.curvature_rel > tol)
    throw numeric_error(
        fmt("descartes curvature identity violated: relative residual %.3g > %.3g",
            r.curvature_rel, tol));
  if (r.center_rel > tol)
    throw numeric_error(
        fmt("descartes curvature-center identity violated: relative residual %.3g > %.3g",
            r.center_rel, tol));
  if (r.tangency > kTangencyTol)
    throw numeric_error(
        fmt("tangency violated: residual %.3g > %.3g", r.tangency, kTangencyTol));
}

DescartesQuadruple swap_circle(const DescartesQuadruple& q, int index) {
  if (index < 0 || index > 3)
    throw std::out_of_range("swap_circle: index must be in 0..3");
  double ksum = 0.0;
  Complex msum{};
  for (int j = 0; j < 4; ++j) {
    if (j == index) continue;
    ksum += q.circles[j].k;
    msum += q.circles[j].m;
  }
  DescartesQuadruple out = q;
  out.circles[index].k = 2.0 * ksum - q.circles[index].k;
  out.circles[index].m = 2.0 * msum - q.circles[index].m;
  out.last_swapped = index;
  return out;
}

std::array<Circle, 3> solve_root_circles(const GasketSpec& spec) {
  spec.validate();
  const double s01 = std::sin(spec.theta1 / 2.0);
  const double s02 = std::sin(spec.theta2 / 2.0);
  const double s12 = std::sin((spec.theta2 - spec.theta1) / 2.0);
  // With t_a = r_a/(1-r_a), mutual tangency of two circles inscribed at
  // boundary angles with half-gap sine s reduces to t_a*t_b = s^2, giving a
  // closed form for the three radii.
  const std::array<double, 3> t = {s01 * s02 / s12, s01 * s12 / s02, s02 * s12 / s01};
  const std::array<double, 3> angle = {0.0, spec.theta1, spec.theta2};
  std::array<Circle, 3> out;
  for (int i = 0; i < 3; ++i) {
    const double r = t[i] / (1.0 + t[i]);
    if (!(r > 0.0 && r < 1.0) || !std::isfinite(r))
      throw degeneracy_error(fmt("root solve produced invalid radius %.17g", r));
    const double k = 1.0 / r;
    const Complex z = (1.0 - r) * Complex{std::cos(angle[i]), std::sin(angle[i])};
    out[i] = Circle{k, k * z};
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const double res = tangency_residual(out[i], out[j]);
      if (res > kTangencyTol)
        throw numeric_error(
            fmt("root circles %g and %g are not tangent (residual %.3g)",
                double(i), double(j), res));
    }
  return out;
}

DescartesQuadruple root_quadruple(const GasketSpec& spec) {
  const std::array<Circle, 3> inner = solve_root_circles(spec);
  DescartesQuadruple q{{Circle{-1.0, {}}, inner[0], inner[1], inner[2]}, -1};
  // Descend while some swap strictly lowers a curvature; needed only when an
  // angular gap exceeds pi, in which case the inscribed triple is not the
  // curvature-minimal quadruple of its gasket.
  for (int step = 0;; ++step) {
    if (step > 64)
      throw numeric_error("root reduction failed to terminate");
    int arg = -1;
    double best = 0.0;
    for (int i = 0; i < 4; ++i) {
      double ksum = 0.0;
      for (int j = 0; j < 4; ++j)
        if (j != i) ksum += q.circles[j].k;
      const double knew = 2.0 * ksum - q.circles[i].k;
      const double drop = knew - q.circles[i].k;
      const double tol = 1e-9 * std::max(1.0, std::abs(q.circles[i].k));
      if (drop < -tol && drop < best) {
        best = drop;
        arg = i;
      }
    }
    if (arg < 0) break;
    q = swap_circle(q, arg);
    q.last_swapped = -1;
  }
  validate_quadruple(q);
  return q;
}

}  // namespace gasket

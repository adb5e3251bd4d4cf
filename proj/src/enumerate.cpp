#include "gasket/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gasket {

namespace {

void canonical_sort(std::vector<Circle>& v) {
  std::sort(v.begin(), v.end(), [](const Circle& a, const Circle& b) {
    if (a.k != b.k) return a.k < b.k;
    const Complex za = a.center(), zb = b.center();
    if (za.real() != zb.real()) return za.real() < zb.real();
    return za.imag() < zb.imag();
  });
}

struct Frame {
  DescartesQuadruple q;
  int next_child = 0;
};

}  // namespace

CircleSet enumerate_circles(const GasketSpec& spec, double curvature_bound,
                            const EnumerateOptions& opts) {
  if (!std::isfinite(curvature_bound))
    throw std::invalid_argument("enumerate_circles: curvature bound must be finite");
  const double T = curvature_bound;

  CircleSet out;
  out.T = T;
  out.spec = spec;
  out.include_bounding = opts.include_bounding;

  const DescartesQuadruple root = root_quadruple(spec);
  for (const Circle& c : root.circles)
    if (c.k < T && (opts.include_bounding || c.k > 0.0))
      out.circles.push_back(c);

  ValidationStats& vs = out.validation;
  const bool check_all =
      opts.validation == Validation::full ||
      (opts.validation == Validation::sampled && T <= 100.0);
  constexpr std::uint64_t kSampleStride = 100;

  std::vector<Frame> stack;
  stack.push_back({root, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_child == 4) {
      stack.pop_back();
      continue;
    }
    const int i = f.next_child++;
    if (i == f.q.last_swapped) continue;  // reduced words only

    double ksum = 0.0;
    for (int j = 0; j < 4; ++j)
      if (j != i) ksum += f.q.circles[j].k;
    const double kold = f.q.circles[i].k;
    const double knew = 2.0 * ksum - kold;
    if (knew >= T) continue;  // exact prune: curvatures grow along words
    if (knew < kold - 1e-9 * std::max(1.0, std::abs(kold))) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "curvature decreased along a reduced word: %.17g -> %.17g "
                    "(swap %d at depth %zu)",
                    kold, knew, i, stack.size());
      throw numeric_error(buf);
    }

    const DescartesQuadruple child = swap_circle(f.q, i);
    ++vs.quadruples;
    if (opts.validation != Validation::none &&
        (check_all || vs.quadruples % kSampleStride == 0)) {
      const QuadrupleResiduals r = quadruple_residuals(child);
      vs.max_curvature_rel = std::max(vs.max_curvature_rel, r.curvature_rel);
      vs.max_center_rel = std::max(vs.max_center_rel, r.center_rel);
      vs.max_tangency = std::max(vs.max_tangency, r.tangency);
      ++vs.checked;
      if (r.curvature_rel > kDescartesTol || r.center_rel > kDescartesTol ||
          r.tangency > kTangencyTol) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "quadruple invariants violated during enumeration "
                      "(rel residuals %.3g / %.3g, tangency %.3g)",
                      r.curvature_rel, r.center_rel, r.tangency);
        throw numeric_error(buf);
      }
    }
    out.circles.push_back(child.circles[i]);
    stack.push_back({child, 0});
  }

  canonical_sort(out.circles);
  return out;
}

CountRatio count_ratio(const CircleSet& set) {
  if (set.circles.empty())
    throw std::invalid_argument("count_ratio: empty circle set");
  if (!(set.T > 0.0))
    throw std::invalid_argument("count_ratio: curvature bound must be positive");
  const double ratio =
      static_cast<double>(set.count()) / std::pow(set.T, kHausdorffDelta);
  return {set.T, set.count(), ratio};
}

std::vector<Complex> circle_centers(const CircleSet& set) {
  std::vector<Complex> out;
  out.reserve(set.circles.size());
  for (const Circle& c : set.circles) out.push_back(c.center());
  return out;
}

}  // namespace gasket

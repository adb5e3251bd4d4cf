#pragma once

#include <cstdint>
#include <vector>

#include "gasket/geometry.hpp"

namespace gasket {

enum class Validation {
  none,     // trust the recurrence
  sampled,  // every quadruple at T <= 100, every 100th beyond
  full      // every accepted quadruple
};

struct EnumerateOptions {
  bool include_bounding = true;
  Validation validation = Validation::sampled;
};

struct ValidationStats {
  std::uint64_t quadruples = 0;  // accepted swaps during the traversal
  std::uint64_t checked = 0;     // quadruples run through the identity checks
  double max_curvature_rel = 0.0;
  double max_center_rel = 0.0;
  double max_tangency = 0.0;
};

// All circles of the gasket with curvature below T, in canonical order
// (curvature, then center real part, then imaginary part).
struct CircleSet {
  std::vector<Circle> circles;
  double T = 0.0;
  GasketSpec spec{};
  bool include_bounding = true;
  ValidationStats validation{};

  std::size_t count() const { return circles.size(); }
};

// Depth-first traversal of reduced swap words from the root quadruple.
// Each reduced word contributes exactly one new circle, and created
// curvatures never decrease along a word, so cutting a branch the moment a
// curvature reaches T is exact. Deterministic: fixed child order plus the
// final canonical sort.
CircleSet enumerate_circles(const GasketSpec& spec, double curvature_bound,
                            const EnumerateOptions& opts = {});

struct CountRatio {
  double T = 0.0;
  std::uint64_t count = 0;
  double ratio = 0.0;  // count / T^delta
};

CountRatio count_ratio(const CircleSet& set);

std::vector<Complex> circle_centers(const CircleSet& set);

}  // namespace gasket

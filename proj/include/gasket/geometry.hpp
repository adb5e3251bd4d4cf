#pragma once

#include <array>
#include <complex>

#include "gasket/errors.hpp"

namespace gasket {

using Complex = std::complex<double>;

// Hausdorff dimension of the residual set of an Apollonian gasket
// (McMullen's numerical estimate), used to normalize counts and energies.
inline constexpr double kHausdorffDelta = 1.305688;

// relative tolerance for the Descartes quadratic identities
inline constexpr double kDescartesTol = 1e-9;
// tolerance for pairwise tangency residuals
inline constexpr double kTangencyTol = 1e-9;
// minimal angular separation of tangency points on the bounding circle
inline constexpr double kAngleEps = 1e-6;

// Euclidean distance between centers; every distance comparison in the
// library and its tests goes through this one expression so tie-breaking
// at thresholds is reproducible bit for bit.
inline double point_distance(Complex a, Complex b) {
  return std::sqrt(std::norm(a - b));
}

// A circle stored as signed curvature k and curvature*center m = k*z.
// The bounding circle carries k < 0 (unit bounding circle: k = -1, m = 0).
// Storing m instead of z keeps the swap operation a plain linear map.
struct Circle {
  double k = 0.0;
  Complex m{};

  Complex center() const { return m / k; }
  double radius() const { return 1.0 / std::abs(k); }
};

// Four mutually tangent circles. last_swapped is the index replaced by the
// most recent swap (-1 for a freshly constructed root); reduced words never
// re-swap the same index twice in a row.
struct DescartesQuadruple {
  std::array<Circle, 4> circles{};
  int last_swapped = -1;
};

// Tangency angles (radians) of the second and third root circles on the
// unit bounding circle; the first root circle touches at angle 0.
struct GasketSpec {
  double theta1 = 0.0;
  double theta2 = 0.0;

  // angles given as multiples of pi
  static GasketSpec from_pi_multiples(double a, double b);

  // throws degeneracy_error unless 0 < theta1 < theta2 < 2*pi and all three
  // angular gaps are at least kAngleEps
  void validate() const;
};

struct DescartesResiduals {
  double curvature = 0.0;    // |(sum k)^2 - 2 sum k^2|
  double curv_center = 0.0;  // max component of |(sum m)^2 - 2 sum m^2|
};

// raw residuals of the two Descartes quadratic identities
DescartesResiduals descartes_residual(const DescartesQuadruple& q);

// residuals normalized by the natural quadratic scales, plus the worst
// pairwise tangency violation
struct QuadrupleResiduals {
  double curvature_rel = 0.0;
  double center_rel = 0.0;
  double tangency = 0.0;
};
QuadrupleResiduals quadruple_residuals(const DescartesQuadruple& q);

// both quadratic identities within a relative tolerance
bool satisfies_descartes(const DescartesQuadruple& q, double tol = kDescartesTol);

// |distance of centers - expected tangency distance|; external tangency for
// two positively curved circles, internal when one is the bounding circle
double tangency_residual(const Circle& a, const Circle& b);

// throws numeric_error when any identity or tangency is violated
void validate_quadruple(const DescartesQuadruple& q, double tol = kDescartesTol);

// Replace circle `index` by the other solution of the Descartes identities
// sharing the remaining three circles: k' = 2(sum others) - k, same for m.
// An involution; throws std::out_of_range for index outside 0..3.
DescartesQuadruple swap_circle(const DescartesQuadruple& q, int index);

// The three inner circles inscribed in the unit circle with tangency points
// at angles (0, theta1, theta2), each tangent to the other two and to the
// bounding circle. Closed form via half-angle sines.
std::array<Circle, 3> solve_root_circles(const GasketSpec& spec);

// Bounding circle plus the three root circles, descended to the
// curvature-minimal quadruple (a no-op when every angular gap is below pi).
// Postcondition: no swap decreases the replaced curvature (ties occur in
// mirror-symmetric configurations).
DescartesQuadruple root_quadruple(const GasketSpec& spec);

}  // namespace gasket

#pragma once

#include "expurg/curves.hpp"

#include <vector>

namespace expurg {

// Additive Gaussian channel with a spherical codeword ensemble: input power
// S, noise variance sigma2. The Bhattacharyya distance (x-x')^2 / (8 sigma^2)
// is the relevant distortion and s* = 1/2 throughout.
struct GaussianParams {
  double S = 1.0;
  double sigma2 = 1.0;
};

// R(D) = (1/2) ln[ S / (8 sigma^2 D (1 - 2 sigma^2 D / S)) ], valid on
// 0 < D <= S/(4 sigma^2), where it hits 0. Throws DomainError outside.
double gaussian_R_of_D(const GaussianParams& p, double D);

// D(R) = S (1 - sqrt(1 - e^{-2R})) / (4 sigma^2), the inverse of R(D).
double gaussian_D_of_R(const GaussianParams& p, double R);

// Curvy part D(R) up to the slope -1 rate, tangent line beyond, zero past
// the axis crossing. R1 is solved numerically from D'(R) = -1 by bisection
// on a central finite difference, which keeps the module honest against
// transcription slips in the closed form.
ExponentCurve gaussian_exponent_curve(const GaussianParams& p,
                                      const std::vector<double>& R_grid);

// The slope -1 rate itself (exposed for tests and the quantized pipeline).
double gaussian_critical_rate(const GaussianParams& p);

}  // namespace expurg

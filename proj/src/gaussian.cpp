#include "expurg/gaussian.hpp"

#include "expurg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace expurg {

namespace {

void check_params(const GaussianParams& p) {
  if (!(p.S > 0.0) || !(p.sigma2 > 0.0))
    throw DomainError("Gaussian channel needs S > 0 and sigma2 > 0");
}

double numeric_slope(const GaussianParams& p, double R) {
  const double h = 1e-6 * std::max(1.0, R);
  return (gaussian_D_of_R(p, R + h) - gaussian_D_of_R(p, std::max(0.0, R - h))) /
         (R + h - std::max(0.0, R - h));
}

}  // namespace

double gaussian_R_of_D(const GaussianParams& p, double D) {
  check_params(p);
  if (!(D > 0.0))
    throw DomainError("R(D) needs D > 0, got " + std::to_string(D));
  const double shrink = 1.0 - 2.0 * p.sigma2 * D / p.S;
  if (!(shrink > 0.0))
    throw DomainError("R(D) undefined for 2 sigma^2 D / S >= 1");
  const double arg = p.S / (8.0 * p.sigma2 * D * shrink);
  // the log argument reaches 1 at D = S/(4 sigma^2): rate floor
  if (arg < 1.0) return 0.0;
  return 0.5 * std::log(arg);
}

double gaussian_D_of_R(const GaussianParams& p, double R) {
  check_params(p);
  if (!(R >= 0.0))
    throw DomainError("D(R) needs R >= 0, got " + std::to_string(R));
  return p.S * (1.0 - std::sqrt(-std::expm1(-2.0 * R))) / (4.0 * p.sigma2);
}

double gaussian_critical_rate(const GaussianParams& p) {
  check_params(p);
  double lo = 1e-6, hi = 10.0;
  if (numeric_slope(p, lo) >= -1.0) return 0.0;
  if (numeric_slope(p, hi) <= -1.0) return hi;
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    (numeric_slope(p, mid) <= -1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ExponentCurve gaussian_exponent_curve(const GaussianParams& p,
                                      const std::vector<double>& R_grid) {
  check_params(p);

  ExponentCurve curve;
  curve.kind = CurveKind::gaussian;
  curve.R1 = gaussian_critical_rate(p);
  curve.value_at_R1 = gaussian_D_of_R(p, curve.R1);
  curve.zero_rate_value = p.S / (4.0 * p.sigma2);

  curve.points.reserve(R_grid.size());
  for (double R : R_grid) {
    CurvePoint pt;
    pt.R = R;
    pt.s_star = 0.5;
    if (R < curve.R1) {
      pt.unclamped = gaussian_D_of_R(p, R);
      pt.rho_star = std::max(1.0, -numeric_slope(p, R));
    } else {
      pt.unclamped = curve.value_at_R1 + curve.R1 - R;
      pt.rho_star = 1.0;
    }
    pt.value = std::max(0.0, pt.unclamped);
    pt.phase = classify_phase(curve, R);
    curve.points.push_back(pt);
  }
  return curve;
}

}  // namespace expurg

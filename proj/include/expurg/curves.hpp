#pragma once

#include "expurg/exponents.hpp"
#include "expurg/rate_distortion.hpp"

#include <string>
#include <vector>

namespace expurg {

// REM phase of a rate point: curvy region (subexponentially many dominant
// neighbors), straight-line region, or past the zero crossing.
enum class Phase { glassy, paramagnetic, zero };

enum class CurveKind { gallager, ckm_bhatt, chernoff_new, gaussian };

struct CurvePoint {
  double R = 0.0;
  double value = 0.0;  // exponent, clamped at 0
  double rho_star = 0.0;
  double s_star = 0.5;
  Phase phase = Phase::zero;
  double unclamped = 0.0;  // pre-clamp optimum, kept for tangency diagnostics
  bool diverged = false;
};

struct ExponentCurve {
  CurveKind kind = CurveKind::gallager;
  std::vector<CurvePoint> points;
  double R1 = 0.0;
  double value_at_R1 = 0.0;
  double zero_rate_value = 0.0;  // extended real; +inf for unbounded distance

  double zero_crossing() const { return R1 + value_at_R1; }
};

struct CurveOptions {
  double rho_max = 1e4;
  double tol = 1e-9;
  int s_grid = 33;  // odd, so s = 1/2 is always a grid point
};

std::string to_string(Phase p);
std::string to_string(CurveKind k);

std::vector<double> linear_grid(double lo, double hi, int count);

// 201 rates from 0 to 1.2 * (R1 + value(R1)), re-estimated from a pilot pass
// so both phases and the zero region are covered.
std::vector<double> default_rate_grid(const ExponentInputs& in, CurveKind kind,
                                      const CurveOptions& opts = {});

// sup_{rho >= 1} [E_G(rho, 1/2, Q) - rho R] per grid rate; s pinned at 1/2
// where the Gallager form is maximal.
ExponentCurve curve_gallager(const ExponentInputs& in,
                             const std::vector<double>& R_grid,
                             const CurveOptions& opts = {});

// The rho-constrained distortion-rate sweep at s = 1/2 (the generalized
// expurgated curve with Bhattacharyya distance).
ExponentCurve curve_ckm(const ExponentInputs& in,
                        const std::vector<double>& R_grid,
                        const CurveOptions& opts = {});

// Nested optimization sup_{rho >= 1} sup_{s in [0,1]}: 33-point s grid, then
// golden refinement of the best bracket, rho maximized inside each s.
ExponentCurve curve_chernoff_new(const ExponentInputs& in,
                                 const std::vector<double>& R_grid,
                                 const CurveOptions& opts = {});

// E_1(R, rho) via its closed piecewise form: the slope -1/rho tangent line
// below R_Q, switching to D_Q(R) once R passes the tangency rate. Used to
// check that rho -> inf is the best choice for the high-information branch.
double e1_diagnostic(const ExponentInputs& in, double s, double R, double rho);

Phase classify_phase(const ExponentCurve& curve, double R);

}  // namespace expurg

#include "expurg/optimize.hpp"

#include "expurg/errors.hpp"
#include "expurg/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace expurg {

namespace {

constexpr int kRhoGridPoints = 64;
constexpr double kDivergenceSlope = 1e-6;

double checked_eval(const Objective& f, double x) {
  const double v = f(x);
  if (std::isnan(v))
    throw NonFiniteObjective("objective is NaN at " + std::to_string(x));
  return v;
}

// Golden-section ascent on [lo, hi]; returns the interior candidate only,
// callers merge it with endpoint/grid candidates.
OptResult golden_core(const Objective& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = checked_eval(f, c);
  double fd = checked_eval(f, d);

  // width shrinks by 0.618 per step; 250 steps cover any double range down
  // to denormals, so this caps only degenerate tolerances
  int iter = 0;
  while (b - a > tol && ++iter <= 250) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = checked_eval(f, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = checked_eval(f, d);
    }
  }

  OptResult r;
  if (fc >= fd) {
    r.arg = c;
    r.value = fc;
  } else {
    r.arg = d;
    r.value = fd;
  }
  return r;
}

// strictly better wins; ties keep the incumbent (endpoints are seeded first)
void take_better(OptResult& best, double arg, double value) {
  if (value > best.value) {
    best.value = value;
    best.arg = arg;
  }
}

}  // namespace

OptResult maximize_on_interval(const Objective& f, double lo, double hi,
                               double tol) {
  OptResult best;
  best.arg = lo;
  best.value = checked_eval(f, lo);
  take_better(best, hi, checked_eval(f, hi));
  if (hi - lo > tol) {
    const OptResult inner = golden_core(f, lo, hi, tol);
    take_better(best, inner.arg, inner.value);
  }
  best.at_boundary = (best.arg == lo || best.arg == hi);
  return best;
}

OptResult maximize_concave_unit(const Objective& f, double tol) {
  return maximize_on_interval(f, 0.0, 1.0, tol);
}

OptResult maximize_grid_then_refine(const Objective& f, double lo, double hi,
                                    int grid_points, bool log_spaced,
                                    double tol) {
  grid_points = std::max(grid_points, 2);
  std::vector<double> xs(static_cast<size_t>(grid_points));
  if (log_spaced) {
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < grid_points; ++i)
      xs[static_cast<size_t>(i)] =
          std::exp(llo + (lhi - llo) * i / (grid_points - 1));
  } else {
    for (int i = 0; i < grid_points; ++i)
      xs[static_cast<size_t>(i)] = lo + (hi - lo) * i / (grid_points - 1);
  }
  xs.front() = lo;
  xs.back() = hi;

  std::vector<double> fs(xs.size());
  size_t best_i = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    fs[i] = checked_eval(f, xs[i]);
    if (fs[i] > fs[best_i]) best_i = i;
  }

  OptResult best;
  best.arg = xs[best_i];
  best.value = fs[best_i];

  const double bl = best_i > 0 ? xs[best_i - 1] : xs[best_i];
  const double br = best_i + 1 < xs.size() ? xs[best_i + 1] : xs[best_i];
  if (br - bl > tol) {
    const OptResult inner = golden_core(f, bl, br, tol);
    take_better(best, inner.arg, inner.value);
  }
  // endpoints win ties so that a boundary supremum is reported exactly there
  if (fs.front() >= best.value) {
    best.value = fs.front();
    best.arg = xs.front();
  }
  if (fs.back() > best.value) {
    best.value = fs.back();
    best.arg = xs.back();
  }

  best.at_boundary = (best.arg == lo || best.arg == hi);
  best.diverged =
      (best.arg == hi) &&
      (fs[fs.size() - 1] - fs[fs.size() - 2] >
       kDivergenceSlope * (xs[xs.size() - 1] - xs[xs.size() - 2]));
  return best;
}

OptResult maximize_over_rho(const Objective& g, double rho_max, double tol) {
  return maximize_grid_then_refine(g, 1.0, rho_max, kRhoGridPoints, true, tol);
}

OptResult maximize_over_rho_from(const Objective& g, double rho_lo,
                                 double rho_max, double tol) {
  return maximize_grid_then_refine(g, rho_lo, rho_max, kRhoGridPoints, true,
                                   tol);
}

}  // namespace expurg

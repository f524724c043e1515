#pragma once

#include <functional>

namespace expurg {

// Result of a 1-D maximization. When diverged is set, arg equals the search
// cap and value is a certified lower bound on the supremum.
struct OptResult {
  double value = 0.0;
  double arg = 0.0;
  bool at_boundary = false;
  bool diverged = false;
};

using Objective = std::function<double(double)>;

// Golden-section maximization of a concave f on [0, 1]. Endpoints are
// evaluated explicitly and win ties, so a boundary maximum is reported at
// the exact boundary. Throws NonFiniteObjective on NaN.
OptResult maximize_concave_unit(const Objective& f, double tol = 1e-9);

// Golden-section maximization on [lo, hi] without a grid pass.
OptResult maximize_on_interval(const Objective& f, double lo, double hi,
                               double tol = 1e-9);

// Coarse grid scan (log-spaced when log_spaced, else linear) followed by
// golden-section refinement inside the bracket around the best grid point.
// The result is never below the best grid value. Unimodality is not assumed;
// the grid guards the refinement.
OptResult maximize_grid_then_refine(const Objective& f, double lo, double hi,
                                    int grid_points, bool log_spaced,
                                    double tol = 1e-9);

// sup over rho in [1, rho_max] with divergence detection: flagged when the
// grid maximum sits at rho_max and the tail of the objective is still
// climbing at a slope above 1e-6 per unit rho (an asymptote-approaching
// objective has tail slope ~ c/rho^2, far below that).
OptResult maximize_over_rho(const Objective& g, double rho_max = 1e4,
                            double tol = 1e-9);

// Same machinery on [rho_lo, rho_max] for the unconstrained distortion-rate
// search (rho_lo close to 0).
OptResult maximize_over_rho_from(const Objective& g, double rho_lo,
                                 double rho_max, double tol = 1e-9);

}  // namespace expurg

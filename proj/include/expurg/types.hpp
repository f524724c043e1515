#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace expurg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Extended-real sentinel. Infinite distances are represented exactly by this
// value, never by a large finite float.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_pos_inf(double v) { return std::isinf(v) && v > 0.0; }

// exp(-d / rho) with the sentinel convention: exactly 0 for d = +inf,
// exactly 1 for d = 0. Requires rho > 0.
inline double exp_neg_div(double d, double rho) {
  if (is_pos_inf(d)) return 0.0;
  if (d == 0.0) return 1.0;
  return std::exp(-d / rho);
}

// exp(-beta * d) with the same convention, valid for beta >= 0. The d = +inf,
// beta = 0 corner takes the limit beta -> 0+, i.e. 0, which closes the
// Legendre objective continuously.
inline double exp_neg_mul(double d, double beta) {
  if (is_pos_inf(d)) return 0.0;
  if (d == 0.0) return 1.0;
  return std::exp(-beta * d);
}

}  // namespace expurg

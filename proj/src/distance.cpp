#include "expurg/distance.hpp"

#include "expurg/errors.hpp"
#include "expurg/numeric.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace expurg {

DistanceMatrix chernoff_distance_matrix(const Channel& ch, double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw DomainError("Chernoff parameter s = " + std::to_string(s) +
                      " outside [0, 1]");

  const Index nx = ch.input_size();
  const Index ny = ch.output_size();

  Matrix log_p(nx, ny);
  for (Index x = 0; x < nx; ++x)
    for (Index y = 0; y < ny; ++y)
      log_p(x, y) = ch.transition(x, y) > 0.0 ? std::log(ch.transition(x, y))
                                              : -kInf;

  DistanceMatrix dm{s, Matrix(nx, nx)};
  std::vector<double> terms;
  terms.reserve(static_cast<size_t>(ny));
  for (Index x = 0; x < nx; ++x) {
    for (Index xp = 0; xp < nx; ++xp) {
      if (xp == x) {
        // p^{1-s} p^s = p, and the row is stochastic: exactly zero
        dm.d(x, x) = 0.0;
        continue;
      }
      terms.clear();
      for (Index y = 0; y < ny; ++y) {
        // contributes iff both conditionals are positive (limit convention
        // at s = 0 and s = 1)
        if (log_p(x, y) == -kInf || log_p(xp, y) == -kInf) continue;
        terms.push_back((1.0 - s) * log_p(x, y) + s * log_p(xp, y));
      }
      const double lse = log_sum_exp(std::span<const double>(terms));
      if (lse == -kInf) {
        dm.d(x, xp) = kInf;
      } else {
        // Hoelder gives sum <= 1, so the distance is nonnegative up to
        // rounding; clip the rounding residue
        dm.d(x, xp) = std::max(0.0, -lse);
      }
    }
  }
  return dm;
}

double expected_distance(const DistanceMatrix& dm, const InputDistribution& q) {
  KahanSum acc;
  for (Index x = 0; x < dm.size(); ++x) {
    for (Index xp = 0; xp < dm.size(); ++xp) {
      const double w = q.probs(x) * q.probs(xp);
      if (w == 0.0) continue;
      if (is_pos_inf(dm.d(x, xp))) return kInf;
      acc.add(w * dm.d(x, xp));
    }
  }
  return acc.value();
}

}  // namespace expurg

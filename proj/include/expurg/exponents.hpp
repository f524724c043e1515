#pragma once

#include "expurg/channel.hpp"
#include "expurg/distance.hpp"

#include <map>
#include <mutex>

namespace expurg {

// Channel + input distribution bundle with a memoized distance matrix per
// Chernoff parameter. Rebuilding d_s dominates the cost of the exponent
// functions, and the s-optimizers revisit the same s values, so the cache
// pays for itself immediately. Guarded for concurrent readers.
class ExponentInputs {
 public:
  ExponentInputs(Channel ch, InputDistribution q);

  const Channel& channel() const { return ch_; }
  const InputDistribution& q() const { return q_; }
  const DistanceMatrix& distance(double s) const;

 private:
  Channel ch_;
  InputDistribution q_;
  mutable std::map<double, DistanceMatrix> cache_;
  mutable std::mutex mutex_;
};

// E_0(rho, Q) = -ln sum_y [sum_x q(x) p(y|x)^{1/(1+rho)}]^{1+rho}, rho >= 0.
double gallager_E0(double rho, const ExponentInputs& in);

// sup over rho in [0, 1] of E_0(rho, Q) - rho R.
double random_coding_exponent(double R, const ExponentInputs& in);

// -rho ln sum_{x,x'} q(x) q(x') exp(-d_s(x,x')/rho); infinite distances
// contribute 0. The s = 1/2 case is Gallager's expurgated E_x(rho, Q).
double gallager_EG(double rho, double s, const ExponentInputs& in);

// -rho sum_x q(x) ln sum_{x'} q(x') exp(-d_s(x,x')/rho); the average over x
// sits outside the logarithm, which is the whole difference from gallager_EG
// and the source of the Jensen gap.
double ckm_E(double rho, double s, const ExponentInputs& in);

// Same functional on a bare distance matrix; ckm_E delegates here and the
// rate-distortion module reuses it as the Legendre objective in rho.
double tilted_distortion_value(const InputDistribution& q,
                               const DistanceMatrix& dm, double rho);

}  // namespace expurg

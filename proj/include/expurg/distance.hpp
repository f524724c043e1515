#pragma once

#include "expurg/channel.hpp"
#include "expurg/types.hpp"

namespace expurg {

// Pairwise Chernoff distances d_s(x, x') = -ln sum_y p(y|x)^{1-s} p(y|x')^s
// for a fixed channel and parameter s in [0, 1]. Entries live in [0, +inf];
// +inf marks disjoint conditional supports.
struct DistanceMatrix {
  double s = 0.5;
  Matrix d;

  Index size() const { return d.rows(); }
};

// Computes d_s in the log domain. Fractional powers of zero probabilities
// follow the limit convention: p^0 is 1 when p > 0 and 0 when p = 0, so a
// y-term contributes iff both conditionals are positive. s = 1/2 is the
// Bhattacharyya distance.
DistanceMatrix chernoff_distance_matrix(const Channel& ch, double s);

// sum_{x,x'} q(x) q(x') d(x,x'); +inf as soon as an infinite entry carries
// positive weight. This is the zero-rate limit of the exponent curves.
double expected_distance(const DistanceMatrix& dm, const InputDistribution& q);

}  // namespace expurg

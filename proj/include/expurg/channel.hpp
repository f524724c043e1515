#pragma once

#include "expurg/types.hpp"

namespace expurg {

// Discrete memoryless channel: row-stochastic |X| x |Y| transition matrix,
// entry (x, y) = p(y|x). Immutable after validation.
struct Channel {
  Matrix transition;

  Index input_size() const { return transition.rows(); }
  Index output_size() const { return transition.cols(); }
};

// Distribution q(x) over the input alphabet.
struct InputDistribution {
  Vector probs;

  Index size() const { return probs.size(); }
};

// Accepts a nonnegative matrix whose rows sum to 1 within 1e-12; such rows
// are renormalized exactly. Throws NegativeEntry / NonStochasticRow.
// Requires at least 2 inputs and 1 output.
Channel validate_channel(const Matrix& transition);

// Same contract for an input distribution (nonnegative, total mass 1 within
// 1e-12, at least 2 symbols). Throws NegativeEntry / NotADistribution.
InputDistribution validate_input_distribution(const Vector& probs);

InputDistribution uniform_input(Index k);

}  // namespace expurg

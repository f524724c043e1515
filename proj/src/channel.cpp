#include "expurg/channel.hpp"

#include "expurg/errors.hpp"

#include <cmath>
#include <string>

namespace expurg {

namespace {
constexpr double kStochasticTol = 1e-12;
}

Channel validate_channel(const Matrix& transition) {
  if (transition.rows() < 2)
    throw NonStochasticRow("channel needs at least 2 input symbols, got " +
                           std::to_string(transition.rows()));
  if (transition.cols() < 1)
    throw NonStochasticRow("channel needs at least 1 output symbol");

  Channel ch{transition};
  for (Index x = 0; x < transition.rows(); ++x) {
    for (Index y = 0; y < transition.cols(); ++y) {
      const double p = transition(x, y);
      if (!(p >= 0.0))
        throw NegativeEntry("p(" + std::to_string(y) + "|" + std::to_string(x) +
                            ") = " + std::to_string(p));
    }
    const double row_sum = transition.row(x).sum();
    if (std::abs(row_sum - 1.0) >= kStochasticTol)
      throw NonStochasticRow("row " + std::to_string(x) + " sums to " +
                             std::to_string(row_sum));
    if (row_sum != 1.0) ch.transition.row(x) /= row_sum;
  }
  return ch;
}

InputDistribution validate_input_distribution(const Vector& probs) {
  if (probs.size() < 2)
    throw NotADistribution("input distribution needs at least 2 symbols");
  InputDistribution q{probs};
  for (Index x = 0; x < probs.size(); ++x) {
    if (!(probs(x) >= 0.0))
      throw NegativeEntry("q(" + std::to_string(x) + ") = " +
                          std::to_string(probs(x)));
  }
  const double total = probs.sum();
  if (std::abs(total - 1.0) >= kStochasticTol)
    throw NotADistribution("mass sums to " + std::to_string(total));
  if (total != 1.0) q.probs /= total;
  return q;
}

InputDistribution uniform_input(Index k) {
  return InputDistribution{Vector::Constant(k, 1.0 / static_cast<double>(k))};
}

}  // namespace expurg

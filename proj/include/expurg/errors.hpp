#pragma once

#include <stdexcept>
#include <string>

namespace expurg {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Channel / distribution validation
struct NegativeEntry : Error {
  using Error::Error;
};
struct NonStochasticRow : Error {
  using Error::Error;
};
struct NotADistribution : Error {
  using Error::Error;
};

// Optimizer objective returned NaN
struct NonFiniteObjective : Error {
  using Error::Error;
};

// rq_of_d: objective still decreasing at beta_max, requested distortion is
// below the floor of the problem
struct DistortionInfeasible : Error {
  using Error::Error;
};

struct NoFiniteR1 : Error {
  using Error::Error;
};

// joint_oracle supports |X| <= 3 only
struct AlphabetTooLarge : Error {
  using Error::Error;
};

// argument outside a closed-form domain (Gaussian R(D), Chernoff s, ...)
struct DomainError : Error {
  using Error::Error;
};

}  // namespace expurg

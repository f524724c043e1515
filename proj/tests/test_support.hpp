#pragma once

#include "expurg/channel.hpp"
#include "expurg/exponents.hpp"

#include <random>

namespace testsupport {

// full-support random channel: entries drawn from [0.05, 1], rows normalized
inline expurg::Channel random_channel(std::mt19937_64& rng, int nx, int ny) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  expurg::Matrix t(nx, ny);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) t(x, y) = u(rng);
    t.row(x) /= t.row(x).sum();
  }
  return expurg::validate_channel(t);
}

inline expurg::InputDistribution random_input(std::mt19937_64& rng, int nx) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  expurg::Vector q(nx);
  for (int x = 0; x < nx; ++x) q(x) = u(rng);
  q /= q.sum();
  return expurg::validate_input_distribution(q);
}

inline expurg::Channel bsc(double p) {
  expurg::Matrix t(2, 2);
  t << 1.0 - p, p, p, 1.0 - p;
  return expurg::validate_channel(t);
}

inline expurg::Channel equal_rows_channel(int nx, int ny) {
  expurg::Matrix t(nx, ny);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) t(x, y) = 1.0 / ny;
  return expurg::validate_channel(t);
}

inline expurg::Channel identity_channel(int k) {
  expurg::Matrix t = expurg::Matrix::Identity(k, k);
  return expurg::validate_channel(t);
}

// the binary asymmetric instance used as the golden regression target:
// p(0|0) = p(1|0) = 0.5, p(0|1) = 1e-10, q(1) = 0.1
inline expurg::ExponentInputs example1() {
  expurg::Matrix t(2, 2);
  t << 0.5, 0.5, 1e-10, 1.0 - 1e-10;
  expurg::Vector q(2);
  q << 0.9, 0.1;
  return expurg::ExponentInputs(expurg::validate_channel(t),
                                expurg::validate_input_distribution(q));
}

}  // namespace testsupport

#pragma once

#include "expurg/types.hpp"

#include <cmath>
#include <span>

namespace expurg {

// log(sum_i exp(v[i])) with max-shift; -inf entries drop out, an empty or
// all -inf input yields -inf.
inline double log_sum_exp(std::span<const double> v) {
  double m = -kInf;
  for (double x : v)
    if (x > m) m = x;
  if (m == -kInf) return -kInf;
  double sum = 0.0;
  for (double x : v)
    if (x != -kInf) sum += std::exp(x - m);
  return m + std::log(sum);
}

template <typename Derived>
double log_sum_exp(const Eigen::DenseBase<Derived>& v) {
  double m = -kInf;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) > m) m = v(i);
  if (m == -kInf) return -kInf;
  double sum = 0.0;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != -kInf) sum += std::exp(v(i) - m);
  return m + std::log(sum);
}

// Kahan compensated accumulator.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

}  // namespace expurg

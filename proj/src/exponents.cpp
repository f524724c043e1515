#include "expurg/exponents.hpp"

#include "expurg/errors.hpp"
#include "expurg/numeric.hpp"
#include "expurg/optimize.hpp"

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace expurg {

ExponentInputs::ExponentInputs(Channel ch, InputDistribution q)
    : ch_(std::move(ch)), q_(std::move(q)) {
  if (q_.size() != ch_.input_size())
    throw NotADistribution("input distribution has " +
                           std::to_string(q_.size()) + " symbols, channel has " +
                           std::to_string(ch_.input_size()));
}

const DistanceMatrix& ExponentInputs::distance(double s) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(s);
  if (it == cache_.end())
    it = cache_.emplace(s, chernoff_distance_matrix(ch_, s)).first;
  return it->second;
}

double gallager_E0(double rho, const ExponentInputs& in) {
  if (!(rho >= 0.0))
    throw DomainError("gallager_E0 needs rho >= 0, got " + std::to_string(rho));

  const Channel& ch = in.channel();
  const Vector& q = in.q().probs;
  const double expo = 1.0 / (1.0 + rho);

  KahanSum outer;
  for (Index y = 0; y < ch.output_size(); ++y) {
    KahanSum inner;
    for (Index x = 0; x < ch.input_size(); ++x) {
      const double p = ch.transition(x, y);
      if (q(x) == 0.0 || p == 0.0) continue;
      inner.add(q(x) * std::pow(p, expo));
    }
    if (inner.value() > 0.0)
      outer.add(std::pow(inner.value(), 1.0 + rho));
  }
  return -std::log(outer.value()) + 0.0;
}

double random_coding_exponent(double R, const ExponentInputs& in) {
  const auto objective = [&](double rho) {
    return gallager_E0(rho, in) - rho * R;
  };
  return maximize_concave_unit(objective).value;
}

double gallager_EG(double rho, double s, const ExponentInputs& in) {
  if (!(rho > 0.0))
    throw DomainError("gallager_EG needs rho > 0, got " + std::to_string(rho));

  const Vector& q = in.q().probs;
  const Matrix& d = in.distance(s).d;

  // linear-domain compensated sum; exp(-d/rho) is exactly 1 at d = 0 and
  // exactly 0 at d = +inf, so uninformative instances stay at exactly 0
  KahanSum acc;
  for (Index x = 0; x < q.size(); ++x)
    for (Index xp = 0; xp < q.size(); ++xp)
      if (q(x) != 0.0 && q(xp) != 0.0)
        acc.add(q(x) * q(xp) * exp_neg_div(d(x, xp), rho));
  if (acc.value() > 0.0) return -rho * std::log(acc.value()) + 0.0;

  // underflow fallback (see tilted_distortion_value)
  std::vector<double> log_terms;
  for (Index x = 0; x < q.size(); ++x)
    for (Index xp = 0; xp < q.size(); ++xp)
      if (q(x) != 0.0 && q(xp) != 0.0 && !is_pos_inf(d(x, xp)))
        log_terms.push_back(std::log(q(x)) + std::log(q(xp)) -
                            d(x, xp) / rho);
  const double lse = log_sum_exp(std::span<const double>(log_terms));
  if (lse == -kInf) return kInf;  // every pair has disjoint supports
  return -rho * lse;
}

double tilted_distortion_value(const InputDistribution& q,
                               const DistanceMatrix& dm, double rho) {
  if (!(rho > 0.0))
    throw DomainError("tilted value needs rho > 0, got " + std::to_string(rho));

  const Vector& p = q.probs;
  const Matrix& d = dm.d;

  KahanSum acc;
  std::vector<double> log_terms;
  for (Index x = 0; x < p.size(); ++x) {
    if (p(x) == 0.0) continue;
    KahanSum inner;
    for (Index xp = 0; xp < p.size(); ++xp)
      if (p(xp) != 0.0) inner.add(p(xp) * exp_neg_div(d(x, xp), rho));
    double inner_log;
    if (inner.value() > 0.0) {
      inner_log = std::log(inner.value());
    } else {
      // underflow fallback; only reachable for measures whose entire row
      // sits above 745*rho (a channel-derived row has d(x,x) = 0)
      log_terms.clear();
      for (Index xp = 0; xp < p.size(); ++xp)
        if (p(xp) != 0.0 && !is_pos_inf(d(x, xp)))
          log_terms.push_back(std::log(p(xp)) - d(x, xp) / rho);
      inner_log = log_sum_exp(std::span<const double>(log_terms));
      if (inner_log == -kInf) return kInf;
    }
    acc.add(p(x) * inner_log);
  }
  return -rho * acc.value() + 0.0;
}

double ckm_E(double rho, double s, const ExponentInputs& in) {
  return tilted_distortion_value(in.q(), in.distance(s), rho);
}

}  // namespace expurg

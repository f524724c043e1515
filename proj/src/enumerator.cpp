#include "expurg/enumerator.hpp"

#include "expurg/errors.hpp"
#include "expurg/numeric.hpp"
#include "expurg/types.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace expurg {

namespace {

constexpr long long kExactCap = 1 << 20;
constexpr double kLogUnderflow = -690.0;  // ln(1e-300)

void check_model(const EnumeratorModel& m) {
  if (m.n < 1) throw DomainError("blocklength must be >= 1");
  if (!(m.rho >= 1.0)) throw DomainError("moment order rho must be >= 1");
  if (!(m.R >= 0.0) || !(m.I >= 0.0))
    throw DomainError("R and I must be nonnegative");
  if (static_cast<double>(m.n) * m.R > 42.0)
    throw DomainError("nR too large: codebook size overflows");
  if (m.num_codewords() < 2)
    throw DomainError("codebook has fewer than 2 codewords");
}

double branch_exponent(double R, double I, double rho) {
  return R < I ? R - I : (R - I) / rho;
}

MomentEstimate exact_binomial(const EnumeratorModel& m) {
  const long long trials = m.num_codewords() - 1;
  if (m.num_codewords() > kExactCap)
    throw DomainError("exact mode needs M <= 2^20; use monte_carlo for M = " +
                      std::to_string(m.num_codewords()));

  const double log_p = -static_cast<double>(m.n) * m.I;
  const double log_1p = log_p < -1e-12
                            ? std::log1p(-std::exp(log_p))
                            : -kInf;  // p = 1: all mass at k = trials
  const double lg_total = std::lgamma(static_cast<double>(trials) + 1.0);

  // log-domain terms k^{1/rho} pmf(k), k >= 1
  double max_term = -kInf;
  std::vector<double> terms;
  terms.reserve(static_cast<size_t>(trials));
  for (long long k = 1; k <= trials; ++k) {
    const double kk = static_cast<double>(k);
    double lpmf;
    if (log_1p == -kInf) {
      lpmf = (k == trials) ? 0.0 : -kInf;
    } else {
      lpmf = lg_total - std::lgamma(kk + 1.0) -
             std::lgamma(static_cast<double>(trials - k) + 1.0) + kk * log_p +
             static_cast<double>(trials - k) * log_1p;
    }
    const double t = std::log(kk) / m.rho + lpmf;
    terms.push_back(t);
    if (t > max_term) max_term = t;
  }

  MomentEstimate out;
  if (max_term == -kInf) {
    out.exponent = -kInf;
    out.underflow = true;
    return out;
  }
  KahanSum acc;
  for (double t : terms)
    if (t != -kInf) acc.add(std::exp(t - max_term));
  const double log_moment = max_term + std::log(acc.value());
  out.exponent = log_moment / static_cast<double>(m.n);
  out.underflow = log_moment < kLogUnderflow;
  return out;
}

MomentEstimate monte_carlo(const EnumeratorModel& m, long long trials,
                           std::uint64_t seed) {
  if (trials < 10000)
    throw DomainError("monte_carlo needs trials >= 10^4, got " +
                      std::to_string(trials));

  const long long count = m.num_codewords() - 1;
  const double p = std::exp(-static_cast<double>(m.n) * m.I);
  std::mt19937_64 rng(seed);
  std::binomial_distribution<long long> binom(count, p);

  KahanSum acc;
  for (long long t = 0; t < trials; ++t) {
    const long long k = binom(rng);
    if (k > 0) acc.add(std::pow(static_cast<double>(k), 1.0 / m.rho));
  }
  const double mean = acc.value() / static_cast<double>(trials);

  MomentEstimate out;
  if (mean <= 0.0) {
    out.exponent = -kInf;
    out.underflow = true;
    return out;
  }
  out.exponent = std::log(mean) / static_cast<double>(m.n);
  out.underflow = mean < 1e-300;
  return out;
}

}  // namespace

long long EnumeratorModel::num_codewords() const {
  return std::llround(std::exp(static_cast<double>(n) * R));
}

double EnumeratorModel::effective_rate() const {
  return std::log(static_cast<double>(num_codewords() - 1)) /
         static_cast<double>(n);
}

double moment_exponent_theory(const EnumeratorModel& m) {
  check_model(m);
  return branch_exponent(m.R, m.I, m.rho);
}

double moment_exponent_theory_effective(const EnumeratorModel& m) {
  check_model(m);
  return branch_exponent(m.effective_rate(), m.I, m.rho);
}

MomentEstimate moment_exponent_empirical(const EnumeratorModel& m,
                                         MomentMode mode, long long trials,
                                         std::uint64_t seed) {
  check_model(m);
  return mode == MomentMode::exact_binomial ? exact_binomial(m)
                                            : monte_carlo(m, trials, seed);
}

RateFunction make_rate_function(std::function<double(double)> evaluator,
                                double delta, double scan_cap) {
  if (!(delta > 0.0)) throw DomainError("delta must be positive");
  RateFunction rf;
  rf.delta = delta;
  double d = delta;
  long long steps = 0;
  while (d < scan_cap && steps < 10'000'000) {
    const double r = evaluator(d);
    if (r <= 1e-9) break;
    d += delta;
    ++steps;
  }
  rf.D_max = d + delta;
  rf.evaluator = std::move(evaluator);
  return rf;
}

bool rate_function_shape_ok(const RateFunction& rf, int samples) {
  std::vector<double> vals;
  vals.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double d = rf.D_max * (i + 1) / static_cast<double>(samples);
    vals.push_back(rf.evaluator(d));
  }
  for (size_t i = 0; i + 1 < vals.size(); ++i) {
    if (is_pos_inf(vals[i]) || is_pos_inf(vals[i + 1])) continue;
    if (vals[i + 1] > vals[i] + 1e-9) return false;  // must not increase
  }
  for (size_t i = 0; i + 2 < vals.size(); ++i) {
    if (is_pos_inf(vals[i]) || is_pos_inf(vals[i + 2])) continue;
    if (0.5 * (vals[i] + vals[i + 2]) < vals[i + 1] - 1e-9) return false;
  }
  return true;
}

QuantizedExponents quantized_exponents(const RateFunction& rf, double R,
                                       double rho) {
  if (!(R >= 0.0)) throw DomainError("quantized_exponents needs R >= 0");
  if (!(rho >= 1.0)) throw DomainError("quantized_exponents needs rho >= 1");

  const long long levels =
      static_cast<long long>(std::ceil(rf.D_max / rf.delta));
  QuantizedExponents out{kInf, kInf};
  for (long long k = 0; k <= levels; ++k) {
    const double d = static_cast<double>(k) * rf.delta;
    const double r = rf.evaluator(d);
    if (std::isnan(r)) continue;
    if (r >= R) {
      const double v = is_pos_inf(r) ? kInf : d + rho * r;
      if (v < out.E1) out.E1 = v;
    }
    if (r <= R) {
      const double v = d + r;
      if (v < out.E2) out.E2 = v;
    }
  }
  if (!is_pos_inf(out.E1)) out.E1 -= rho * R;
  if (!is_pos_inf(out.E2)) out.E2 -= R;
  return out;
}

}  // namespace expurg

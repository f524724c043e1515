#pragma once

#include <cstdint>
#include <functional>

namespace expurg {

// Type-class enumerator model at blocklength n: the number of competitor
// codewords sharing a joint type with pairwise exponent I is a
// Binomial(M - 1, e^{-nI}) count with M = round(e^{nR}) codewords.
struct EnumeratorModel {
  int n = 1;
  double R = 0.0;    // nats/symbol
  double I = 0.0;    // pairwise type exponent, nats/symbol
  double rho = 1.0;  // fractional-moment order, >= 1

  long long num_codewords() const;  // M
  // ln(M - 1)/n: the rate actually realized by the integer codebook size.
  // Rounding M to an integer shifts the empirical exponent by R - this
  // value, which is the dominant term of the gap at small n unless the
  // theory side is evaluated here too.
  double effective_rate() const;
};

// Two-branch per-symbol exponent of E[N^{1/rho}]: (R - I) when the type is
// rare (R < I), (R - I)/rho when it concentrates.
double moment_exponent_theory(const EnumeratorModel& m);

// Same branch formula evaluated at the model's effective rate; this is the
// apples-to-apples reference for the empirical estimate.
double moment_exponent_theory_effective(const EnumeratorModel& m);

enum class MomentMode { exact_binomial, monte_carlo };

struct MomentEstimate {
  double exponent = 0.0;  // (1/n) ln E[N^{1/rho}]
  bool underflow = false;
};

// Exact mode sums k^{1/rho} pmf(k) over the full binomial support in the log
// domain (needs M <= 2^20); Monte Carlo mode averages over sampled counts
// (needs trials >= 10^4). Deterministic given the seed.
MomentEstimate moment_exponent_empirical(const EnumeratorModel& m,
                                         MomentMode mode, long long trials = 0,
                                         std::uint64_t seed = 1);

// Generic large-deviations rate function R(D) for the quantized
// continuous-alphabet analysis: evaluator may return +inf left of its domain;
// delta is the quantization step; levels run over 0..ceil(D_max/delta).
struct RateFunction {
  std::function<double(double)> evaluator;
  double delta = 1e-4;
  double D_max = 1.0;
};

// Picks D_max as the smallest level with R(D) <= 1e-9, plus one delta.
RateFunction make_rate_function(std::function<double(double)> evaluator,
                                double delta, double scan_cap = 1e6);

// Samples the evaluator and confirms it is nonincreasing and convex where
// finite.
bool rate_function_shape_ok(const RateFunction& rf, int samples = 200);

struct QuantizedExponents {
  double E1 = 0.0;  // inf over levels with R(k delta) >= R; +inf when empty
  double E2 = 0.0;  // inf over levels with R(k delta) <= R; +inf when empty
};

// The quantized two-branch decomposition: E1 = inf [k delta + rho R(k delta)]
// - rho R over the high-information levels, E2 = inf [k delta + R(k delta)]
// - R over the rest.
QuantizedExponents quantized_exponents(const RateFunction& rf, double R,
                                       double rho);

}  // namespace expurg

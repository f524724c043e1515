#include "expurg/rate_distortion.hpp"

#include "expurg/errors.hpp"
#include "expurg/exponents.hpp"
#include "expurg/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace expurg {

namespace {

constexpr double kR1BisectTol = 1e-6;
constexpr double kBetaLo = 1e-9;

// beta D + sum_x q(x) ln sum_x' q(x') e^{-beta d(x,x')}; the Legendre
// objective of R_Q(D). Convex in beta.
double legendre_objective(const RdProblem& prob, double D, double beta) {
  const Vector& q = prob.q.probs;
  const Matrix& d = prob.dm.d;

  KahanSum acc;
  std::vector<double> log_terms;
  for (Index x = 0; x < q.size(); ++x) {
    if (q(x) == 0.0) continue;
    KahanSum inner;
    for (Index xp = 0; xp < q.size(); ++xp)
      if (q(xp) != 0.0) inner.add(q(xp) * exp_neg_mul(d(x, xp), beta));
    double inner_log;
    if (inner.value() > 0.0) {
      inner_log = std::log(inner.value());
    } else {
      // linear sum underflowed (large beta, positive distortion floor):
      // redo this row in the log domain
      log_terms.clear();
      for (Index xp = 0; xp < q.size(); ++xp)
        if (q(xp) != 0.0 && !is_pos_inf(d(x, xp)))
          log_terms.push_back(std::log(q(xp)) - beta * d(x, xp));
      inner_log = log_sum_exp(std::span<const double>(log_terms));
      if (inner_log == -kInf) return -kInf;  // no finite distortion reachable
    }
    acc.add(q(x) * inner_log);
  }
  return beta * D + acc.value();
}

}  // namespace

double mutual_information(const Matrix& w) {
  const Vector row = w.rowwise().sum();
  const Vector col = w.colwise().sum();
  KahanSum acc;
  for (Index i = 0; i < w.rows(); ++i) {
    for (Index j = 0; j < w.cols(); ++j) {
      const double p = w(i, j);
      if (p <= 0.0) continue;  // 0 ln 0 = 0
      acc.add(p * (std::log(p) - std::log(row(i)) - std::log(col(j))));
    }
  }
  return std::max(0.0, acc.value());
}

double rq_of_d(const RdProblem& prob, double D) {
  if (!(D >= 0.0))
    throw DomainError("rq_of_d needs D >= 0, got " + std::to_string(D));

  const auto neg_obj = [&](double beta) {
    return -legendre_objective(prob, D, beta);
  };

  // the beta = 0 endpoint carries the limit convention for infinite entries
  const double at_zero = neg_obj(0.0);
  if (at_zero == kInf) return kInf;

  const OptResult res =
      maximize_grid_then_refine(neg_obj, kBetaLo, prob.beta_max, 64, true);
  if (res.diverged)
    throw DistortionInfeasible("objective still decreasing at beta_max = " +
                               std::to_string(prob.beta_max));
  return std::max(0.0, std::max(at_zero, res.value));
}

OptResult dq_of_r(const RdProblem& prob, double R, bool rho_constraint,
                  double rho_max) {
  if (!(R >= 0.0))
    throw DomainError("dq_of_r needs R >= 0, got " + std::to_string(R));

  const auto objective = [&](double rho) {
    return tilted_distortion_value(prob.q, prob.dm, rho) - rho * R;
  };

  if (rho_constraint) return maximize_over_rho(objective, rho_max);

  OptResult res = maximize_over_rho_from(objective, 1e-6, rho_max);
  if (res.value <= 0.0) {
    // the objective tends to 0 as rho -> 0+, so the supremum over (0, inf)
    // is 0, approached at vanishing rho
    res.value = 0.0;
    res.arg = 0.0;
    res.at_boundary = true;
    res.diverged = false;
  }
  return res;
}

double critical_rate_R1(const RdProblem& prob, double rho_max) {
  const auto at_rho_one = [&](double R) {
    return dq_of_r(prob, R, true, rho_max).arg <= 1.0 + 1e-9;
  };

  if (at_rho_one(0.0)) return 0.0;

  const double r_cap = std::log(static_cast<double>(prob.q.size())) + 1.0;
  if (!at_rho_one(r_cap))
    throw NoFiniteR1("rho* > 1 up to R = " + std::to_string(r_cap));

  double lo = 0.0, hi = r_cap;
  while (hi - lo > kR1BisectTol) {
    const double mid = 0.5 * (lo + hi);
    (at_rho_one(mid) ? hi : lo) = mid;
  }
  return hi;  // smallest verified rate with rho* = 1
}

namespace {

struct ScanState {
  const Vector* q = nullptr;
  const Matrix* d = nullptr;
  double rate_cap = 0.0;
  Index k = 0;
  double best = kInf;
  Matrix best_w;
  double best_info = 0.0;
  double best_dist = 0.0;
};

// Fills the dependent row/column of the joint from the free block; returns
// false when any entry falls below -1e-14.
bool complete_joint(const Vector& q, const Matrix& free_block, Matrix& w) {
  const Index k = q.size();
  const Index f = k - 1;
  for (Index i = 0; i < f; ++i)
    for (Index j = 0; j < f; ++j) w(i, j) = free_block(i, j);
  for (Index i = 0; i < f; ++i) {
    double rest = q(i);
    for (Index j = 0; j < f; ++j) rest -= w(i, j);
    if (rest < -1e-14) return false;
    w(i, f) = std::max(0.0, rest);
  }
  for (Index j = 0; j < f; ++j) {
    double rest = q(j);
    for (Index i = 0; i < f; ++i) rest -= w(i, j);
    if (rest < -1e-14) return false;
    w(f, j) = std::max(0.0, rest);
  }
  double corner = q(f);
  for (Index j = 0; j < f; ++j) corner -= w(f, j);
  if (corner < -1e-14) return false;
  w(f, f) = std::max(0.0, corner);
  return true;
}

void consider(ScanState& st, const Matrix& free_block, Matrix& w) {
  if (!complete_joint(*st.q, free_block, w)) return;

  KahanSum dist;
  for (Index i = 0; i < st.k; ++i) {
    for (Index j = 0; j < st.k; ++j) {
      if (w(i, j) <= 0.0) continue;
      if (is_pos_inf((*st.d)(i, j))) return;  // infinite distortion
      dist.add(w(i, j) * (*st.d)(i, j));
    }
  }
  const double info = mutual_information(w);
  if (info > st.rate_cap + 1e-12) return;

  const double value = info + dist.value();
  if (value < st.best) {
    st.best = value;
    st.best_w = w;
    st.best_info = info;
    st.best_dist = dist.value();
  }
}

void scan_recursive(ScanState& st, Matrix& free_block, Matrix& w,
                    const std::vector<std::pair<double, double>>& ranges,
                    int points, size_t dim) {
  const Index f = st.k - 1;
  if (dim == static_cast<size_t>(f * f)) {
    consider(st, free_block, w);
    return;
  }
  const auto [lo, hi] = ranges[dim];
  const Index i = static_cast<Index>(dim) / f;
  const Index j = static_cast<Index>(dim) % f;
  for (int t = 0; t < points; ++t) {
    free_block(i, j) =
        points == 1 ? lo : lo + (hi - lo) * t / static_cast<double>(points - 1);
    scan_recursive(st, free_block, w, ranges, points, dim + 1);
  }
}

}  // namespace

OracleResult joint_oracle(const RdProblem& prob, double R, int grid) {
  const Index k = prob.q.size();
  if (k > 3)
    throw AlphabetTooLarge("joint_oracle supports |X| <= 3, got " +
                           std::to_string(k));
  if (grid < 100)
    throw DomainError("oracle grid resolution must be >= 100");

  const Vector& q = prob.q.probs;
  const Index f = k - 1;
  const size_t nfree = static_cast<size_t>(f * f);

  ScanState st;
  st.q = &q;
  st.d = &prob.dm.d;
  st.rate_cap = R;
  st.k = k;

  Matrix w(k, k);
  Matrix free_block = Matrix::Zero(f, f);

  // the product joint is the unique I = 0 member of A(R, Q): always feasible
  {
    Matrix prod = q * q.transpose();
    for (Index i = 0; i < f; ++i)
      for (Index j = 0; j < f; ++j) free_block(i, j) = prod(i, j);
    consider(st, free_block, w);
  }

  std::vector<std::pair<double, double>> ranges(nfree);
  for (Index i = 0; i < f; ++i)
    for (Index j = 0; j < f; ++j)
      ranges[static_cast<size_t>(i * f + j)] = {0.0, std::min(q(i), q(j))};

  // per-axis point budget: full resolution for one free dim, capped for the
  // 4-dim 3x3 case; the zoom rounds recover the requested resolution
  const int points = (k == 2) ? grid + 1 : std::min(grid + 1, 25);

  for (int round = 0; round < 5; ++round) {
    scan_recursive(st, free_block, w, ranges, points, 0);
    if (st.best == kInf) break;  // nothing feasible at any resolution
    for (size_t dimx = 0; dimx < nfree; ++dimx) {
      const Index i = static_cast<Index>(dimx) / f;
      const Index j = static_cast<Index>(dimx) % f;
      const double width = (ranges[dimx].second - ranges[dimx].first) /
                           static_cast<double>(points - 1);
      const double center = st.best_w(i, j);
      const double ub = std::min(q(i), q(j));
      ranges[dimx] = {std::max(0.0, center - 1.5 * width),
                      std::min(ub, center + 1.5 * width)};
    }
  }

  OracleResult out;
  out.value = st.best;
  out.witness = JointDistribution{st.best == kInf ? q * q.transpose()
                                                  : st.best_w};
  out.mutual_info = st.best_info;
  out.expected_distortion = st.best_dist;
  return out;
}

}  // namespace expurg

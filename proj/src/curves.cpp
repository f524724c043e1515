#include "expurg/curves.hpp"

#include "expurg/errors.hpp"
#include "expurg/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace expurg {

namespace {

struct RawPoint {
  double value = 0.0;
  double rho = 1.0;
  double s = 0.5;
  bool diverged = false;
};

using PointOptimizer = std::function<RawPoint(double)>;

RawPoint opt_gallager(const ExponentInputs& in, double R,
                      const CurveOptions& opts) {
  const auto f = [&](double rho) {
    return gallager_EG(rho, 0.5, in) - rho * R;
  };
  const OptResult r = maximize_over_rho(f, opts.rho_max, opts.tol);
  return {r.value, r.arg, 0.5, r.diverged};
}

RawPoint opt_ckm(const RdProblem& prob, double R, const CurveOptions& opts) {
  const OptResult r = dq_of_r(prob, R, true, opts.rho_max);
  return {r.value, r.arg, 0.5, r.diverged};
}

RawPoint opt_chernoff(const ExponentInputs& in, double R,
                      const CurveOptions& opts) {
  const auto inner = [&](double s) {
    const auto f = [&](double rho) { return ckm_E(rho, s, in) - rho * R; };
    return maximize_over_rho(f, opts.rho_max, opts.tol);
  };

  // a pointwise sup of concave-in-s functions need not stay concave, so a
  // grid pass locates the bracket before golden section takes over
  const int n = std::max(opts.s_grid, 3);
  RawPoint best;
  best.value = -kInf;
  int best_i = 0;
  for (int i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / (n - 1);
    const OptResult r = inner(s);
    if (r.value > best.value) {
      best = {r.value, r.arg, s, r.diverged};
      best_i = i;
    }
  }

  const double s_lo = static_cast<double>(std::max(best_i - 1, 0)) / (n - 1);
  const double s_hi =
      static_cast<double>(std::min(best_i + 1, n - 1)) / (n - 1);
  const OptResult refined = maximize_on_interval(
      [&](double s) { return inner(s).value; }, s_lo, s_hi, opts.tol);
  if (refined.value > best.value) {
    const OptResult r = inner(refined.arg);
    best = {r.value, r.arg, refined.arg, r.diverged};
  }
  return best;
}

// Smallest R at which the reported rho* reaches 1; same bisection contract
// as critical_rate_R1 but running on an arbitrary point optimizer.
double critical_rate_for(const PointOptimizer& opt, Index input_size) {
  const auto at_rho_one = [&](double R) { return opt(R).rho <= 1.0 + 1e-9; };
  if (at_rho_one(0.0)) return 0.0;
  const double r_cap = std::log(static_cast<double>(input_size)) + 1.0;
  if (!at_rho_one(r_cap))
    throw NoFiniteR1("rho* > 1 up to R = " + std::to_string(r_cap));
  double lo = 0.0, hi = r_cap;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (at_rho_one(mid) ? hi : lo) = mid;
  }
  return hi;
}

Phase phase_of(double R, double R1, double value_at_R1) {
  if (R < R1) return Phase::glassy;
  if (R < R1 + value_at_R1) return Phase::paramagnetic;
  return Phase::zero;
}

ExponentCurve assemble(CurveKind kind, const PointOptimizer& opt,
                       double R1, const std::vector<double>& R_grid) {
  ExponentCurve curve;
  curve.kind = kind;
  curve.R1 = R1;

  const RawPoint at_r1 = opt(R1);
  curve.value_at_R1 = std::max(0.0, at_r1.value);

  const RawPoint at_zero = opt(0.0);
  curve.zero_rate_value =
      at_zero.diverged ? kInf : std::max(0.0, at_zero.value);

  // an identically-zero curve (uninformative instance) has no real phase
  // boundary; the bisected R1 is then pure rounding noise
  if (curve.zero_rate_value <= 1e-11 && curve.value_at_R1 <= 1e-11) {
    curve.R1 = 0.0;
    curve.value_at_R1 = 0.0;
  }

  curve.points.reserve(R_grid.size());
  for (double R : R_grid) {
    const RawPoint p = opt(R);
    CurvePoint pt;
    pt.R = R;
    pt.unclamped = p.value;
    pt.value = std::max(0.0, p.value);
    pt.rho_star = p.rho;
    pt.s_star = p.s;
    pt.diverged = p.diverged;
    pt.phase = phase_of(R, curve.R1, curve.value_at_R1);
    curve.points.push_back(pt);
  }
  return curve;
}

PointOptimizer make_optimizer(const ExponentInputs& in, CurveKind kind,
                              const RdProblem& prob, const CurveOptions& opts) {
  switch (kind) {
    case CurveKind::gallager:
      return [&in, opts](double R) { return opt_gallager(in, R, opts); };
    case CurveKind::ckm_bhatt:
      return [&prob, opts](double R) { return opt_ckm(prob, R, opts); };
    default:
      return [&in, opts](double R) { return opt_chernoff(in, R, opts); };
  }
}

ExponentCurve build(const ExponentInputs& in, CurveKind kind,
                    const std::vector<double>& R_grid,
                    const CurveOptions& opts) {
  RdProblem prob{in.q(), in.distance(0.5), 1e6};
  const PointOptimizer opt = make_optimizer(in, kind, prob, opts);
  const double R1 = kind == CurveKind::ckm_bhatt
                        ? critical_rate_R1(prob, opts.rho_max)
                        : critical_rate_for(opt, in.channel().input_size());
  return assemble(kind, opt, R1, R_grid);
}

}  // namespace

std::string to_string(Phase p) {
  switch (p) {
    case Phase::glassy:
      return "glassy";
    case Phase::paramagnetic:
      return "paramagnetic";
    default:
      return "zero";
  }
}

std::string to_string(CurveKind k) {
  switch (k) {
    case CurveKind::gallager:
      return "gallager";
    case CurveKind::ckm_bhatt:
      return "ckm_bhatt";
    case CurveKind::chernoff_new:
      return "chernoff_new";
    default:
      return "gaussian";
  }
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  std::vector<double> g(static_cast<size_t>(std::max(count, 2)));
  for (size_t i = 0; i < g.size(); ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / (g.size() - 1);
  return g;
}

std::vector<double> default_rate_grid(const ExponentInputs& in, CurveKind kind,
                                      const CurveOptions& opts) {
  RdProblem prob{in.q(), in.distance(0.5), 1e6};
  const PointOptimizer opt = make_optimizer(in, kind, prob, opts);
  const double R1 = kind == CurveKind::ckm_bhatt
                        ? critical_rate_R1(prob, opts.rho_max)
                        : critical_rate_for(opt, in.channel().input_size());
  const double v1 = std::max(0.0, opt(R1).value);
  const double hi = 1.2 * (R1 + v1);
  return linear_grid(0.0, hi > 1e-9 ? hi : 0.1, 201);
}

ExponentCurve curve_gallager(const ExponentInputs& in,
                             const std::vector<double>& R_grid,
                             const CurveOptions& opts) {
  return build(in, CurveKind::gallager, R_grid, opts);
}

ExponentCurve curve_ckm(const ExponentInputs& in,
                        const std::vector<double>& R_grid,
                        const CurveOptions& opts) {
  return build(in, CurveKind::ckm_bhatt, R_grid, opts);
}

ExponentCurve curve_chernoff_new(const ExponentInputs& in,
                                 const std::vector<double>& R_grid,
                                 const CurveOptions& opts) {
  return build(in, CurveKind::chernoff_new, R_grid, opts);
}

double e1_diagnostic(const ExponentInputs& in, double s, double R,
                     double rho) {
  if (!(rho >= 1.0))
    throw DomainError("e1_diagnostic needs rho >= 1, got " +
                      std::to_string(rho));

  const DistanceMatrix& dm = in.distance(s);
  const Vector& q = in.q().probs;
  const double beta = 1.0 / rho;

  // distortion level D_rho where the R_Q slope equals -1/rho, together with
  // the exact Legendre value of R_Q there
  KahanSum d_acc;
  KahanSum log_acc;
  for (Index x = 0; x < q.size(); ++x) {
    if (q(x) == 0.0) continue;
    double z = 0.0, zd = 0.0;
    for (Index xp = 0; xp < q.size(); ++xp) {
      if (q(xp) == 0.0 || is_pos_inf(dm.d(x, xp))) continue;
      const double w = q(xp) * std::exp(-beta * dm.d(x, xp));
      z += w;
      zd += w * dm.d(x, xp);
    }
    d_acc.add(q(x) * zd / z);
    log_acc.add(q(x) * std::log(z));
  }
  const double d_rho = d_acc.value();
  const double rq_at_d_rho = -(beta * d_rho + log_acc.value());

  if (R <= rq_at_d_rho) return d_rho + rho * (rq_at_d_rho - R);

  RdProblem prob{in.q(), dm, 1e6};
  return dq_of_r(prob, R, false).value;
}

Phase classify_phase(const ExponentCurve& curve, double R) {
  return phase_of(R, curve.R1, curve.value_at_R1);
}

}  // namespace expurg

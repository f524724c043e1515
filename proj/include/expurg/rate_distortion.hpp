#pragma once

#include "expurg/channel.hpp"
#include "expurg/distance.hpp"
#include "expurg/optimize.hpp"

namespace expurg {

// Rate-distortion problem with the reproduction marginal pinned to the
// source distribution: source q, distortion measure d (usually a Chernoff
// distance matrix), Legendre parameter capped at beta_max.
struct RdProblem {
  InputDistribution q;
  DistanceMatrix dm;
  double beta_max = 1e6;
};

// Joint distribution over X x X. Membership in A(R, Q) additionally needs
// I(X;X') <= R, which is checked by predicate, not stored.
struct JointDistribution {
  Matrix w;
};

// I(X;X') of a joint, 0 ln 0 = 0 convention, marginals taken from w itself.
double mutual_information(const Matrix& w);

// R_Q(D) = -inf_{beta >= 0} [beta D + sum_x q(x) ln sum_x' q(x')
// e^{-beta d(x,x')}], clamped below at 0. 1-D convex minimization on
// [0, beta_max]; throws DistortionInfeasible when the objective is still
// decreasing at beta_max (D below the distortion floor).
double rq_of_d(const RdProblem& prob, double D);

// D_Q(R) = sup over rho of [-rho sum_x q ln sum_x' q e^{-d/rho} - rho R].
// Unconstrained (rho_constraint = false): rho ranges over (0, rho_max],
// value clamped at 0 with rho* -> 0 reported as arg = 0. Constrained:
// rho in [1, rho_max] and the raw value is returned (may be negative);
// this is exactly the generalized expurgated-curve objective.
OptResult dq_of_r(const RdProblem& prob, double R, bool rho_constraint,
                  double rho_max = 1e4);

// Smallest R at which the constrained optimizer sits at rho* = 1: the
// boundary between the curvy and straight-line parts of the exponent curve.
// Bisection in R to 1e-6 using monotonicity of rho*(R).
double critical_rate_R1(const RdProblem& prob, double rho_max = 1e4);

struct OracleResult {
  double value = 0.0;  // min of I + E d over A(R, Q); caller subtracts R
  JointDistribution witness;
  double mutual_info = 0.0;
  double expected_distortion = 0.0;
};

// Ground-truth scan for |X| <= 3: parameterizes the marginal-fixed joint
// polytope by its (|X|-1)^2 free entries, scans at the given per-axis grid
// resolution with iterative zoom refinement, rejects infeasible points.
// The product joint q x q is always seeded (the unique I = 0 member).
OracleResult joint_oracle(const RdProblem& prob, double R, int grid);

}  // namespace expurg

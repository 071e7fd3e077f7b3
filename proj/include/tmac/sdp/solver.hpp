#pragma once

#include "tmac/sdp/problem.hpp"

namespace tmac::sdp {

struct SolverOptions {
  double tol = 1e-6;
  int max_iterations = 100;
};

struct SdpSolution {
  CMat rho;
  double value = 0;            // <Q, rho>
  std::vector<CMat> Y;         // dual blocks, one per constraint block
  double dual_value = 0;       // <R, Y>
  double primal_residual = 0;  // max-entry |Phi(rho) - R|
  double dual_residual = 0;    // max-entry |Phi*(Y) - Q - S| of the solver's slack S
  double dual_slack = 0;       // lambda_min(Phi*(Y) - Q)
  double gap = 0;              // |dual_value - value|
  double min_eig_rho = 0;
  int iterations = 0;
  int constraints_used = 0;    // independent constraint rows kept
};

/// Primal-dual interior point (HKM direction, Mehrotra correction) on the
/// Hermitian cone. Linearly dependent constraint rows are dropped first.
/// Throws NotConverged with the residuals when the tolerance is not met.
SdpSolution solve_sdp(const SdpProblem& p, const SolverOptions& opt = {});

/// Max-entry residual of Phi(rho) - R.
double constraint_residual(const SdpProblem& p, const CMat& rho);

double min_eigenvalue(const CMat& h);

}  // namespace tmac::sdp

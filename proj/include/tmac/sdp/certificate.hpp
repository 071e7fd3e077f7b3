#pragma once

#include "tmac/sdp/solver.hpp"

namespace tmac::sdp {

struct CertificateReport {
  double slack = 0;       // lambda_min(Phi*(Y) - Q)
  double value = 0;       // <R, Y>
  double bound = 0;       // value, corrected for negative slack via the unit direction
  bool feasible = false;  // slack >= -eps
};

/// Weak duality: for any feasible rho, <Q, rho> <= <R, Y> whenever Phi*(Y) >= Q.
/// A negative slack s is repaired by adding -s along the unit direction.
CertificateReport check_dual_certificate(const SdpProblem& p, const std::vector<CMat>& Y, double eps);

struct TensorReport {
  int lambda = 2;
  double primal_residual = 0;   // max-entry |(Phi(x)Phi)(rho(x)rho) - R(x)R|
  double objective = 0;         // <Q(x)Q, rho(x)rho>
  double objective_expected = 0;  // value^2
  double dual_slack = 0;        // lambda_min(Phi*(Y)(x)Phi*(Y) - Q(x)Q)
  double dual_value = 0;        // <R(x)R, Y(x)Y>
  double certified = 0;         // dual_value corrected for negative slack
  int blocks = 0;               // independent eigenproblems
  int largest_block = 0;
  bool passed = false;
};

/// Only lambda = 2 is supported.
TensorReport tensor_power_check(const SdpProblem& p, const SdpSolution& sol, int lambda = 2);

}  // namespace tmac::sdp

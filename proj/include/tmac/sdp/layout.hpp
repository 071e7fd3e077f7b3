#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace tmac::sdp {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Ordered tensor factors; factor 0 is the most significant digit.
struct RegisterLayout {
  std::vector<std::string> names;
  std::vector<int> dims;

  int total() const;
  int factor(const std::string& name) const;  // BadFactor if absent
  RegisterLayout without(const std::vector<int>& factors) const;

  /// Z, X_p, X_m1, X_m2, X_k, X_a: all qubits, 64 in total.
  static RegisterLayout weak_del();
  /// The 5-qubit X part without Z.
  static RegisterLayout weak_del_x();
};

/// Trace out `over` (factor indices); the result lives on the remaining
/// factors in their original order.
CMat partial_trace(const CMat& m, const RegisterLayout& layout, const std::vector<int>& over);
CMat partial_trace(const CMat& m, const RegisterLayout& layout, const std::vector<std::string>& over);

bool is_hermitian(const CMat& m, double tol = 1e-10);

}  // namespace tmac::sdp

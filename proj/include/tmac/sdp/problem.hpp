#pragma once

#include <functional>
#include <vector>

#include "tmac/sdp/layout.hpp"

namespace tmac::sdp {

/// One coefficient of a linear map on matrices:
/// out[block](out_r, out_c) += coeff * in(in_r, in_c).
struct SuperopEntry {
  int block, out_r, out_c, in_r, in_c;
  cplx coeff;
};

/// Hermiticity-preserving map from d x d matrices to a list of square blocks.
struct LinearMap {
  int in_dim = 0;
  std::vector<int> block_dims;
  std::vector<SuperopEntry> entries;

  std::vector<CMat> apply(const CMat& x) const;
  CMat adjoint(const std::vector<CMat>& y) const;
};

/// maximize <Q, rho> subject to Phi(rho) = R, rho >= 0.
struct SdpProblem {
  int m = 1;
  RegisterLayout layout;
  CMat Q;
  LinearMap phi;
  std::vector<CMat> R;
  CMat sigma0;  // on the X registers
  CMat Pi;      // on the X registers

  // Facial reduction: every feasible rho lives in span(face) (orthonormal
  // columns). Each exposing direction E has <R, E> = 0, and Phi*(sum E) is PSD
  // and positive off the face, so it can be added to a dual point freely.
  CMat face;
  std::vector<std::vector<CMat>> exposing;
  // Dual direction with Phi*(unit) = I.
  std::vector<CMat> unit;
};

/// The weak certified-deletion game for E_m at lambda = 1.
///   psi = 1/2 sum_{k,a} |a>_p |H^k a>_m1 |k>_m2 |k>_k |a>_a
///   Q   = |1><1|_Z (x) Pi_m
///   phi1 = Tr_{m1,Z}(G0 rho G0)              = Tr_m1 sigma0
///   phi2 = Tr_{m2,Z}(G1 rho G1 - G0 rho G0)  = 0
///   phi3 = Tr(G0 rho G0) = 1,  phi4 = Tr(G1 rho G1) = 1
SdpProblem build_weak_del_sdp(int m);

/// M (x) I with the identity inserted at factor f; M lives on the layout
/// without f.
CMat insert_identity(const CMat& m, const RegisterLayout& layout, int f);

/// Orthonormal basis of the eigenvectors with eigenvalue above tol.
CMat support_basis(const CMat& h, double tol = 1e-10);

/// Compile a map given as a black box on matrices by probing every E_ij.
LinearMap compile_map(int in_dim, const std::vector<int>& block_dims,
                      const std::function<std::vector<CMat>(const CMat&)>& f);

/// The intermediate-basis strategy written as a primal point.
CMat breidbart_primal_point(const SdpProblem& p);

/// Isometric real coordinates of a Hermitian matrix: diagonal, then
/// sqrt2*Re and sqrt2*Im of the strict upper triangle (row-major).
Eigen::VectorXd hvec(const CMat& h);
CMat hunvec(const Eigen::VectorXd& v, int d);
inline int hdim(int d) { return d * d; }

double inner(const CMat& a, const CMat& b);  // Re Tr(a^dagger b)
double inner(const std::vector<CMat>& a, const std::vector<CMat>& b);

}  // namespace tmac::sdp

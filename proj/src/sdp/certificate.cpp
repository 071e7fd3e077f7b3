#include "tmac/sdp/certificate.hpp"

#include "tmac/core/error.hpp"

namespace tmac::sdp {

CertificateReport check_dual_certificate(const SdpProblem& p, const std::vector<CMat>& Y, double eps) {
  if (Y.size() != p.phi.block_dims.size()) fail(Errc::LengthMismatch, "dual variable has the wrong number of blocks");
  for (std::size_t b = 0; b < Y.size(); ++b)
    if (Y[b].rows() != p.phi.block_dims[b] || !is_hermitian(Y[b], 1e-8))
      fail(Errc::InvalidArgument, "dual block is not Hermitian of the constraint shape");
  CertificateReport r;
  r.slack = min_eigenvalue(p.phi.adjoint(Y) - p.Q);
  r.value = inner(p.R, Y);
  const double unit_cost = p.unit.empty() ? 0.0 : inner(p.R, p.unit);
  r.bound = r.value + unit_cost * std::max(0.0, -r.slack);
  r.feasible = r.slack >= -eps;
  return r;
}

}  // namespace tmac::sdp

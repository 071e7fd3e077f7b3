#include <limits>
#include <numeric>

#include "tmac/core/error.hpp"
#include "tmac/sdp/certificate.hpp"

namespace tmac::sdp {

namespace {

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Connected components of the joint sparsity pattern of a and b.
std::vector<std::vector<int>> components(const CMat& a, const CMat& b) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a(i, j) != 0.0 || b(i, j) != 0.0) parent[find(i)] = find(j);
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

}  // namespace

TensorReport tensor_power_check(const SdpProblem& p, const SdpSolution& sol, int lambda) {
  if (lambda != 2) fail(Errc::InvalidArgument, "tensor check is implemented for lambda = 2 only");
  TensorReport r;
  r.lambda = lambda;
  const auto& dims = p.phi.block_dims;
  const int nb = static_cast<int>(dims.size());

  // (Phi (x) Phi)(rho (x) rho), applied entry pair by entry pair.
  std::vector<CMat> out(nb * nb);
  for (int b1 = 0; b1 < nb; ++b1)
    for (int b2 = 0; b2 < nb; ++b2) out[b1 * nb + b2] = CMat::Zero(dims[b1] * dims[b2], dims[b1] * dims[b2]);
  for (const auto& e1 : p.phi.entries) {
    const cplx x1 = e1.coeff * sol.rho(e1.in_r, e1.in_c);
    if (x1 == 0.0) continue;
    for (const auto& e2 : p.phi.entries) {
      const int d2 = dims[e2.block];
      out[e1.block * nb + e2.block](e1.out_r * d2 + e2.out_r, e1.out_c * d2 + e2.out_c) +=
          x1 * e2.coeff * sol.rho(e2.in_r, e2.in_c);
    }
  }
  for (int b1 = 0; b1 < nb; ++b1)
    for (int b2 = 0; b2 < nb; ++b2)
      r.primal_residual =
          std::max(r.primal_residual, (out[b1 * nb + b2] - kron(p.R[b1], p.R[b2])).cwiseAbs().maxCoeff());

  // <Q (x) Q, rho (x) rho> over the nonzeros of Q.
  std::vector<std::pair<int, int>> qnz;
  for (int i = 0; i < p.Q.rows(); ++i)
    for (int j = 0; j < p.Q.cols(); ++j)
      if (p.Q(i, j) != 0.0) qnz.emplace_back(i, j);
  cplx obj = 0;
  for (auto [i, j] : qnz)
    for (auto [k, l] : qnz) obj += std::conj(p.Q(i, j) * p.Q(k, l)) * sol.rho(i, j) * sol.rho(k, l);
  r.objective = obj.real();
  r.objective_expected = sol.value * sol.value;

  // Phi*(Y) (x) Phi*(Y) - Q (x) Q splits along components of the pattern.
  const CMat a = p.phi.adjoint(sol.Y);
  const auto comps = components(a, p.Q);
  r.dual_slack = std::numeric_limits<double>::infinity();
  for (const auto& c1 : comps)
    for (const auto& c2 : comps) {
      const int n1 = static_cast<int>(c1.size()), n2 = static_cast<int>(c2.size());
      CMat m(n1 * n2, n1 * n2);
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
          for (int k = 0; k < n1; ++k)
            for (int l = 0; l < n2; ++l)
              m(i * n2 + j, k * n2 + l) =
                  a(c1[i], c1[k]) * a(c2[j], c2[l]) - p.Q(c1[i], c1[k]) * p.Q(c2[j], c2[l]);
      r.dual_slack = std::min(r.dual_slack, min_eigenvalue(m));
      ++r.blocks;
      r.largest_block = std::max(r.largest_block, n1 * n2);
    }

  cplx dv = 0;
  for (int b1 = 0; b1 < nb; ++b1)
    for (int b2 = 0; b2 < nb; ++b2)
      dv += (kron(p.R[b1], p.R[b2]).adjoint() * kron(sol.Y[b1], sol.Y[b2])).trace();
  r.dual_value = dv.real();
  const double unit_cost = p.unit.empty() ? 0.0 : inner(p.R, p.unit);
  r.certified = r.dual_value + unit_cost * unit_cost * std::max(0.0, -r.dual_slack);
  r.passed = r.primal_residual <= 1e-6 && std::abs(r.objective - r.objective_expected) <= 1e-9 &&
             r.dual_slack >= -1e-3;
  return r;
}

}  // namespace tmac::sdp

#include "tmac/sdp/solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tmac/core/error.hpp"

namespace tmac::sdp {

double min_eigenvalue(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double constraint_residual(const SdpProblem& p, const CMat& rho) {
  auto out = p.phi.apply(rho);
  double r = 0;
  for (std::size_t b = 0; b < out.size(); ++b) r = std::max(r, (out[b] - p.R[b]).cwiseAbs().maxCoeff());
  return r;
}

namespace {

using Vec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

struct Nz {
  int r, c;
  cplx v;
};
using SparseHerm = std::vector<Nz>;

// Constraint rows in isometric coordinates: row i reads <A_i, X> with
// A_i = hunvec(e_i composed with Phi), i.e. Phi*(E_i) for the output basis E_i.
std::vector<CMat> constraint_matrices(const LinearMap& phi) {
  std::vector<CMat> rows;
  for (std::size_t b = 0; b < phi.block_dims.size(); ++b) {
    const int d = phi.block_dims[b];
    for (int i = 0; i < hdim(d); ++i) {
      Vec e = Vec::Zero(hdim(d));
      e(i) = 1.0;
      std::vector<CMat> y;
      for (int bd : phi.block_dims) y.push_back(CMat::Zero(bd, bd));
      y[b] = hunvec(e, d);
      rows.push_back(phi.adjoint(y));
    }
  }
  return rows;
}

double re_inner(const SparseHerm& a, const CMat& x) {  // Re Tr(A X)
  double s = 0;
  for (const auto& z : a) s += (z.v * x(z.c, z.r)).real();
  return s;
}

// Greedy pivoted Cholesky on the Gram matrix picks a maximal independent set.
std::vector<int> independent_rows(const std::vector<CMat>& rows) {
  const int n = static_cast<int>(rows.size());
  RMat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) g(i, j) = g(j, i) = inner(rows[i], rows[j]);
  std::vector<int> order(n), keep;
  for (int i = 0; i < n; ++i) order[i] = i;
  RMat l = RMat::Zero(n, n);
  Vec diag = g.diagonal();
  const double scale = std::max(1.0, diag.maxCoeff());
  std::vector<bool> used(n, false);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    double best = 1e-9 * scale;
    for (int i = 0; i < n; ++i)
      if (!used[i] && diag(i) > best) {
        best = diag(i);
        piv = i;
      }
    if (piv < 0) break;
    used[piv] = true;
    keep.push_back(piv);
    const double lkk = std::sqrt(diag(piv));
    const int col = static_cast<int>(keep.size()) - 1;
    for (int i = 0; i < n; ++i) {
      if (used[i] && i != piv) continue;
      double v = g(i, piv);
      for (int t = 0; t < col; ++t) v -= l(i, t) * l(piv, t);
      l(i, col) = v / lkk;
      if (i != piv) diag(i) -= l(i, col) * l(i, col);
    }
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

CMat herm(const CMat& m) { return 0.5 * (m + m.adjoint()); }

// Largest step in (0, 1] keeping X + a dX positive semidefinite.
double max_step(const CMat& x, const CMat& dx) {
  Eigen::LLT<CMat> llt(x);
  CMat linv = llt.matrixL().solve(CMat::Identity(x.rows(), x.cols()));
  const double lm = min_eigenvalue(herm(linv * dx * linv.adjoint()));
  return lm >= 0 ? 1.0 : std::min(1.0, -1.0 / lm);
}

struct IpmResult {
  CMat x;
  std::vector<CMat> Y;
  double dual_residual = 0;
  int iterations = 0;
  int constraints_used = 0;
};

// maximize <Q, X> s.t. map(X) = R, X >= 0, as min <-Q, X> with dual y.
IpmResult interior_point(const LinearMap& map, const CMat& q, const std::vector<CMat>& rblocks, const SolverOptions& opt) {
  const int n = map.in_dim;
  const std::vector<CMat> all_rows = constraint_matrices(map);
  const std::vector<int> keep = independent_rows(all_rows);
  const int m = static_cast<int>(keep.size());

  std::vector<SparseHerm> a(m);
  std::vector<double> b_all;
  for (const auto& r : rblocks) {
    Vec v = hvec(r);
    b_all.insert(b_all.end(), v.data(), v.data() + v.size());
  }
  Vec b(m);
  for (int i = 0; i < m; ++i) {
    const CMat& ai = all_rows[keep[i]];
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (std::abs(ai(r, c)) > 1e-14) a[i].push_back({r, c, ai(r, c)});
    b(i) = b_all[keep[i]];
  }
  auto op = [&](const CMat& x) {
    Vec out(m);
    for (int i = 0; i < m; ++i) out(i) = re_inner(a[i], x);
    return out;
  };
  auto op_adj = [&](const Vec& y) {
    CMat out = CMat::Zero(n, n);
    for (int i = 0; i < m; ++i)
      for (const auto& z : a[i]) out(z.r, z.c) += y(i) * z.v;
    return out;
  };

  const CMat cmat = -q;
  const CMat id = CMat::Identity(n, n);
  CMat x = id, z = id;
  Vec y = Vec::Zero(m);
  const double tol_ip = std::min(1e-10, opt.tol * 1e-3);
  const double nb = 1.0 + b.norm(), nc = 1.0 + cmat.norm();
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    const Vec rp = b - op(x);
    const CMat rd = cmat - op_adj(y) - z;
    const double mu = (x * z).trace().real() / n;
    const double pobj = inner(cmat, x), dobj = b.dot(y);
    if (rp.norm() / nb < tol_ip && rd.norm() / nc < tol_ip &&
        std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj)) < tol_ip)
      break;

    const CMat zi = Eigen::LLT<CMat>(z).solve(id);
    // Schur complement M_ij = Re Tr(A_i X A_j Z^-1).
    RMat mm(m, m);
    for (int j = 0; j < m; ++j) {
      CMat t = CMat::Zero(n, n);
      for (const auto& e : a[j]) t += (x.col(e.r) * e.v) * zi.row(e.c);
      for (int i = 0; i < m; ++i) mm(i, j) = re_inner(a[i], t);
    }
    mm = 0.5 * (mm + mm.transpose());
    Eigen::LLT<RMat> schur(mm);
    if (schur.info() != Eigen::Success) break;

    auto direction = [&](const CMat& rc, CMat& dx, Vec& dy, CMat& dz) {
      const CMat g = (rc - x * rd) * zi;
      dy = schur.solve(rp - op(herm(g)));
      const CMat aty = op_adj(dy);
      dz = rd - aty;
      dx = herm(g + x * aty * zi);
    };
    CMat dx, dz;
    Vec dy;
    direction(-x * z, dx, dy, dz);
    double ap = max_step(x, dx), ad = max_step(z, dz);
    const double mu_aff = ((x + ap * dx) * (z + ad * dz)).trace().real() / n;
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);
    direction(sigma * mu * id - x * z - dx * dz, dx, dy, dz);
    ap = std::min(1.0, 0.98 * max_step(x, dx));
    ad = std::min(1.0, 0.98 * max_step(z, dz));
    x = herm(x + ap * dx);
    y += ad * dy;
    z = herm(z + ad * dz);
  }

  IpmResult res;
  res.x = x;
  res.iterations = it;
  res.constraints_used = m;
  res.dual_residual = (cmat - op_adj(y) - z).cwiseAbs().maxCoeff();
  Vec y_all = Vec::Zero(static_cast<Eigen::Index>(b_all.size()));
  for (int i = 0; i < m; ++i) y_all(keep[i]) = -y(i);
  int at = 0;
  for (int d : map.block_dims) {
    res.Y.push_back(hunvec(y_all.segment(at, hdim(d)), d));
    at += hdim(d);
  }
  return res;
}

}  // namespace

SdpSolution solve_sdp(const SdpProblem& p, const SolverOptions& opt) {
  const CMat v = p.face.size() ? p.face : CMat::Identity(p.phi.in_dim, p.phi.in_dim);
  const LinearMap reduced =
      compile_map(static_cast<int>(v.cols()), p.phi.block_dims, [&](const CMat& w) { return p.phi.apply(v * w * v.adjoint()); });
  const IpmResult r = interior_point(reduced, v.adjoint() * p.Q * v, p.R, opt);

  SdpSolution sol;
  sol.iterations = r.iterations;
  sol.constraints_used = r.constraints_used;
  sol.rho = v * r.x * v.adjoint();
  sol.value = inner(p.Q, sol.rho);
  sol.Y = r.Y;
  sol.dual_residual = r.dual_residual;

  // The face dual only covers span(face). Its optimum is generally not
  // attained on the full space, so spend half of the allowed gap on a lift
  // along the identity direction, then push the complement up along the
  // exposing directions (which leaves <R, Y> unchanged) until Phi*(Y) - Q is
  // PSD. The push grows like 1/lift; keeping it small keeps tensor powers of
  // Y well conditioned.
  if (!p.exposing.empty()) {
    if (!p.unit.empty()) {
      const double lift = 5 * opt.tol / inner(p.R, p.unit);
      for (std::size_t b = 0; b < sol.Y.size(); ++b) sol.Y[b] += lift * p.unit[b];
    }
    std::vector<CMat> dir;
    for (int d : p.phi.block_dims) dir.push_back(CMat::Zero(d, d));
    for (const auto& e : p.exposing)
      for (std::size_t b = 0; b < dir.size(); ++b) dir[b] += e[b];
    const CMat base = p.phi.adjoint(sol.Y) - p.Q, push = p.phi.adjoint(dir);
    double best_t = 0, best = min_eigenvalue(base);
    for (double t = 1.0; best < 0 && t <= 1e12; t *= 1.25) {
      const double s = min_eigenvalue(base + t * push);
      if (s > best) {
        best = s;
        best_t = t;
      }
    }
    for (std::size_t b = 0; b < dir.size(); ++b) sol.Y[b] += best_t * dir[b];
  }
  sol.dual_value = inner(p.R, sol.Y);
  sol.dual_slack = min_eigenvalue(p.phi.adjoint(sol.Y) - p.Q);
  sol.primal_residual = constraint_residual(p, sol.rho);
  sol.gap = std::abs(sol.dual_value - sol.value);
  sol.min_eig_rho = min_eigenvalue(sol.rho);
  if (sol.primal_residual > opt.tol || sol.gap > 10 * opt.tol || sol.dual_residual > opt.tol) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "interior point stopped after %d iterations: primal residual %.3e, dual residual %.3e, gap %.3e",
                  sol.iterations, sol.primal_residual, sol.dual_residual, sol.gap);
    fail(Errc::NotConverged, buf);
  }
  return sol;
}

}  // namespace tmac::sdp

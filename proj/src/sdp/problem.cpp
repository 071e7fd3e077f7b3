#include "tmac/sdp/problem.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "tmac/core/error.hpp"

namespace tmac::sdp {

std::vector<CMat> LinearMap::apply(const CMat& x) const {
  std::vector<CMat> out;
  for (int d : block_dims) out.push_back(CMat::Zero(d, d));
  for (const auto& e : entries) out[e.block](e.out_r, e.out_c) += e.coeff * x(e.in_r, e.in_c);
  return out;
}

CMat LinearMap::adjoint(const std::vector<CMat>& y) const {
  if (y.size() != block_dims.size()) fail(Errc::LengthMismatch, "dual variable has the wrong number of blocks");
  CMat out = CMat::Zero(in_dim, in_dim);
  for (const auto& e : entries) out(e.in_r, e.in_c) += std::conj(e.coeff) * y[e.block](e.out_r, e.out_c);
  return out;
}

CMat insert_identity(const CMat& m, const RegisterLayout& layout, int f) {
  const int n = layout.total();
  const int nf = static_cast<int>(layout.dims.size());
  if (f < 0 || f >= nf) fail(Errc::BadFactor, "factor index out of range");
  if (m.rows() * layout.dims[f] != n) fail(Errc::LengthMismatch, "matrix does not match the reduced layout");
  // Drop digit f of a full index.
  auto reduce = [&](int i, int& digit) {
    int rem = i, out = 0, stride = 1;
    for (int g = nf - 1; g >= 0; --g) {
      const int d = layout.dims[g], dg = rem % d;
      rem /= d;
      if (g == f) {
        digit = dg;
      } else {
        out += dg * stride;
        stride *= d;
      }
    }
    return out;
  };
  CMat out = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int di = 0, dj = 0;
      const int ri = reduce(i, di), rj = reduce(j, dj);
      if (di == dj) out(i, j) = m(ri, rj);
    }
  return out;
}

CMat support_basis(const CMat& h, double tol) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  std::vector<int> cols;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > tol) cols.push_back(i);
  CMat v(h.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) v.col(c) = es.eigenvectors().col(cols[c]);
  return v;
}

LinearMap compile_map(int in_dim, const std::vector<int>& block_dims,
                      const std::function<std::vector<CMat>(const CMat&)>& f) {
  LinearMap map;
  map.in_dim = in_dim;
  map.block_dims = block_dims;
  CMat probe = CMat::Zero(in_dim, in_dim);
  for (int i = 0; i < in_dim; ++i)
    for (int j = 0; j < in_dim; ++j) {
      probe(i, j) = 1.0;
      auto out = f(probe);
      probe(i, j) = 0.0;
      for (int b = 0; b < static_cast<int>(out.size()); ++b)
        for (int r = 0; r < out[b].rows(); ++r)
          for (int c = 0; c < out[b].cols(); ++c)
            if (std::abs(out[b](r, c)) > 1e-15) map.entries.push_back({b, r, c, i, j, out[b](r, c)});
    }
  return map;
}

namespace {

// Index into the 5-qubit X space, p most significant.
int xidx(int p, int m1, int m2, int k, int a) { return (p << 4) | (m1 << 3) | (m2 << 2) | (k << 1) | a; }

}  // namespace

SdpProblem build_weak_del_sdp(int m) {
  if (m != 0 && m != 1) fail(Errc::InvalidArgument, "m must be 0 or 1");
  SdpProblem p;
  p.m = m;
  p.layout = RegisterLayout::weak_del();
  const RegisterLayout xl = RegisterLayout::weak_del_x();

  // psi: X_p holds a, X_m1 holds H^k|a>, X_m2 and X_k hold k, X_a holds a.
  const double s = 1.0 / std::sqrt(2.0);
  CVec psi = CVec::Zero(32);
  for (int k = 0; k < 2; ++k)
    for (int a = 0; a < 2; ++a) {
      if (k == 0) {
        psi(xidx(a, a, k, k, a)) += 0.5;
      } else {
        psi(xidx(a, 0, k, k, a)) += 0.5 * s;
        psi(xidx(a, 1, k, k, a)) += 0.5 * s * (a ? -1.0 : 1.0);
      }
    }
  p.sigma0 = psi * psi.adjoint();

  // Pi: certificate in X_m1, guess in X_m2. Win iff guess == a, and the
  // certificate must equal a whenever k == m.
  p.Pi = CMat::Zero(32, 32);
  for (int pp = 0; pp < 2; ++pp)
    for (int cert = 0; cert < 2; ++cert)
      for (int k = 0; k < 2; ++k)
        for (int a = 0; a < 2; ++a) {
          if (k == m && cert != a) continue;
          const int i = xidx(pp, cert, a, k, a);
          p.Pi(i, i) = 1.0;
        }

  p.Q = CMat::Zero(64, 64);
  p.Q.bottomRightCorner(32, 32) = p.Pi;

  const RegisterLayout& L = p.layout;
  const int fz = L.factor("Z"), fm1 = L.factor("m1"), fm2 = L.factor("m2");
  auto phi = [&](const CMat& rho) {
    // Gamma_z rho Gamma_z keeps the Z=z diagonal block.
    CMat r0 = CMat::Zero(64, 64), r1 = CMat::Zero(64, 64);
    r0.topLeftCorner(32, 32) = rho.topLeftCorner(32, 32);
    r1.bottomRightCorner(32, 32) = rho.bottomRightCorner(32, 32);
    std::vector<CMat> out;
    out.push_back(partial_trace(r0, L, std::vector<int>{fm1, fz}));
    out.push_back(partial_trace(r1 - r0, L, std::vector<int>{fm2, fz}));
    out.push_back(CMat::Constant(1, 1, r0.trace()));
    out.push_back(CMat::Constant(1, 1, r1.trace()));
    return out;
  };
  p.phi = compile_map(64, {16, 16, 1, 1}, phi);

  p.R.push_back(partial_trace(p.sigma0, xl, std::vector<std::string>{"m1"}));
  p.R.push_back(CMat::Zero(16, 16));
  p.R.push_back(CMat::Constant(1, 1, 1.0));
  p.R.push_back(CMat::Constant(1, 1, 1.0));

  // sigma0 is pure, so Tr_m1 sigma0 is singular and the Z=0 block is confined
  // to supp(R1) (x) X_m1. That in turn confines the Z=1 block through phi2.
  const int xm1 = xl.factor("m1"), xm2 = xl.factor("m2");
  const CMat s1 = support_basis(p.R[0]);
  const CMat p0 = insert_identity(s1 * s1.adjoint(), xl, xm1);
  const CMat t0 = partial_trace(p0, xl, std::vector<int>{xm2});
  const CMat s2 = support_basis(t0);
  const CMat p1 = insert_identity(s2 * s2.adjoint(), xl, xm2);
  const CMat v0 = support_basis(p0), v1 = support_basis(p1);
  p.face = CMat::Zero(64, v0.cols() + v1.cols());
  p.face.block(0, 0, 32, v0.cols()) = v0;
  p.face.block(32, v0.cols(), 32, v1.cols()) = v1;
  const CMat k1 = CMat::Identity(16, 16) - s1 * s1.adjoint();
  const CMat k2 = CMat::Identity(16, 16) - s2 * s2.adjoint();
  // Phi*(2 K1) covers the Z=0 part that Phi*(K2) subtracts.
  p.exposing.push_back({2.0 * k1, CMat::Zero(16, 16), CMat::Zero(1, 1), CMat::Zero(1, 1)});
  p.exposing.push_back({CMat::Zero(16, 16), k2, CMat::Zero(1, 1), CMat::Zero(1, 1)});
  p.unit = {CMat::Zero(16, 16), CMat::Zero(16, 16), CMat::Constant(1, 1, 1.0), CMat::Constant(1, 1, 1.0)};
  return p;
}

CMat breidbart_primal_point(const SdpProblem& p) {
  const double c = std::cos(M_PI / 8), s = std::sin(M_PI / 8);
  // Measurement vectors of the intermediate basis on X_m1.
  const double e[2][2] = {{c, s}, {-s, c}};
  auto split = [](int r) { return std::pair<int, int>{r >> 3, r & 7}; };  // (p, m2 k a)
  CMat rho1 = CMat::Zero(32, 32), rho2 = CMat::Zero(32, 32);
  for (int o = 0; o < 2; ++o) {
    // tau_o = <e_o|_m1 sigma0 |e_o>_m1 on (p, m2, k, a).
    CMat tau = CMat::Zero(16, 16);
    for (int r = 0; r < 16; ++r)
      for (int cc = 0; cc < 16; ++cc) {
        auto [pr, rr] = split(r);
        auto [pc, rc] = split(cc);
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y)
            tau(r, cc) += e[o][x] * e[o][y] * p.sigma0((pr << 4) | (x << 3) | rr, (pc << 4) | (y << 3) | rc);
      }
    // rho1 = sum_o |o><o|_m1 (x) tau_o
    for (int r = 0; r < 16; ++r)
      for (int cc = 0; cc < 16; ++cc) {
        auto [pr, rr] = split(r);
        auto [pc, rc] = split(cc);
        rho1((pr << 4) | (o << 3) | rr, (pc << 4) | (o << 3) | rc) += tau(r, cc);
      }
    // rho2 = sum_o |o><o|_m1 (x) |o><o|_m2 (x) Tr_m2 tau_o
    const RegisterLayout tl{{"p", "m2", "k", "a"}, {2, 2, 2, 2}};
    const CMat t = partial_trace(tau, tl, std::vector<std::string>{"m2"});  // on p, k, a
    for (int r = 0; r < 8; ++r)
      for (int cc = 0; cc < 8; ++cc)
        rho2(xidx(r >> 2, o, o, (r >> 1) & 1, r & 1), xidx(cc >> 2, o, o, (cc >> 1) & 1, cc & 1)) += t(r, cc);
  }
  CMat rho = CMat::Zero(64, 64);
  rho.topLeftCorner(32, 32) = rho1;
  rho.bottomRightCorner(32, 32) = rho2;
  return rho;
}

Eigen::VectorXd hvec(const CMat& h) {
  const int d = static_cast<int>(h.rows());
  Eigen::VectorXd v(d * d);
  int at = 0;
  for (int i = 0; i < d; ++i) v(at++) = h(i, i).real();
  const double r2 = std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) v(at++) = r2 * h(i, j).real();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) v(at++) = r2 * h(i, j).imag();
  return v;
}

CMat hunvec(const Eigen::VectorXd& v, int d) {
  if (v.size() != d * d) fail(Errc::LengthMismatch, "vector does not match the matrix size");
  CMat h = CMat::Zero(d, d);
  int at = 0;
  for (int i = 0; i < d; ++i) h(i, i) = v(at++);
  const double r2 = std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) h(i, j) = v(at++) / r2;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      h(i, j) += cplx(0.0, v(at++) / r2);
      h(j, i) = std::conj(h(i, j));
    }
  return h;
}

double inner(const CMat& a, const CMat& b) { return (a.adjoint() * b).trace().real(); }

double inner(const std::vector<CMat>& a, const std::vector<CMat>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += inner(a[i], b[i]);
  return s;
}

}  // namespace tmac::sdp

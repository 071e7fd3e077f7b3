#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "tmac/core/error.hpp"
#include "tmac/core/rng.hpp"
#include "tmac/sdp/certificate.hpp"
#include "tmac/sdp/dump.hpp"

using namespace tmac;
using namespace tmac::sdp;

namespace {

const double kAlpha = std::pow(std::cos(M_PI / 8), 2);

CMat random_matrix(int n, Rng& rng) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {rng.uniform01() - 0.5, rng.uniform01() - 0.5};
  return m;
}

// Index-by-index partial trace, written independently of the library's digit
// splitting: decode every (row, col) into per-factor digits and accumulate
// only when the traced digits agree.
CMat loop_partial_trace(const CMat& m, const std::vector<int>& dims, const std::vector<bool>& traced) {
  const int nf = static_cast<int>(dims.size());
  int kept = 1;
  for (int f = 0; f < nf; ++f)
    if (!traced[f]) kept *= dims[f];
  CMat out = CMat::Zero(kept, kept);
  auto digits = [&](int idx) {
    std::vector<int> d(nf);
    for (int f = nf - 1; f >= 0; --f) {
      d[f] = idx % dims[f];
      idx /= dims[f];
    }
    return d;
  };
  auto kept_index = [&](const std::vector<int>& d) {
    int k = 0;
    for (int f = 0; f < nf; ++f)
      if (!traced[f]) k = k * dims[f] + d[f];
    return k;
  };
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const auto dr = digits(r), dc = digits(c);
      bool same = true;
      for (int f = 0; f < nf; ++f) same = same && (!traced[f] || dr[f] == dc[f]);
      if (same) out(kept_index(dr), kept_index(dc)) += m(r, c);
    }
  return out;
}

struct Solved {
  SdpProblem p;
  SdpSolution s;
};

const Solved& solved(int m) {
  static Solved cache[2] = {{build_weak_del_sdp(0), {}}, {build_weak_del_sdp(1), {}}};
  static bool done[2] = {false, false};
  if (!done[m]) {
    cache[m].s = solve_sdp(cache[m].p);
    done[m] = true;
  }
  return cache[m];
}

}  // namespace

TEST(PartialTrace, MatchesIndexLoop) {
  Rng rng(1);
  const std::vector<RegisterLayout> layouts = {RegisterLayout::weak_del(), {{"a", "b", "c"}, {2, 3, 2}},
                                               {{"x", "y"}, {3, 4}}};
  for (const auto& lay : layouts) {
    const int n = lay.total();
    const CMat m = random_matrix(n, rng);
    const int nf = static_cast<int>(lay.dims.size());
    for (int mask = 0; mask < (1 << nf); ++mask) {
      std::vector<int> over;
      std::vector<bool> traced(nf, false);
      for (int f = 0; f < nf; ++f)
        if (mask >> f & 1) {
          over.push_back(f);
          traced[f] = true;
        }
      const CMat got = partial_trace(m, lay, over);
      const CMat want = loop_partial_trace(m, lay.dims, traced);
      ASSERT_EQ(got.rows(), want.rows());
      EXPECT_LE((got - want).cwiseAbs().maxCoeff(), 1e-12) << "mask " << mask;
    }
  }
}

TEST(PartialTrace, Errors) {
  const auto lay = RegisterLayout::weak_del_x();
  const CMat m = CMat::Identity(32, 32);
  EXPECT_NEAR(partial_trace(m, lay, std::vector<std::string>{"p", "m1"}).trace().real(), 32.0, 1e-12);
  EXPECT_THROW(partial_trace(m, lay, std::vector<std::string>{"nope"}), Error);
  EXPECT_THROW(partial_trace(m, lay, std::vector<int>{1, 1}), Error);
  EXPECT_THROW(partial_trace(m, lay, std::vector<int>{7}), Error);
  EXPECT_THROW(partial_trace(CMat::Identity(31, 31), lay, std::vector<int>{0}), Error);
  EXPECT_THROW(lay.factor("Z"), Error);
}

TEST(Hvec, IsometricRoundTrip) {
  Rng rng(2);
  const CMat a0 = random_matrix(5, rng), b0 = random_matrix(5, rng);
  const CMat a = a0 + a0.adjoint(), b = b0 + b0.adjoint();
  EXPECT_NEAR(hvec(a).dot(hvec(b)), inner(a, b), 1e-12);
  EXPECT_LE((hunvec(hvec(a), 5) - a).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(hvec(a).size(), hdim(5));
}

TEST(Problem, Structure) {
  for (int m : {0, 1}) {
    const SdpProblem p = build_weak_del_sdp(m);
    EXPECT_EQ(p.layout.total(), 64);
    EXPECT_EQ(p.phi.block_dims, (std::vector<int>{16, 16, 1, 1}));
    EXPECT_NEAR(p.Pi.trace().real(), 12.0, 1e-12);
    EXPECT_LE((p.Pi * p.Pi - p.Pi).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(p.sigma0.trace().real(), 1.0, 1e-12);
    EXPECT_LE((p.sigma0 * p.sigma0 - p.sigma0).cwiseAbs().maxCoeff(), 1e-12);  // pure
    EXPECT_TRUE(is_hermitian(p.Q));
    // Phi*(unit) = I
    EXPECT_LE((p.phi.adjoint(p.unit) - CMat::Identity(64, 64)).cwiseAbs().maxCoeff(), 1e-12);
    for (const auto& e : p.exposing) EXPECT_NEAR(inner(p.R, e), 0.0, 1e-12);
  }
  EXPECT_THROW(build_weak_del_sdp(2), Error);
}

TEST(Problem, AdjointIdentity) {
  Rng rng(3);
  const SdpProblem p = build_weak_del_sdp(1);
  const CMat x0 = random_matrix(64, rng);
  const CMat x = x0 + x0.adjoint();
  std::vector<CMat> y;
  for (int d : p.phi.block_dims) {
    const CMat y0 = random_matrix(d, rng);
    y.push_back(y0 + y0.adjoint());
  }
  EXPECT_NEAR(inner(p.phi.apply(x), y), inner(x, p.phi.adjoint(y)), 1e-10);
}

TEST(Problem, BreidbartPointIsFeasible) {
  for (int m : {0, 1}) {
    const SdpProblem p = build_weak_del_sdp(m);
    const CMat rho = breidbart_primal_point(p);
    EXPECT_LE(constraint_residual(p, rho), 1e-12);
    EXPECT_GE(min_eigenvalue(rho), -1e-12);
    EXPECT_NEAR(inner(p.Q, rho), kAlpha, 1e-12);
  }
}

TEST(Solver, ValueBothGames) {
  for (int m : {0, 1}) {
    const auto& [p, s] = solved(m);
    EXPECT_NEAR(s.value, 0.853553, 1e-3) << m;
    EXPECT_GE(s.value, inner(p.Q, breidbart_primal_point(p)) - 1e-6);
    EXPECT_LE(s.primal_residual, 1e-6);
    EXPECT_LE(s.gap, 1e-5);
    EXPECT_GE(s.dual_slack, -1e-4);
    EXPECT_LE(s.value, s.dual_value + 1e-5);  // weak duality
    EXPECT_GE(s.min_eig_rho, -1e-6);
    EXPECT_TRUE(is_hermitian(s.rho, 1e-9));
  }
}

TEST(Solver, TwoChannelReading) {
  const auto& [p, s] = solved(1);
  const CMat rho1 = s.rho.topLeftCorner(32, 32), rho2 = s.rho.bottomRightCorner(32, 32);
  EXPECT_NEAR(rho1.trace().real(), 1.0, 1e-6);
  EXPECT_NEAR(rho2.trace().real(), 1.0, 1e-6);
  const auto& x = p.layout.without({0});
  const CMat c1 = partial_trace(rho1, x, std::vector<std::string>{"m1"});
  const CMat c0 = partial_trace(p.sigma0, x, std::vector<std::string>{"m1"});
  EXPECT_LE((c1 - c0).cwiseAbs().maxCoeff(), 1e-6);
  const CMat d2 = partial_trace(rho2, x, std::vector<std::string>{"m2"});
  const CMat d1 = partial_trace(rho1, x, std::vector<std::string>{"m2"});
  EXPECT_LE((d2 - d1).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Solver, Deterministic) {
  const SdpProblem p = build_weak_del_sdp(1);
  const SdpSolution a = solve_sdp(p), b = solve_sdp(p);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ((a.rho - b.rho).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Solver, IterationCapRaises) {
  const SdpProblem p = build_weak_del_sdp(1);
  try {
    solve_sdp(p, {1e-6, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotConverged);
    EXPECT_NE(std::string(e.what()).find("residual"), std::string::npos);
  }
}

TEST(Certificate, SolverDualCertifies) {
  const auto& [p, s] = solved(1);
  const auto c = check_dual_certificate(p, s.Y, 1e-4);
  EXPECT_TRUE(c.feasible);
  EXPECT_GE(c.slack, -1e-4);
  EXPECT_LE(c.bound, 0.853553 + 1e-3);
  EXPECT_GE(c.bound, kAlpha - 1e-9);
}

TEST(Certificate, ScaledFeasiblePointPasses) {
  const auto& [p, s] = solved(1);
  std::vector<CMat> y = s.Y;
  const auto base = check_dual_certificate(p, y, 1e-4);
  for (std::size_t b = 0; b < y.size(); ++b) y[b] = 10.0 * s.Y[b] + p.unit[b];
  const auto c = check_dual_certificate(p, y, 0.0);
  EXPECT_TRUE(c.feasible);
  EXPECT_GT(c.value, base.value);
}

TEST(Certificate, NegativeShiftDetected) {
  const auto& [p, s] = solved(1);
  for (std::size_t blk : {2u, 3u}) {
    std::vector<CMat> y = s.Y;
    y[blk] -= 1e-2 * CMat::Identity(y[blk].rows(), y[blk].cols());
    const auto c = check_dual_certificate(p, y, 1e-4);
    EXPECT_FALSE(c.feasible) << blk;
    EXPECT_LT(c.slack, -5e-3) << blk;
  }
  std::vector<CMat> bad = s.Y;
  bad[0](0, 1) += 1.0;
  EXPECT_THROW(check_dual_certificate(p, bad, 1e-4), Error);
  bad.pop_back();
  EXPECT_THROW(check_dual_certificate(p, bad, 1e-4), Error);
}

TEST(Tensor, SquareCertificate) {
  const auto& [p, s] = solved(1);
  const TensorReport t = tensor_power_check(p, s, 2);
  EXPECT_TRUE(t.passed);
  EXPECT_LE(t.primal_residual, 1e-6);
  EXPECT_NEAR(t.objective, s.value * s.value, 1e-9);
  EXPECT_GE(t.dual_slack, -1e-3);
  EXPECT_NEAR(t.certified, kAlpha * kAlpha, 2e-3);
  EXPECT_THROW(tensor_power_check(p, s, 3), Error);
}

TEST(Dump, Shape) {
  const auto& [p, s] = solved(0);
  const auto j = dump(p, s);
  EXPECT_EQ(j["problem"]["m"], 0);
  EXPECT_EQ(j["problem"]["dimension"], 64);
  EXPECT_NEAR(j["solution"]["value"].get<double>(), s.value, 1e-15);
}

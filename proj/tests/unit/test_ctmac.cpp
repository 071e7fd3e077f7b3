#include <gtest/gtest.h>

#include <cmath>

#include "tmac/core/error.hpp"
#include "tmac/ctmac/ctmac.hpp"
#include "tmac/experiments/experiments.hpp"

using namespace tmac;

TEST(Ctmac, HonestSignVerify) {
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    const auto k = ctmac::key_gen(32, rng);
    auto tok = ctmac::token_gen(k);
    const bool m = rng.bit();
    const auto sig = ctmac::sign(tok, m, rng);
    ASSERT_TRUE(ctmac::accepts(k, m, sig, 0.0));
    const auto rep = ctmac::verify(k, m, sig, 0.0);
    EXPECT_TRUE(rep.accepted);
    EXPECT_EQ(rep.miss_size, 0u);
    EXPECT_EQ(rep.cons, m ? k.b : ~k.b);
  }
}

TEST(Ctmac, TokenIsSingleUse) {
  Rng rng(2);
  const auto k = ctmac::key_gen(8, rng);
  auto tok = ctmac::token_gen(k);
  ctmac::sign(tok, false, rng);
  EXPECT_TRUE(tok.consumed());
  try {
    ctmac::sign(tok, true, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TokenConsumed);
  }
}

TEST(Ctmac, ThresholdIsRealValued) {
  EXPECT_TRUE(ctmac::within(7, 0.07, 100));
  EXPECT_FALSE(ctmac::within(8, 0.07, 100));
  EXPECT_TRUE(ctmac::within(0, 0.07, 10));
  EXPECT_FALSE(ctmac::within(1, 0.07, 10));
}

TEST(Ctmac, MissCountByHand) {
  ctmac::SecretKey k{BitString::from_string("0101"), BitString::from_string("0011")};
  // m = 0 checks coordinates 0 and 1, where a = 0, 1.
  EXPECT_EQ(ctmac::miss_count(k, false, BitString::from_string("0111")), 0u);
  EXPECT_EQ(ctmac::miss_count(k, false, BitString::from_string("1011")), 2u);
  EXPECT_EQ(ctmac::miss_count(k, true, BitString::from_string("0000")), 1u);
  const auto rep = ctmac::verify(k, true, BitString::from_string("0000"), 0.25);
  EXPECT_EQ(rep.cons_size, 2u);
  EXPECT_EQ(rep.miss.to_string(), "0001");
  EXPECT_TRUE(rep.accepted);
  EXPECT_THROW(ctmac::verify(k, true, BitString(3), 0.0), Error);
}

TEST(Ctmac, WrongDocumentRarelyAccepted) {
  Rng rng(3);
  int acc = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto k = ctmac::key_gen(64, rng);
    auto tok = ctmac::token_gen(k);
    const auto sig = ctmac::sign(tok, false, rng);
    acc += ctmac::accepts(k, true, sig, 0.07);
  }
  // Miss count is Bin(64, 1/4) in this case as well.
  EXPECT_LE(acc, 2);
}

TEST(Ctmac, HexRoundTrip) {
  Rng rng(4);
  const auto k = ctmac::key_gen(37, rng);
  EXPECT_EQ(ctmac::key_from_hex(ctmac::key_to_hex(k)), k);
  const auto s = BitString::random(37, rng);
  EXPECT_EQ(ctmac::signature_from_hex(ctmac::signature_to_hex(s)), s);
  EXPECT_THROW(ctmac::key_from_hex("zz"), Error);
  const auto tok = ctmac::token_gen(k);
  const auto text = ctmac::debug_token_to_string(tok, ctmac::InsecureDebug{});
  EXPECT_EQ(ctmac::debug_token_from_string(text, ctmac::InsecureDebug{}).qubits(), tok.qubits());
}

TEST(Ctmac, ZeroLengthRejected) {
  Rng rng(5);
  EXPECT_THROW(ctmac::key_gen(0, rng), Error);
}

namespace {

double log_choose(double n, double k) { return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1); }

double cdf(std::uint64_t k, std::uint64_t n, double p) {
  double s = 0;
  for (std::uint64_t i = 0; i <= std::min(k, n); ++i)
    s += std::exp(log_choose(n, i) + i * std::log(p) + (n - i) * std::log1p(-p));
  return s;
}

}  // namespace

TEST(Ctmac, NoisyAcceptanceMatchesBinomialMixture) {
  // P[accept] = sum_c Bin(c; lambda, 1/2) * P[Bin(c, p) <= floor(eta*lambda)]
  const std::size_t lambda = 200;
  const double eta = 0.07, p = 0.10;
  const auto thr = static_cast<std::uint64_t>(std::floor(eta * lambda));
  double expect = 0;
  for (std::size_t c = 0; c <= lambda; ++c) {
    expect += std::exp(log_choose(lambda, c) - lambda * std::log(2.0)) * cdf(thr, c, p);
  }
  const std::uint64_t n = 20000;
  const auto e = experiments::ctmac_noise_acceptance(lambda, eta, {p, bb84::NoiseMap::PauliY}, n, Rng(6));
  EXPECT_NEAR(e.rate, expect, 4 * std::sqrt(expect * (1 - expect) / n));
}

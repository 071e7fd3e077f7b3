#include <gtest/gtest.h>

#include <bit>

#include "tmac/core/rng.hpp"
#include "tmac/crypto/gf2n.hpp"
#include "tmac/kernels/bitops.hpp"

using namespace tmac;

namespace {

std::vector<std::uint64_t> words(std::size_t n, Rng& r) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = r.next_u64();
  return w;
}

// Bitwise shift-and-add, independent of both kernel tables.
std::uint64_t gf64_ref(std::uint64_t a, std::uint64_t b) {
  std::uint64_t acc = 0;
  for (int i = 0; i < 64; ++i) {
    if ((b >> i) & 1) acc ^= a;
    const bool carry = a >> 63;
    a <<= 1;
    if (carry) a ^= 0x1b;
  }
  return acc;
}

}  // namespace

TEST(Kernels, ScalarMatchesReference) {
  Rng r(11);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 64u}) {
    const auto x = words(n, r), y = words(n, r), m = words(n, r);
    std::uint64_t pc = 0, mx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      pc += std::popcount(x[i]);
      mx += std::popcount((x[i] ^ y[i]) & m[i]);
    }
    EXPECT_EQ(kernels::scalar().popcount(x.data(), n), pc);
    EXPECT_EQ(kernels::scalar().masked_xor_popcount(x.data(), y.data(), m.data(), n), mx);
  }
  for (int i = 0; i < 1000; ++i) {
    const auto a = r.next_u64(), b = r.next_u64();
    EXPECT_EQ(kernels::scalar().gf64_mul(a, b), gf64_ref(a, b));
  }
}

TEST(Kernels, SimdMatchesScalar) {
  const kernels::Table* v = kernels::simd();
  if (!v) GTEST_SKIP() << "no SIMD table on this machine";
  Rng r(12);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 157u, 1024u}) {
    const auto x = words(n, r), y = words(n, r), m = words(n, r);
    EXPECT_EQ(v->popcount(x.data(), n), kernels::scalar().popcount(x.data(), n)) << n;
    EXPECT_EQ(v->masked_xor_popcount(x.data(), y.data(), m.data(), n),
              kernels::scalar().masked_xor_popcount(x.data(), y.data(), m.data(), n))
        << n;
    std::vector<std::uint64_t> o1(n), o2(n);
    v->select(o1.data(), x.data(), y.data(), m.data(), n);
    kernels::scalar().select(o2.data(), x.data(), y.data(), m.data(), n);
    EXPECT_EQ(o1, o2) << n;
    // in-place aliasing
    auto xa = x;
    v->select(xa.data(), xa.data(), y.data(), m.data(), n);
    EXPECT_EQ(xa, o2) << n;
  }
  for (int i = 0; i < 10000; ++i) {
    const auto a = r.next_u64(), b = r.next_u64();
    ASSERT_EQ(v->gf64_mul(a, b), kernels::scalar().gf64_mul(a, b));
  }
}

TEST(Kernels, ForceScalarPinsDispatch) {
  kernels::force_scalar(true);
  EXPECT_STREQ(kernels::active().name, kernels::scalar().name);
  kernels::force_scalar(false);
  if (kernels::simd()) {
    EXPECT_STREQ(kernels::active().name, kernels::simd()->name);
  }
}

TEST(Kernels, Gf8) {
  // 0x53 * 0xca = 1 in the AES field.
  EXPECT_EQ(crypto::gf8_mul(0x53, 0xca), 1);
  EXPECT_EQ(crypto::gf_mul(64, 2, std::uint64_t{1} << 63), 0x1bu);
}

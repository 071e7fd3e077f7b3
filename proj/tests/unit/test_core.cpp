#include <gtest/gtest.h>

#include "tmac/core/bitstring.hpp"
#include "tmac/core/bytes.hpp"
#include "tmac/core/error.hpp"
#include "tmac/core/rng.hpp"

using namespace tmac;

TEST(Rng, SplitIsCounterBased) {
  Rng a(7), b(7);
  a.next_u64();
  a.next_u64();
  EXPECT_EQ(a.split(3).next_u64(), b.split(3).next_u64());
  EXPECT_NE(b.split(3).next_u64(), b.split(4).next_u64());
  EXPECT_EQ(Rng::for_trial(7, 3).next_u64(), Rng(7).split(3).next_u64());
}

TEST(Rng, Mt19937Reference) {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  std::mt19937_64 e;
  e.discard(9999);
  EXPECT_EQ(e(), 9981545732273789042ULL);
}

TEST(Rng, BelowStaysInRange) {
  Rng r(1);
  std::vector<int> hist(5, 0);
  for (int i = 0; i < 50000; ++i) ++hist[r.below(5)];
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
}

TEST(Rng, GeometricMean) {
  Rng r(2);
  const double p = 0.01;
  double s = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) s += static_cast<double>(r.geometric(p));
  EXPECT_NEAR(s / n, (1 - p) / p, 3.0);
  EXPECT_EQ(r.geometric(1.0), 0u);
}

TEST(BitString, StringRoundTrip) {
  const auto b = BitString::from_string("0110100");
  EXPECT_EQ(b.size(), 7u);
  EXPECT_EQ(b.to_string(), "0110100");
  EXPECT_EQ(b.count(), 3u);
  EXPECT_EQ(b.indices(), (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_THROW(BitString::from_string("01x"), Error);
}

TEST(BitString, BytesAreMsbFirst) {
  const auto b = BitString::from_string("10000000" "01");
  const Bytes raw = b.to_bytes();
  ASSERT_EQ(raw.size(), 2u);
  EXPECT_EQ(raw[0], 0x80);
  EXPECT_EQ(raw[1], 0x40);
  EXPECT_EQ(BitString::from_bytes(raw, 10), b);
  EXPECT_EQ(BitString::from_hex(b.to_hex(), 10), b);
}

TEST(BitString, TailStaysClear) {
  Rng r(3);
  for (std::size_t n : {1u, 63u, 64u, 65u, 130u}) {
    const auto x = BitString::random(n, r);
    const auto y = ~x;
    EXPECT_EQ(x.count() + y.count(), n);
    if (n % 64) {
      EXPECT_EQ(y.words()[y.word_count() - 1] >> (n % 64), 0u);
    }
  }
}

TEST(BitString, ConcatSlice) {
  Rng r(4);
  const auto a = BitString::random(70, r), b = BitString::random(33, r);
  const auto c = a.concat(b);
  EXPECT_EQ(c.size(), 103u);
  EXPECT_EQ(c.slice(0, 70), a);
  EXPECT_EQ(c.slice(70, 33), b);
  EXPECT_EQ(c.to_string(), a.to_string() + b.to_string());
}

TEST(BitString, Ops) {
  const auto a = BitString::from_string("1100"), b = BitString::from_string("1010");
  EXPECT_EQ((a ^ b).to_string(), "0110");
  EXPECT_EQ((a & b).to_string(), "1000");
  EXPECT_EQ((a | b).to_string(), "1110");
  EXPECT_THROW(a ^ BitString(3), Error);
  EXPECT_EQ(BitString::from_u64(5, 4).to_string(), "1010");
}

TEST(Bytes, BigEndian) {
  Bytes b;
  put_u32be(b, 0x01020304);
  put_u64be(b, 0x1122334455667788ULL);
  EXPECT_EQ(to_hex(b), "010203041122334455667788");
  EXPECT_EQ(get_u32be(b.data()), 0x01020304u);
  EXPECT_EQ(get_u64be(b.data() + 4), 0x1122334455667788ULL);
  EXPECT_EQ(from_hex("0aff"), (Bytes{0x0a, 0xff}));
  EXPECT_THROW(from_hex("abc"), Error);
}

#include <bit>

#include "tmac/kernels/bitops.hpp"

namespace tmac::kernels::detail {

std::uint64_t popcount_scalar(const std::uint64_t* w, std::size_t n) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount(w[i]);
  return c;
}

std::uint64_t masked_xor_popcount_scalar(const std::uint64_t* x, const std::uint64_t* y,
                                         const std::uint64_t* mask, std::size_t n) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount((x[i] ^ y[i]) & mask[i]);
  return c;
}

void select_scalar(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                   const std::uint64_t* sel, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = (a[i] & sel[i]) | (b[i] & ~sel[i]);
}

// Fold the high half of a 128-bit carry-less product back into 64 bits.
static inline std::uint64_t reduce(std::uint64_t hi, std::uint64_t lo) {
  // x^64 = x^4 + x^3 + x + 1; bits shifted past 63 go round once more.
  std::uint64_t t = (hi >> 63) ^ (hi >> 61) ^ (hi >> 60);
  lo ^= hi ^ (hi << 1) ^ (hi << 3) ^ (hi << 4);
  lo ^= t ^ (t << 1) ^ (t << 3) ^ (t << 4);
  return lo;
}

std::uint64_t gf64_mul_scalar(std::uint64_t a, std::uint64_t b) {
  std::uint64_t hi = 0, lo = 0;
  for (int i = 0; i < 64; ++i) {
    if ((b >> i) & 1) {
      lo ^= a << i;
      if (i) hi ^= a >> (64 - i);
    }
  }
  return reduce(hi, lo);
}

}  // namespace tmac::kernels::detail

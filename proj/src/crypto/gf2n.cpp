#include "tmac/crypto/gf2n.hpp"

#include "tmac/core/error.hpp"
#include "tmac/kernels/bitops.hpp"

namespace tmac::crypto {

std::uint8_t gf8_mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a = static_cast<std::uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1b : 0));
    b >>= 1;
  }
  return r;
}

std::uint64_t gf64_mul(std::uint64_t a, std::uint64_t b) { return kernels::gf64_mul(a, b); }

std::uint64_t gf_mask(unsigned n) {
  if (n == 64) return ~std::uint64_t{0};
  if (n == 8) return 0xff;
  fail(Errc::InvalidArgument, "field size must be 8 or 64");
}

std::uint64_t gf_mul(unsigned n, std::uint64_t a, std::uint64_t b) {
  if (n == 64) return gf64_mul(a, b);
  if (n == 8) return gf8_mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
  fail(Errc::InvalidArgument, "field size must be 8 or 64");
}

}  // namespace tmac::crypto

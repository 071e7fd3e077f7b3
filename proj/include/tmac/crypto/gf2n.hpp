#pragma once

#include <cstdint>

namespace tmac::crypto {

/// GF(2^8) modulo x^8 + x^4 + x^3 + x + 1.
std::uint8_t gf8_mul(std::uint8_t a, std::uint8_t b);

/// GF(2^64) modulo x^64 + x^4 + x^3 + x + 1 (dispatches to PCLMUL when present).
std::uint64_t gf64_mul(std::uint64_t a, std::uint64_t b);

/// Multiplication in GF(2^n) for n in {8, 64}; elements are the low n bits.
std::uint64_t gf_mul(unsigned n, std::uint64_t a, std::uint64_t b);
std::uint64_t gf_mask(unsigned n);

}  // namespace tmac::crypto

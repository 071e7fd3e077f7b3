#pragma once

// Word-level kernels behind BB84 measurement and threshold verification.
// Each has a portable scalar reference and an AVX2 (or PCLMUL) variant; the
// active table is picked once from cpuid and can be pinned to scalar for tests.

#include <cstddef>
#include <cstdint>

namespace tmac::kernels {

struct Table {
  const char* name;
  // sum of popcount(w[i])
  std::uint64_t (*popcount)(const std::uint64_t* w, std::size_t n);
  // sum of popcount((x[i] ^ y[i]) & mask[i])
  std::uint64_t (*masked_xor_popcount)(const std::uint64_t* x, const std::uint64_t* y,
                                       const std::uint64_t* mask, std::size_t n);
  // out[i] = (a[i] & sel[i]) | (b[i] & ~sel[i]); out may alias any input
  void (*select)(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                 const std::uint64_t* sel, std::size_t n);
  // product in GF(2^64) modulo x^64 + x^4 + x^3 + x + 1
  std::uint64_t (*gf64_mul)(std::uint64_t a, std::uint64_t b);
};

const Table& scalar();
// nullptr when the CPU (or the build) lacks the instructions.
const Table* simd();
const Table& active();

// Pin dispatch to the scalar table (true) or back to cpu detection (false).
void force_scalar(bool on);

inline std::uint64_t popcount(const std::uint64_t* w, std::size_t n) { return active().popcount(w, n); }
inline std::uint64_t masked_xor_popcount(const std::uint64_t* x, const std::uint64_t* y,
                                         const std::uint64_t* mask, std::size_t n) {
  return active().masked_xor_popcount(x, y, mask, n);
}
inline void select(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                   const std::uint64_t* sel, std::size_t n) {
  active().select(out, a, b, sel, n);
}
inline std::uint64_t gf64_mul(std::uint64_t a, std::uint64_t b) { return active().gf64_mul(a, b); }

namespace detail {
std::uint64_t popcount_scalar(const std::uint64_t*, std::size_t);
std::uint64_t masked_xor_popcount_scalar(const std::uint64_t*, const std::uint64_t*, const std::uint64_t*,
                                         std::size_t);
void select_scalar(std::uint64_t*, const std::uint64_t*, const std::uint64_t*, const std::uint64_t*,
                   std::size_t);
std::uint64_t gf64_mul_scalar(std::uint64_t, std::uint64_t);

std::uint64_t popcount_avx2(const std::uint64_t*, std::size_t);
std::uint64_t masked_xor_popcount_avx2(const std::uint64_t*, const std::uint64_t*, const std::uint64_t*,
                                       std::size_t);
void select_avx2(std::uint64_t*, const std::uint64_t*, const std::uint64_t*, const std::uint64_t*,
                 std::size_t);
std::uint64_t gf64_mul_clmul(std::uint64_t, std::uint64_t);
}  // namespace detail

}  // namespace tmac::kernels

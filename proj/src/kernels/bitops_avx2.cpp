// Compiled with -mavx2 -mpclmul; only reached after a cpuid check.
#include <immintrin.h>

#include <bit>

#include "tmac/kernels/bitops.hpp"

namespace tmac::kernels::detail {

namespace {

// Nibble-table popcount (Mula): per-byte counts, then horizontal byte sums.
inline __m256i popcnt256(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3,
                                       1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::uint64_t hsum(__m256i acc) {
  return static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) + _mm256_extract_epi64(acc, 1) +
         _mm256_extract_epi64(acc, 2) + _mm256_extract_epi64(acc, 3);
}

inline __m256i load(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

}  // namespace

std::uint64_t popcount_avx2(const std::uint64_t* w, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, popcnt256(load(w + i)));
  std::uint64_t c = hsum(acc);
  for (; i < n; ++i) c += std::popcount(w[i]);
  return c;
}

std::uint64_t masked_xor_popcount_avx2(const std::uint64_t* x, const std::uint64_t* y,
                                       const std::uint64_t* mask, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_and_si256(_mm256_xor_si256(load(x + i), load(y + i)), load(mask + i));
    acc = _mm256_add_epi64(acc, popcnt256(v));
  }
  std::uint64_t c = hsum(acc);
  for (; i < n; ++i) c += std::popcount((x[i] ^ y[i]) & mask[i]);
  return c;
}

void select_avx2(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                 const std::uint64_t* sel, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i s = load(sel + i);
    __m256i v = _mm256_or_si256(_mm256_and_si256(load(a + i), s), _mm256_andnot_si256(s, load(b + i)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  for (; i < n; ++i) out[i] = (a[i] & sel[i]) | (b[i] & ~sel[i]);
}

std::uint64_t gf64_mul_clmul(std::uint64_t a, std::uint64_t b) {
  const __m128i r = _mm_cvtsi64_si128(0x1b);
  __m128i p = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                   _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
  // hi * (x^4+x^3+x+1) is at most 68 bits; fold its top once more.
  __m128i f = _mm_clmulepi64_si128(p, r, 0x01);
  __m128i g = _mm_clmulepi64_si128(f, r, 0x01);
  __m128i lo = _mm_xor_si128(_mm_xor_si128(p, f), g);
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(lo));
}

}  // namespace tmac::kernels::detail

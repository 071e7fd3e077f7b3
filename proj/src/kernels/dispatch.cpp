#include <atomic>

#include "tmac/kernels/bitops.hpp"

namespace tmac::kernels {

namespace {

const Table kScalar{"scalar", detail::popcount_scalar, detail::masked_xor_popcount_scalar,
                    detail::select_scalar, detail::gf64_mul_scalar};

#if defined(TMAC_HAVE_AVX2)
const Table kSimd{"avx2", detail::popcount_avx2, detail::masked_xor_popcount_avx2, detail::select_avx2,
                  detail::gf64_mul_clmul};

bool cpu_ok() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("pclmul");
}
#endif

std::atomic<bool> g_force_scalar{false};

}  // namespace

const Table& scalar() { return kScalar; }

const Table* simd() {
#if defined(TMAC_HAVE_AVX2)
  static const bool ok = cpu_ok();
  return ok ? &kSimd : nullptr;
#else
  return nullptr;
#endif
}

const Table& active() {
  if (g_force_scalar.load(std::memory_order_relaxed)) return kScalar;
  const Table* s = simd();
  return s ? *s : kScalar;
}

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

}  // namespace tmac::kernels

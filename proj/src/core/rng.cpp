#include "tmac/core/rng.hpp"

#include <cmath>
#include <limits>

namespace tmac {

std::uint64_t Rng::geometric(double p) {
  if (p >= 1.0) return 0;
  if (p <= 0.0) return std::numeric_limits<std::uint64_t>::max();
  // 1 - U lies in (0, 1], so the log is finite.
  const double u = 1.0 - uniform01();
  const double k = std::floor(std::log(u) / std::log1p(-p));
  if (k >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(k);
}

}  // namespace tmac

#pragma once

#include <cstdint>
#include <random>

namespace tmac {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Explicit, seedable, splittable random source.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the standard,
/// so every experiment is bit-reproducible across conforming toolchains. All
/// derived draws read the raw 64-bit output directly; the implementation-
/// defined std distributions are never used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

  /// Independent stream for (this seed, index). Counter-based: the child seed
  /// depends only on the parent seed and the index, never on draws made so far.
  Rng split(std::uint64_t index) const { return Rng(mix64(seed_ ^ mix64(index + 0x5851f42d4c957f2dULL))); }

  /// Seed for trial `index` of an experiment with master seed `master`.
  static Rng for_trial(std::uint64_t master, std::uint64_t index) { return Rng(master).split(index); }

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }
  bool bit() { return (engine_() >> 63) != 0; }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform01() < p;
  }

  /// Uniform integer in [0, bound); bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Number of failures before the first success of a Bernoulli(p) sequence.
  std::uint64_t geometric(double p);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace tmac

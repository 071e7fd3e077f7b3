#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tmac/core/bytes.hpp"
#include "tmac/core/rng.hpp"

namespace tmac::crypto {

/// Carter-Wegman j-time MAC: polynomial hash over GF(2^64) masked by a
/// one-time pad. The pad index travels inside the tag so verification needs
/// no state; signing advances `counter`.
struct WcMacKey {
  std::uint64_t hash_key = 0;
  std::vector<std::uint64_t> pads;
  std::uint64_t counter = 0;
  unsigned tag_bits = 32;

  std::size_t j() const { return pads.size(); }
  Bytes serialize() const;
  static WcMacKey parse(const Bytes& b);
};

struct WcTag {
  std::uint32_t index = 0;
  std::uint64_t value = 0;

  Bytes to_bytes() const;  // u32 index || u64 value, big-endian
  static std::optional<WcTag> from_bytes(const Bytes& b);
};

WcMacKey wc_keygen(std::size_t j, std::size_t lambda, Rng& rng, unsigned tag_bits = 32);
std::uint64_t wc_hash(std::uint64_t key, const Bytes& m);
WcTag wc_sign(WcMacKey& k, const Bytes& m);  // PadExhausted after j tags
bool wc_verify(const WcMacKey& k, const Bytes& m, const WcTag& tag);

}  // namespace tmac::crypto

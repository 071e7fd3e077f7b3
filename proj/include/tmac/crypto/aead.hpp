#pragma once

#include <optional>

#include "tmac/core/bytes.hpp"
#include "tmac/core/rng.hpp"

namespace tmac::crypto {

/// Encrypt-then-MAC: SHA-256 counter-mode keystream, HMAC-SHA256 tag over nonce||body.
struct AeadKey {
  Bytes enc_key;  // 32 bytes
  Bytes mac_key;  // 32 bytes

  Bytes serialize() const;
  static AeadKey parse(const Bytes& b);
  bool operator==(const AeadKey&) const = default;
};

struct AeadCiphertext {
  static constexpr std::size_t kNonceLen = 16;
  static constexpr std::size_t kTagLen = 32;

  Bytes nonce;
  Bytes body;
  Bytes tag;

  // nonce(16) || body || tag(32)
  Bytes to_bytes() const;
  static std::optional<AeadCiphertext> from_bytes(const Bytes& b);
};

AeadKey aead_keygen(std::size_t lambda, Rng& rng);
Bytes aead_enc(const AeadKey& k, const Bytes& m, Rng& rng);
/// nullopt is the reject symbol.
std::optional<Bytes> aead_dec(const AeadKey& k, const Bytes& c);

}  // namespace tmac::crypto

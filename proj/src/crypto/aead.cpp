#include "tmac/crypto/aead.hpp"

#include "tmac/core/error.hpp"
#include "tmac/crypto/hash.hpp"

namespace tmac::crypto {

static Bytes random_bytes(std::size_t n, Rng& rng) {
  Bytes b(n);
  for (std::size_t i = 0; i < n; i += 8) {
    std::uint64_t w = rng.next_u64();
    for (std::size_t j = i; j < n && j < i + 8; ++j, w >>= 8) b[j] = static_cast<std::uint8_t>(w);
  }
  return b;
}

Bytes AeadKey::serialize() const {
  Bytes out = enc_key;
  append(out, mac_key);
  return out;
}

AeadKey AeadKey::parse(const Bytes& b) {
  if (b.size() != 64) fail(Errc::MalformedEncoding, "AEAD key must be 64 bytes");
  return {Bytes(b.begin(), b.begin() + 32), Bytes(b.begin() + 32, b.end())};
}

Bytes AeadCiphertext::to_bytes() const {
  Bytes out = nonce;
  append(out, body);
  append(out, tag);
  return out;
}

std::optional<AeadCiphertext> AeadCiphertext::from_bytes(const Bytes& b) {
  if (b.size() < kNonceLen + kTagLen) return std::nullopt;
  AeadCiphertext c;
  c.nonce.assign(b.begin(), b.begin() + kNonceLen);
  c.body.assign(b.begin() + kNonceLen, b.end() - kTagLen);
  c.tag.assign(b.end() - kTagLen, b.end());
  return c;
}

AeadKey aead_keygen(std::size_t lambda, Rng& rng) {
  if (lambda == 0) fail(Errc::ZeroLength, "lambda must be positive");
  // 256-bit subkeys regardless of lambda; lambda only gates validity here.
  return {random_bytes(32, rng), random_bytes(32, rng)};
}

static void xor_keystream(const Bytes& key, const Bytes& nonce, Bytes& data) {
  for (std::uint64_t block = 0; block * 32 < data.size(); ++block) {
    Bytes ctr;
    put_u64be(ctr, block);
    Digest ks = sha256({&key, &nonce, &ctr});
    const std::size_t base = block * 32;
    for (std::size_t j = 0; j < 32 && base + j < data.size(); ++j) data[base + j] ^= ks[j];
  }
}

Bytes aead_enc(const AeadKey& k, const Bytes& m, Rng& rng) {
  AeadCiphertext c;
  c.nonce = random_bytes(AeadCiphertext::kNonceLen, rng);
  c.body = m;
  xor_keystream(k.enc_key, c.nonce, c.body);
  Digest t = hmac_sha256(k.mac_key, {&c.nonce, &c.body});
  c.tag.assign(t.begin(), t.end());
  return c.to_bytes();
}

std::optional<Bytes> aead_dec(const AeadKey& k, const Bytes& bytes) {
  auto c = AeadCiphertext::from_bytes(bytes);
  if (!c) return std::nullopt;
  Digest t = hmac_sha256(k.mac_key, {&c->nonce, &c->body});
  if (!equal_ct(t.data(), c->tag.data(), t.size())) return std::nullopt;
  Bytes m = std::move(c->body);
  xor_keystream(k.enc_key, c->nonce, m);
  return m;
}

}  // namespace tmac::crypto

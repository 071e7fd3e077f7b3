#include "tmac/crypto/wcmac.hpp"

#include "tmac/core/error.hpp"
#include "tmac/crypto/gf2n.hpp"

namespace tmac::crypto {

static std::uint64_t tag_mask(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

Bytes WcMacKey::serialize() const {
  Bytes out;
  put_u64be(out, hash_key);
  put_u32be(out, tag_bits);
  put_u64be(out, counter);
  put_u64be(out, pads.size());
  for (auto p : pads) put_u64be(out, p);
  return out;
}

WcMacKey WcMacKey::parse(const Bytes& b) {
  if (b.size() < 28) fail(Errc::MalformedEncoding, "MAC key too short");
  WcMacKey k;
  k.hash_key = get_u64be(b.data());
  k.tag_bits = get_u32be(b.data() + 8);
  k.counter = get_u64be(b.data() + 12);
  const std::uint64_t n = get_u64be(b.data() + 20);
  if (b.size() != 28 + 8 * n || k.tag_bits == 0 || k.tag_bits > 64)
    fail(Errc::MalformedEncoding, "MAC key length mismatch");
  for (std::uint64_t i = 0; i < n; ++i) k.pads.push_back(get_u64be(b.data() + 28 + 8 * i));
  return k;
}

Bytes WcTag::to_bytes() const {
  Bytes out;
  put_u32be(out, index);
  put_u64be(out, value);
  return out;
}

std::optional<WcTag> WcTag::from_bytes(const Bytes& b) {
  if (b.size() != 12) return std::nullopt;
  return WcTag{get_u32be(b.data()), get_u64be(b.data() + 4)};
}

WcMacKey wc_keygen(std::size_t j, std::size_t lambda, Rng& rng, unsigned tag_bits) {
  if (j == 0 || lambda == 0) fail(Errc::ZeroLength, "j and lambda must be positive");
  if (tag_bits == 0 || tag_bits > 64) fail(Errc::InvalidArgument, "tag length must be 1..64 bits");
  WcMacKey k;
  k.tag_bits = tag_bits;
  k.hash_key = rng.next_u64();
  k.pads.resize(j);
  for (auto& p : k.pads) p = rng.next_u64() & tag_mask(tag_bits);
  return k;
}

// Horner over 64-bit blocks, then the byte length as a final block so that
// zero-padding cannot collide.
std::uint64_t wc_hash(std::uint64_t key, const Bytes& m) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < m.size(); i += 8) {
    std::uint64_t block = 0;
    for (std::size_t j = i; j < i + 8; ++j) block = block << 8 | (j < m.size() ? m[j] : 0);
    acc = gf64_mul(acc ^ block, key);
  }
  return gf64_mul(acc ^ m.size(), key);
}

WcTag wc_sign(WcMacKey& k, const Bytes& m) {
  if (k.counter >= k.pads.size()) fail(Errc::PadExhausted, "all one-time pads used");
  const std::uint64_t i = k.counter++;
  return {static_cast<std::uint32_t>(i), (wc_hash(k.hash_key, m) ^ k.pads[i]) & tag_mask(k.tag_bits)};
}

bool wc_verify(const WcMacKey& k, const Bytes& m, const WcTag& tag) {
  if (tag.index >= k.pads.size()) return false;
  return tag.value == ((wc_hash(k.hash_key, m) ^ k.pads[tag.index]) & tag_mask(k.tag_bits));
}

}  // namespace tmac::crypto

#include "tmac/crypto/jwise.hpp"

#include "tmac/core/error.hpp"
#include "tmac/crypto/gf2n.hpp"

namespace tmac::crypto {

JwiseHash jwise_sample(std::size_t j, unsigned n, Rng& rng) {
  if (j == 0) fail(Errc::ZeroLength, "j must be positive");
  JwiseHash h;
  h.n = n;
  const std::uint64_t mask = gf_mask(n);
  h.coeffs.resize(j);
  for (auto& c : h.coeffs) c = rng.next_u64() & mask;
  return h;
}

std::uint64_t jwise_eval(const JwiseHash& h, std::uint64_t r) {
  r &= gf_mask(h.n);
  std::uint64_t acc = 0;
  for (std::size_t i = h.coeffs.size(); i-- > 0;) acc = gf_mul(h.n, acc, r) ^ h.coeffs[i];
  return acc;
}

JCipher jenc(const JwiseHash& h, std::uint64_t m, Rng& rng) {
  JCipher c;
  c.r = rng.next_u64() & gf_mask(h.n);
  c.body = (jwise_eval(h, c.r) ^ m) & gf_mask(h.n);
  return c;
}

std::uint64_t jdec(const JwiseHash& h, const JCipher& c) { return (jwise_eval(h, c.r) ^ c.body) & gf_mask(h.n); }

Bytes JwiseKey::serialize() const {
  Bytes out;
  put_u64be(out, j);
  put_u64be(out, msg_len);
  for (const auto& h : blocks)
    for (auto c : h.coeffs) put_u64be(out, c);
  return out;
}

JwiseKey JwiseKey::parse(const Bytes& b) {
  if (b.size() < 16) fail(Errc::MalformedEncoding, "j-wise key too short");
  JwiseKey k;
  k.j = get_u64be(b.data());
  k.msg_len = get_u64be(b.data() + 8);
  const std::size_t nblocks = (k.msg_len + 7) / 8;
  if (k.j == 0 || b.size() != 16 + nblocks * k.j * 8) fail(Errc::MalformedEncoding, "j-wise key length mismatch");
  const std::uint8_t* p = b.data() + 16;
  k.blocks.resize(nblocks);
  for (auto& h : k.blocks) {
    h.n = 64;
    h.coeffs.resize(k.j);
    for (auto& c : h.coeffs) {
      c = get_u64be(p);
      p += 8;
    }
  }
  return k;
}

JwiseKey jwise_keygen(std::size_t j, std::size_t msg_len, Rng& rng) {
  JwiseKey k;
  k.j = j;
  k.msg_len = msg_len;
  k.blocks.reserve((msg_len + 7) / 8);
  for (std::size_t i = 0; i < (msg_len + 7) / 8; ++i) k.blocks.push_back(jwise_sample(j, 64, rng));
  return k;
}

Bytes jenc_bytes(const JwiseKey& k, const Bytes& m, Rng& rng) {
  if (m.size() != k.msg_len) fail(Errc::LengthMismatch, "message length differs from the key's block layout");
  const std::uint64_t r = rng.next_u64();
  Bytes padded = m;
  padded.resize(k.blocks.size() * 8, 0);
  Bytes out;
  put_u64be(out, r);
  for (std::size_t i = 0; i < k.blocks.size(); ++i)
    put_u64be(out, get_u64be(padded.data() + 8 * i) ^ jwise_eval(k.blocks[i], r));
  return out;
}

Bytes jdec_bytes(const JwiseKey& k, const Bytes& c) {
  if (c.size() != 8 + k.blocks.size() * 8) fail(Errc::MalformedEncoding, "j-wise ciphertext length mismatch");
  const std::uint64_t r = get_u64be(c.data());
  Bytes out;
  for (std::size_t i = 0; i < k.blocks.size(); ++i)
    put_u64be(out, get_u64be(c.data() + 8 + 8 * i) ^ jwise_eval(k.blocks[i], r));
  out.resize(k.msg_len);
  return out;
}

}  // namespace tmac::crypto

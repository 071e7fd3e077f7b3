#include "tmac/crypto/uowhf.hpp"

#include "tmac/core/error.hpp"
#include "tmac/crypto/hash.hpp"

namespace tmac::crypto {

UowhfIndex uowhf_index(std::size_t lambda, Rng& rng) {
  if (lambda == 0) fail(Errc::ZeroLength, "lambda must be positive");
  UowhfIndex idx;
  idx.s.resize((lambda + 7) / 8);
  for (auto& b : idx.s) b = static_cast<std::uint8_t>(rng.next_u64());
  // Exactly lambda bits: clear the unused low bits of the last byte.
  if (lambda % 8) idx.s.back() &= static_cast<std::uint8_t>(0xff << (8 - lambda % 8));
  return idx;
}

BitString uowhf_eval(const UowhfIndex& s, const Bytes& x, std::size_t out_bits) {
  Bytes out;
  Digest d = sha256({&s.s, &x});
  out.insert(out.end(), d.begin(), d.end());
  for (std::uint32_t ctr = 1; out.size() * 8 < out_bits; ++ctr) {
    Bytes c;
    put_u32be(c, ctr);
    d = sha256({&s.s, &x, &c});
    out.insert(out.end(), d.begin(), d.end());
  }
  return BitString::from_bytes(out, out_bits);
}

BitString uowhf_eval(const UowhfIndex& s, const BitString& x, std::size_t out_bits) {
  // Length-prefix the bits so strings differing only in trailing zeros hash apart.
  Bytes enc;
  put_u64be(enc, x.size());
  append(enc, x.to_bytes());
  return uowhf_eval(s, enc, out_bits);
}

}  // namespace tmac::crypto

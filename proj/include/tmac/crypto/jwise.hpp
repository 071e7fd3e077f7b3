#pragma once

#include <cstdint>
#include <vector>

#include "tmac/core/bytes.hpp"
#include "tmac/core/rng.hpp"

namespace tmac::crypto {

/// Random polynomial of degree j-1 over GF(2^n); any j distinct points map to
/// independent uniform values.
struct JwiseHash {
  unsigned n = 64;
  std::vector<std::uint64_t> coeffs;  // c_0 .. c_{j-1}

  std::size_t j() const { return coeffs.size(); }
};

JwiseHash jwise_sample(std::size_t j, unsigned n, Rng& rng);
std::uint64_t jwise_eval(const JwiseHash& h, std::uint64_t r);

struct JCipher {
  std::uint64_t body = 0;
  std::uint64_t r = 0;
};

/// (h(r) xor m, r) with fresh r.
JCipher jenc(const JwiseHash& h, std::uint64_t m, Rng& rng);
std::uint64_t jdec(const JwiseHash& h, const JCipher& c);

/// Block-wise j-secret encryption of a byte string: one polynomial per 64-bit
/// block, one shared r per ciphertext.
struct JwiseKey {
  std::size_t j = 0;
  std::size_t msg_len = 0;  // bytes
  std::vector<JwiseHash> blocks;

  Bytes serialize() const;
  static JwiseKey parse(const Bytes& b);
};

JwiseKey jwise_keygen(std::size_t j, std::size_t msg_len, Rng& rng);
// r(8) || padded body; throws LengthMismatch on wrong message length
Bytes jenc_bytes(const JwiseKey& k, const Bytes& m, Rng& rng);
Bytes jdec_bytes(const JwiseKey& k, const Bytes& c);

}  // namespace tmac::crypto

#pragma once

#include <cstddef>

#include "tmac/core/bitstring.hpp"
#include "tmac/core/bytes.hpp"
#include "tmac/core/rng.hpp"

namespace tmac::crypto {

/// Index s of the hash family h_s. SHA-256 stands in for a UOWHF.
struct UowhfIndex {
  Bytes s;
  bool operator==(const UowhfIndex&) const = default;
};

inline constexpr std::size_t kDefaultHashBits = 256;

/// lambda bits of index, rounded up to whole bytes.
UowhfIndex uowhf_index(std::size_t lambda, Rng& rng);

/// h_s(x) truncated (or counter-extended) to out_bits.
BitString uowhf_eval(const UowhfIndex& s, const Bytes& x, std::size_t out_bits = kDefaultHashBits);
BitString uowhf_eval(const UowhfIndex& s, const BitString& x, std::size_t out_bits = kDefaultHashBits);

}  // namespace tmac::crypto

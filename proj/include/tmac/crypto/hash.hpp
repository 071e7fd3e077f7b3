#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

#include "tmac/core/bytes.hpp"

namespace tmac::crypto {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::initializer_list<const Bytes*> parts);
Digest sha256(const Bytes& data);
Digest hmac_sha256(const Bytes& key, std::initializer_list<const Bytes*> parts);

// Constant-time equality.
bool equal_ct(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);

}  // namespace tmac::crypto

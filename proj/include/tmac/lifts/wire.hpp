#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tmac/core/bitstring.hpp"
#include "tmac/core/bytes.hpp"

namespace tmac::lifts {

/// Layer tags of the binary framing.
enum class Layer : std::uint8_t {
  Ctmac = 0x01,
  Otl = 0x02,
  Ot = 0x03,
  Tom = 0x04,
  Tms = 0x05,
  TomJ = 0x06,
  Full = 0x07,
};

/// tag(1) || u32 field count || per field: u32 length || bytes. Big-endian.
Bytes frame(Layer tag, const std::vector<Bytes>& fields);

/// Strict parse: tag must match, lengths must cover the input exactly, and
/// when `expect` is non-zero the field count must equal it.
std::optional<std::vector<Bytes>> unframe(Layer tag, const Bytes& b, std::size_t expect = 0);

std::size_t framed_size(const std::vector<std::size_t>& field_sizes);

Bytes u32_field(std::uint32_t v);
std::optional<std::uint32_t> read_u32_field(const Bytes& f);

/// Bits as whole bytes; parsing rejects non-zero padding so every bit string
/// has exactly one encoding.
std::optional<BitString> bits_from_field(const Bytes& f, std::size_t nbits);

}  // namespace tmac::lifts

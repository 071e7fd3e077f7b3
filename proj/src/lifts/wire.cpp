#include "tmac/lifts/wire.hpp"

namespace tmac::lifts {

Bytes frame(Layer tag, const std::vector<Bytes>& fields) {
  Bytes out;
  out.push_back(static_cast<std::uint8_t>(tag));
  put_u32be(out, static_cast<std::uint32_t>(fields.size()));
  for (const Bytes& f : fields) {
    put_u32be(out, static_cast<std::uint32_t>(f.size()));
    append(out, f);
  }
  return out;
}

std::optional<std::vector<Bytes>> unframe(Layer tag, const Bytes& b, std::size_t expect) {
  if (b.size() < 5 || b[0] != static_cast<std::uint8_t>(tag)) return std::nullopt;
  const std::uint32_t n = get_u32be(b.data() + 1);
  if (expect && n != expect) return std::nullopt;
  std::vector<Bytes> fields;
  std::size_t pos = 5;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (b.size() - pos < 4) return std::nullopt;
    const std::uint32_t len = get_u32be(b.data() + pos);
    pos += 4;
    if (b.size() - pos < len) return std::nullopt;
    fields.emplace_back(b.begin() + pos, b.begin() + pos + len);
    pos += len;
  }
  if (pos != b.size()) return std::nullopt;
  return fields;
}

std::size_t framed_size(const std::vector<std::size_t>& field_sizes) {
  std::size_t n = 5;
  for (auto s : field_sizes) n += 4 + s;
  return n;
}

Bytes u32_field(std::uint32_t v) {
  Bytes b;
  put_u32be(b, v);
  return b;
}

std::optional<std::uint32_t> read_u32_field(const Bytes& f) {
  if (f.size() != 4) return std::nullopt;
  return get_u32be(f.data());
}

std::optional<BitString> bits_from_field(const Bytes& f, std::size_t nbits) {
  if (f.size() != (nbits + 7) / 8) return std::nullopt;
  if (nbits % 8 && (f.back() & (0xff >> (nbits % 8)))) return std::nullopt;
  return BitString::from_bytes(f, nbits);
}

}  // namespace tmac::lifts

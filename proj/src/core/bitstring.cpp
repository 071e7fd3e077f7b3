#include "tmac/core/bitstring.hpp"

#include <algorithm>
#include <bit>

#include "tmac/core/error.hpp"
#include "tmac/core/rng.hpp"
#include "tmac/kernels/bitops.hpp"

namespace tmac {

BitString::BitString(std::size_t n, bool fill) : n_(n), w_((n + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
  clear_tail();
}

void BitString::clear_tail() {
  if (n_ % 64 && !w_.empty()) w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

BitString BitString::from_string(std::string_view s) {
  BitString b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') b.set(i, true);
    else if (s[i] != '0') fail(Errc::MalformedEncoding, "bit string must contain only 0 and 1");
  }
  return b;
}

BitString BitString::from_bytes(const Bytes& bytes, std::size_t nbits) {
  if (nbits > bytes.size() * 8) fail(Errc::LengthMismatch, "not enough bytes for bit length");
  BitString b(nbits);
  for (std::size_t i = 0; i < nbits; ++i)
    if ((bytes[i >> 3] >> (7 - (i & 7))) & 1) b.set(i, true);
  return b;
}

BitString BitString::from_hex(std::string_view hex, std::size_t nbits) {
  Bytes raw = tmac::from_hex(hex);
  if (raw.size() != (nbits + 7) / 8) fail(Errc::LengthMismatch, "hex length does not match bit length");
  return from_bytes(raw, nbits);
}

BitString BitString::random(std::size_t n, Rng& rng) {
  BitString b(n);
  for (auto& w : b.w_) w = rng.next_u64();
  b.clear_tail();
  return b;
}

BitString BitString::from_u64(std::uint64_t v, std::size_t nbits) {
  BitString b(nbits);
  if (!b.w_.empty()) b.w_[0] = v;
  b.clear_tail();
  return b;
}

std::size_t BitString::count() const { return kernels::popcount(w_.data(), w_.size()); }

std::vector<std::size_t> BitString::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    std::uint64_t w = w_[k];
    while (w) {
      out.push_back(k * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

static void same_size(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) fail(Errc::LengthMismatch, "bit strings differ in length");
}

BitString BitString::operator^(const BitString& o) const {
  BitString r = *this;
  r ^= o;
  return r;
}

BitString& BitString::operator^=(const BitString& o) {
  same_size(*this, o);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

BitString BitString::operator&(const BitString& o) const {
  same_size(*this, o);
  BitString r = *this;
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
  return r;
}

BitString BitString::operator|(const BitString& o) const {
  same_size(*this, o);
  BitString r = *this;
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
  return r;
}

BitString BitString::operator~() const {
  BitString r = *this;
  for (auto& w : r.w_) w = ~w;
  r.clear_tail();
  return r;
}

BitString BitString::concat(const BitString& tail) const {
  BitString r(n_ + tail.n_);
  std::copy(w_.begin(), w_.end(), r.w_.begin());
  const std::size_t off = n_ % 64, base = n_ / 64;
  for (std::size_t k = 0; k < tail.w_.size(); ++k) {
    const std::uint64_t w = tail.w_[k];
    r.w_[base + k] |= w << off;
    if (off && base + k + 1 < r.w_.size()) r.w_[base + k + 1] |= w >> (64 - off);
  }
  return r;
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > n_) fail(Errc::LengthMismatch, "slice out of range");
  BitString r(len);
  for (std::size_t i = 0; i < len; ++i)
    if (get(pos + i)) r.set(i, true);
  return r;
}

std::string BitString::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

Bytes BitString::to_bytes() const {
  Bytes out((n_ + 7) / 8, 0);
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) out[i >> 3] |= static_cast<std::uint8_t>(0x80 >> (i & 7));
  return out;
}

bool BitString::operator<(const BitString& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return w_ < o.w_;
}

}  // namespace tmac

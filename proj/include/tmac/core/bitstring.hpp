#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tmac/core/bytes.hpp"

namespace tmac {

class Rng;

/// Packed bit string. Bit i lives in word i/64 at position i%64; bits past
/// size() are always zero so word-level kernels can run over whole words.
/// Byte conversion is MSB-first: bit i is bit (7 - i%8) of byte i/8.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n, bool fill = false);

  static BitString from_string(std::string_view s);  // "0110": character i is bit i
  static BitString from_bytes(const Bytes& b, std::size_t nbits);
  static BitString from_bytes(const Bytes& b) { return from_bytes(b, b.size() * 8); }
  static BitString from_hex(std::string_view hex, std::size_t nbits);
  static BitString random(std::size_t n, Rng& rng);
  static BitString from_u64(std::uint64_t v, std::size_t nbits);  // bit i = (v >> i) & 1

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }
  std::size_t word_count() const noexcept { return w_.size(); }
  const std::uint64_t* words() const noexcept { return w_.data(); }
  std::uint64_t* words() noexcept { return w_.data(); }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) w_[i >> 6] |= m;
    else w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const;
  std::vector<std::size_t> indices() const;  // positions of set bits, ascending

  BitString operator^(const BitString& o) const;
  BitString operator&(const BitString& o) const;
  BitString operator|(const BitString& o) const;
  BitString operator~() const;
  BitString& operator^=(const BitString& o);

  BitString concat(const BitString& tail) const;
  BitString slice(std::size_t pos, std::size_t len) const;

  std::string to_string() const;
  Bytes to_bytes() const;
  std::string to_hex() const { return tmac::to_hex(to_bytes()); }

  bool operator==(const BitString& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const BitString& o) const { return !(*this == o); }
  bool operator<(const BitString& o) const;

  void clear_tail();

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace tmac

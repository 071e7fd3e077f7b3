#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tmac {

using Bytes = std::vector<std::uint8_t>;

std::string to_hex(const Bytes& b);
Bytes from_hex(std::string_view hex);  // throws MalformedEncoding

Bytes bytes_of(std::string_view s);

void put_u32be(Bytes& out, std::uint32_t v);
void put_u64be(Bytes& out, std::uint64_t v);
std::uint32_t get_u32be(const std::uint8_t* p);
std::uint64_t get_u64be(const std::uint8_t* p);

inline void append(Bytes& out, const Bytes& tail) { out.insert(out.end(), tail.begin(), tail.end()); }

}  // namespace tmac

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmac/core/bytes.hpp"

namespace tmac::games {

struct Counters {
  std::uint64_t r = 0;  // token-gen calls
  std::uint64_t q = 0;  // verification-type queries
  std::uint64_t w = 0;  // submitted pairs
  std::uint64_t s = 0;  // signing-oracle calls

  bool operator==(const Counters&) const = default;
};

struct QueryRecord {
  std::string oracle;
  std::string input_digest;  // hex SHA-256 of the canonical input encoding
  std::string output;
  Counters counters;  // after this record

  bool operator==(const QueryRecord&) const = default;
};

/// Append-only query log.
class Transcript {
 public:
  void append(std::string oracle, const Bytes& input, std::string output, const Counters& c);
  const std::vector<QueryRecord>& records() const { return log_; }

  // One JSON object per line.
  std::string to_jsonl() const;

  bool operator==(const Transcript&) const = default;

 private:
  std::vector<QueryRecord> log_;
};

std::string digest_hex(const Bytes& input);

}  // namespace tmac::games

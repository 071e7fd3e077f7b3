#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <set>
#include <string>
#include <tuple>

#include <json.hpp>

#include "tmac/apps/money.hpp"

namespace tmac::apps {

/// A bill spent as a signature over timestamp || branch.
struct Check {
  std::uint64_t timestamp = 0;
  std::uint32_t branch = 0;
  lifts::SchemeSignature signature;

  /// The signed document: 64 timestamp bits then 32 branch bits.
  lifts::Document document() const;

  /// u64 BE timestamp || u32 BE branch || signature bytes.
  Bytes to_bytes() const;
  static Check from_bytes(const Bytes& b);  // MalformedEncoding when shorter than 12 bytes
};

/// Needs a scheme that signs 96-bit documents.
Check check_issue(const Bank& bank, Bill& bill, std::uint64_t timestamp, std::uint32_t branch, Rng& rng);

enum class CashResult { Accepted, Expired, DoubleSpend, BadSignature };
std::string to_string(CashResult r);

/// Cashed checks within a sliding window [now - window, now] of a logical
/// clock. Entries that fall out of the window are purged on every access.
/// All operations take one lock, so interleaved calls are linearizable.
class CheckDatabase {
 public:
  using Clock = std::function<std::uint64_t()>;
  using Entry = std::tuple<std::uint64_t, std::uint32_t, std::string>;  // timestamp, branch, digest hex

  CheckDatabase(std::uint64_t window, Clock clock) : window_(window), clock_(std::move(clock)) {}

  /// Timestamp in the window, not seen before, and a valid signature.
  CashResult cash(const Bank& bank, const Check& check);

  std::size_t size();
  std::uint64_t window() const { return window_; }
  nlohmann::ordered_json snapshot();

 private:
  void purge_locked(std::uint64_t now);

  std::uint64_t window_;
  Clock clock_;
  std::mutex mu_;
  std::set<Entry> cashed_;
};

CashResult check_cash(const Bank& bank, CheckDatabase& db, const Check& check);

}  // namespace tmac::apps

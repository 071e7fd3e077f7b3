#include "tmac/apps/checks.hpp"

#include "tmac/core/error.hpp"
#include "tmac/crypto/hash.hpp"

namespace tmac::apps {

lifts::Document Check::document() const {
  return BitString::from_u64(timestamp, 64).concat(BitString::from_u64(branch, 32));
}

Bytes Check::to_bytes() const {
  Bytes out;
  put_u64be(out, timestamp);
  put_u32be(out, branch);
  append(out, signature);
  return out;
}

Check Check::from_bytes(const Bytes& b) {
  if (b.size() < 12) fail(Errc::MalformedEncoding, "check shorter than its 12-byte header");
  Check c;
  c.timestamp = get_u64be(b.data());
  c.branch = get_u32be(b.data() + 8);
  c.signature.assign(b.begin() + 12, b.end());
  return c;
}

Check check_issue(const Bank& bank, Bill& bill, std::uint64_t timestamp, std::uint32_t branch, Rng& rng) {
  Check c;
  c.timestamp = timestamp;
  c.branch = branch;
  c.signature = money_respond(bank, bill, c.document(), rng);
  return c;
}

std::string to_string(CashResult r) {
  switch (r) {
    case CashResult::Accepted: return "accepted";
    case CashResult::Expired: return "expired";
    case CashResult::DoubleSpend: return "double-spend";
    case CashResult::BadSignature: return "bad-signature";
  }
  return "?";
}

void CheckDatabase::purge_locked(std::uint64_t now) {
  const std::uint64_t oldest = now >= window_ ? now - window_ : 0;
  for (auto it = cashed_.begin(); it != cashed_.end();) {
    if (std::get<0>(*it) < oldest)
      it = cashed_.erase(it);
    else
      ++it;
  }
}

CashResult CheckDatabase::cash(const Bank& bank, const Check& check) {
  std::lock_guard<std::mutex> lock(mu_);
  const std::uint64_t now = clock_();
  purge_locked(now);
  const std::uint64_t oldest = now >= window_ ? now - window_ : 0;
  if (check.timestamp < oldest || check.timestamp > now) return CashResult::Expired;
  const BitString doc = check.document();
  const auto digest = crypto::sha256(doc.to_bytes());
  Entry e{check.timestamp, check.branch, to_hex(Bytes(digest.begin(), digest.end()))};
  if (cashed_.count(e)) return CashResult::DoubleSpend;
  if (!bank.scheme->verify(bank.key, doc, check.signature)) return CashResult::BadSignature;
  cashed_.insert(std::move(e));
  return CashResult::Accepted;
}

std::size_t CheckDatabase::size() {
  std::lock_guard<std::mutex> lock(mu_);
  purge_locked(clock_());
  return cashed_.size();
}

nlohmann::ordered_json CheckDatabase::snapshot() {
  std::lock_guard<std::mutex> lock(mu_);
  const std::uint64_t now = clock_();
  purge_locked(now);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [ts, branch, digest] : cashed_)
    rows.push_back({{"timestamp", ts}, {"branch", branch}, {"digest", digest}});
  return {{"now", now}, {"window", window_}, {"cashed", rows}};
}

CashResult check_cash(const Bank& bank, CheckDatabase& db, const Check& check) { return db.cash(bank, check); }

}  // namespace tmac::apps

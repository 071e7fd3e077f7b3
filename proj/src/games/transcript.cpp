#include "tmac/games/transcript.hpp"

#include <json.hpp>

#include "tmac/crypto/hash.hpp"

namespace tmac::games {

std::string digest_hex(const Bytes& input) {
  auto d = crypto::sha256(input);
  return to_hex(Bytes(d.begin(), d.end()));
}

void Transcript::append(std::string oracle, const Bytes& input, std::string output, const Counters& c) {
  log_.push_back({std::move(oracle), digest_hex(input), std::move(output), c});
}

std::string Transcript::to_jsonl() const {
  std::string out;
  for (const auto& r : log_) {
    nlohmann::ordered_json j;
    j["oracle"] = r.oracle;
    j["input_digest"] = r.input_digest;
    j["output"] = r.output;
    j["counters"] = {{"r", r.counters.r}, {"q", r.counters.q}, {"w", r.counters.w}, {"s", r.counters.s}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace tmac::games

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tmac/lifts/lifts.hpp"

namespace tmac::apps {

/// The bank's secret: a scheme instance plus its key. Challenges are drawn
/// from the scheme's domain; unrestricted domains use challenge_bits.
struct Bank {
  lifts::SchemePtr scheme;
  lifts::Key key;
  std::size_t challenge_bits = 64;
  std::uint64_t next_serial = 0;
};

Bank bank_setup(lifts::SchemePtr scheme, Rng& rng, std::size_t challenge_bits = 64);

struct Bill {
  std::uint64_t serial = 0;
  lifts::SchemeToken token;
  bool spent = false;
};

Bill money_mint(Bank& bank, Rng& rng);

/// Uniform challenge document for this bank.
lifts::Document money_challenge(const Bank& bank, Rng& rng);

/// Bank draws a challenge, the holder signs it with the bill (consuming it),
/// the bank verifies. ConsumedBill if the bill was already used.
bool money_verify_interactive(const Bank& bank, Bill& bill, Rng& rng);

/// Holder side of one challenge-response round.
lifts::SchemeSignature money_respond(const Bank& bank, Bill& bill, const lifts::Document& challenge, Rng& rng);

// MONEY-FORGE ----------------------------------------------------------------

class MoneyAdversary {
 public:
  virtual ~MoneyAdversary() = default;
  virtual std::string name() const = 0;
  /// Answer challenge number `attempt` using the wallet of minted bills.
  virtual lifts::SchemeSignature respond(const Bank& bank, std::vector<Bill>& wallet, const lifts::Document& challenge,
                                         std::size_t attempt, Rng& rng) = 0;
};

/// Spends the wallet in order; once empty, replays the last signature.
class HonestMoneyAdversary final : public MoneyAdversary {
 public:
  std::string name() const override { return "honest"; }
  lifts::SchemeSignature respond(const Bank& bank, std::vector<Bill>& wallet, const lifts::Document& challenge,
                                 std::size_t attempt, Rng& rng) override;

 private:
  lifts::SchemeSignature last_;
};

/// Leaves the bills untouched and answers every challenge with a uniformly
/// random CTMAC signature of lambda bits.
class RandomSignatureMoneyAdversary final : public MoneyAdversary {
 public:
  explicit RandomSignatureMoneyAdversary(std::size_t lambda) : lambda_(lambda) {}
  std::string name() const override { return "random-signature"; }
  lifts::SchemeSignature respond(const Bank& bank, std::vector<Bill>& wallet, const lifts::Document& challenge,
                                 std::size_t attempt, Rng& rng) override;

 private:
  std::size_t lambda_;
};

struct MoneyForgeResult {
  std::size_t bills = 0;
  std::size_t attempts = 0;
  std::size_t accepted = 0;
  bool won = false;  // accepted > bills
};

/// The adversary receives `bills` minted bills and then answers `attempts`
/// fresh challenges.
MoneyForgeResult run_money_forge(lifts::SchemePtr scheme, std::size_t bills, std::size_t attempts,
                                 MoneyAdversary& adv, Rng& rng, std::size_t challenge_bits = 64);

}  // namespace tmac::apps

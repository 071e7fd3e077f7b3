#include "tmac/apps/money.hpp"

#include "tmac/core/error.hpp"

namespace tmac::apps {

Bank bank_setup(lifts::SchemePtr scheme, Rng& rng, std::size_t challenge_bits) {
  if (!scheme) fail(Errc::InvalidArgument, "bank needs a scheme");
  Bank b;
  b.key = scheme->key_gen(rng);
  b.scheme = std::move(scheme);
  b.challenge_bits = challenge_bits;
  return b;
}

Bill money_mint(Bank& bank, Rng& rng) {
  Bill bill;
  bill.serial = bank.next_serial++;
  bill.token = bank.scheme->token_gen(bank.key, rng);
  return bill;
}

lifts::Document money_challenge(const Bank& bank, Rng& rng) {
  const lifts::Domain d = bank.scheme->domain();
  const std::size_t n = d.kind == lifts::Domain::Unrestricted ? bank.challenge_bits : d.length;
  return BitString::random(n, rng);
}

lifts::SchemeSignature money_respond(const Bank& bank, Bill& bill, const lifts::Document& challenge, Rng& rng) {
  if (bill.spent) fail(Errc::ConsumedBill, "bill " + std::to_string(bill.serial) + " was already verified");
  bill.spent = true;
  return bank.scheme->sign(bill.token, challenge, rng);
}

bool money_verify_interactive(const Bank& bank, Bill& bill, Rng& rng) {
  if (bill.spent) fail(Errc::ConsumedBill, "bill " + std::to_string(bill.serial) + " was already verified");
  const lifts::Document m = money_challenge(bank, rng);
  const lifts::SchemeSignature sig = money_respond(bank, bill, m, rng);
  return bank.scheme->verify(bank.key, m, sig);
}

lifts::SchemeSignature HonestMoneyAdversary::respond(const Bank& bank, std::vector<Bill>& wallet,
                                                     const lifts::Document& challenge, std::size_t, Rng& rng) {
  for (auto& bill : wallet)
    if (!bill.spent) return last_ = money_respond(bank, bill, challenge, rng);
  return last_;
}

lifts::SchemeSignature RandomSignatureMoneyAdversary::respond(const Bank&, std::vector<Bill>&, const lifts::Document&,
                                                              std::size_t, Rng& rng) {
  return lifts::ctmac_signature(BitString::random(lambda_, rng));
}

MoneyForgeResult run_money_forge(lifts::SchemePtr scheme, std::size_t bills, std::size_t attempts,
                                 MoneyAdversary& adv, Rng& rng, std::size_t challenge_bits) {
  Rng bank_rng = rng.split(0xba);
  Rng adv_rng = rng.split(0xad);
  Bank bank = bank_setup(std::move(scheme), bank_rng, challenge_bits);
  std::vector<Bill> wallet;
  for (std::size_t i = 0; i < bills; ++i) wallet.push_back(money_mint(bank, bank_rng));
  MoneyForgeResult r;
  r.bills = bills;
  r.attempts = attempts;
  for (std::size_t i = 0; i < attempts; ++i) {
    const lifts::Document m = money_challenge(bank, bank_rng);
    const lifts::SchemeSignature sig = adv.respond(bank, wallet, m, i, adv_rng);
    if (bank.scheme->verify(bank.key, m, sig)) ++r.accepted;
  }
  r.won = r.accepted > bills;
  return r;
}

}  // namespace tmac::apps

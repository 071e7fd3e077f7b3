#include "tmac/games/weak_del.hpp"

#include "tmac/core/error.hpp"

namespace tmac::games {

BitString HonestDeleteAdversary::certificate(const bb84::QubitRegister& c, bool m, Rng& rng) {
  m_ = m;
  cert_ = bb84::measure_all(c, bb84::basis_of(m), rng);
  return cert_;
}

BitString HonestDeleteAdversary::guess(const BitString& k, Rng& rng) {
  BitString g(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) g.set(i, k[i] == m_ ? cert_[i] : rng.bit());
  return g;
}

BitString BreidbartAdversary::certificate(const bb84::QubitRegister& c, bool, Rng& rng) {
  outcome_ = BitString(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) outcome_.set(i, bb84::measure_breidbart(c.at(i), rng));
  return outcome_;
}

BitString BreidbartAdversary::guess(const BitString&, Rng&) { return outcome_; }

WeakDelRun run_weak_del_ind_detailed(bool m, DeletionAdversary& adv, std::size_t lambda, Rng& rng) {
  if (lambda == 0) fail(Errc::ZeroLength, "lambda must be positive");
  Rng adv_rng = rng.split(0xde1);
  WeakDelRun run;
  run.k = BitString::random(lambda, rng);
  run.a = BitString::random(lambda, rng);
  bb84::QubitRegister c;
  c.value = run.a;
  c.basis = run.k;
  c.mixed = BitString(lambda);
  const BitString cert = adv.certificate(c, m, adv_rng);
  if (cert.size() != lambda) fail(Errc::LengthMismatch, "certificate length differs from lambda");
  const BitString cons = m ? run.k : ~run.k;
  run.certificate_valid = ((cert ^ run.a) & cons).count() == 0;
  run.guess = adv.guess(run.k, adv_rng);
  run.won = run.certificate_valid && run.guess == run.a;
  return run;
}

bool run_weak_del_ind(bool m, DeletionAdversary& adv, std::size_t lambda, Rng& rng) {
  return run_weak_del_ind_detailed(m, adv, lambda, rng).won;
}

std::unique_ptr<DeletionAdversary> make_deletion_adversary(const std::string& name) {
  if (name == "honest-delete") return std::make_unique<HonestDeleteAdversary>();
  if (name == "breidbart") return std::make_unique<BreidbartAdversary>();
  fail(Errc::UnknownAdversary, "no deletion adversary named '" + name + "'");
}

}  // namespace tmac::games

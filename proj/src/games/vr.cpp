#include "tmac/games/vr.hpp"

namespace tmac::games {

VrResponse vr_oracle(const ctmac::SecretKey& k, bool m, const BitString& sigma, double eta) {
  ctmac::VerifyReport rep = ctmac::verify(k, m, sigma, eta);
  VrResponse r;
  r.result = rep.accepted;
  if (rep.accepted) {
    r.cons = rep.cons;
    r.miss = rep.miss;
  }
  return r;
}

VrSimulator::VrSimulator(const BitString& sigma, const VrResponse& success, double eta)
    : cons_(*success.cons), a_on_cons_((sigma ^ *success.miss) & *success.cons), eta_(eta) {}

bool VrSimulator::predict(const BitString& sigma) const {
  const std::size_t miss = ((sigma ^ a_on_cons_) & cons_).count();
  return ctmac::within(miss, eta_, sigma.size());
}

SimulationCheck vr_simulation_check(std::size_t lambda, double eta, std::uint64_t followups, Rng& rng) {
  const bool m = rng.bit();
  ctmac::SecretKey k = ctmac::key_gen(lambda, rng);
  ctmac::Token t = ctmac::token_gen(k);
  BitString sigma = ctmac::sign(t, m, rng);
  VrResponse first = vr_oracle(k, m, sigma, eta);
  VrSimulator sim(sigma, first, eta);

  SimulationCheck out;
  // Perturbations straddle the threshold so both answers occur often.
  const std::uint64_t max_flips = static_cast<std::uint64_t>(2 * eta * lambda) + 3;
  for (std::uint64_t q = 0; q < followups; ++q) {
    BitString probe = sigma;
    const std::uint64_t flips = rng.below(max_flips + 1);
    for (std::uint64_t f = 0; f < flips; ++f) probe.flip(rng.below(lambda));
    const bool truth = ctmac::accepts(k, m, probe, eta);
    out.accepted += truth;
    out.mismatches += truth != sim.predict(probe);
    ++out.queries;
  }
  return out;
}

}  // namespace tmac::games

#include "tmac/apps/otm.hpp"

#include "tmac/core/error.hpp"

namespace tmac::apps {

OtmPackage otm_transmit(bool s0, bool s1, const OtmParams& params, Rng& rng) {
  ctmac::SecretKey k = ctmac::key_gen(params.lambda, rng);
  ctmac::Token t = ctmac::token_gen(k);
  bb84::apply_noise(t.qubits_mut(), params.noise, rng);
  return OtmPackage{fwrap_create(WrappedProgram{s0, s1, std::move(k), params.eta}, params.budget), std::move(t)};
}

std::optional<bool> otm_receive(OtmPackage& pkg, bool m, Rng& rng) {
  BitString sigma = ctmac::sign(pkg.token, m, rng);
  return pkg.hardware.run({m, std::move(sigma)});
}

std::optional<bool> otm_protocol(bool s0, bool s1, bool m, const OtmParams& params, Rng& rng) {
  OtmPackage pkg = otm_transmit(s0, s1, params, rng);
  return otm_receive(pkg, m, rng);
}

Extraction MeasureThenPerturbReceiver::extract(OtmPackage& pkg, Rng& rng) {
  Extraction e;
  BitString sigma = ctmac::sign(pkg.token, false, rng);
  e.s0 = pkg.hardware.run({false, sigma});
  if (sigma.size() > 0) sigma.flip(rng.below(sigma.size()));
  e.s1 = pkg.hardware.run({true, sigma});
  return e;
}

Extraction RandomSignatureReceiver::extract(OtmPackage& pkg, Rng& rng) {
  Extraction e;
  const std::size_t n = pkg.token.lambda();
  for (int m = 0; m < 2; ++m) {
    std::optional<bool>& slot = m ? e.s1 : e.s0;
    for (int i = 0; i < tries_ && !slot; ++i) slot = pkg.hardware.run({m == 1, BitString::random(n, rng)});
  }
  return e;
}

std::unique_ptr<OtmReceiver> make_otm_receiver(const std::string& name) {
  if (name == "measure-then-perturb") return std::make_unique<MeasureThenPerturbReceiver>();
  if (name == "random-signature") return std::make_unique<RandomSignatureReceiver>();
  fail(Errc::UnknownAdversary, "unknown receiver '" + name + "'");
}

bool otm_both_extracted(OtmReceiver& rx, const OtmParams& params, Rng& rng) {
  Rng tx = rng.split(0x7e), adv = rng.split(0xad);
  const bool s0 = tx.bit(), s1 = tx.bit();
  OtmPackage pkg = otm_transmit(s0, s1, params, tx);
  const Extraction e = rx.extract(pkg, adv);
  return e.s0 == s0 && e.s1 == s1;
}

}  // namespace tmac::apps

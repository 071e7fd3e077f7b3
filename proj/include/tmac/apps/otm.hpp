#pragma once

#include <memory>
#include <optional>
#include <string>

#include "tmac/apps/fwrap.hpp"

namespace tmac::apps {

struct OtmParams {
  std::size_t lambda = 64;
  double eta = 0.07;
  bb84::NoiseSpec noise{};  // p = 0: noiseless channel
  FwrapBudget budget{};
};

/// What the receiver holds after the transmitter's single message.
struct OtmPackage {
  Fwrap hardware;
  ctmac::Token token;
};

/// Key and token generation, wrapping of M, token sent through the channel.
OtmPackage otm_transmit(bool s0, bool s1, const OtmParams& params, Rng& rng);

/// Honest receiver: sign m with the token and query the hardware once.
std::optional<bool> otm_receive(OtmPackage& pkg, bool m, Rng& rng);

/// Protocol P^eta end to end; returns the receiver's output.
std::optional<bool> otm_protocol(bool s0, bool s1, bool m, const OtmParams& params, Rng& rng);

struct Extraction {
  std::optional<bool> s0;
  std::optional<bool> s1;
  bool both() const { return s0.has_value() && s1.has_value(); }
};

class OtmReceiver {
 public:
  virtual ~OtmReceiver() = default;
  virtual std::string name() const = 0;
  virtual Extraction extract(OtmPackage& pkg, Rng& rng) = 0;
};

/// Measures the token in the computational basis, learns s0, then queries
/// m = 1 with that string after flipping one random bit.
class MeasureThenPerturbReceiver final : public OtmReceiver {
 public:
  std::string name() const override { return "measure-then-perturb"; }
  Extraction extract(OtmPackage& pkg, Rng& rng) override;
};

/// Ignores the token and sends `tries` random signatures for each m.
class RandomSignatureReceiver final : public OtmReceiver {
 public:
  explicit RandomSignatureReceiver(int tries = 1) : tries_(tries) {}
  std::string name() const override { return "random-signature"; }
  Extraction extract(OtmPackage& pkg, Rng& rng) override;

 private:
  int tries_;
};

std::unique_ptr<OtmReceiver> make_otm_receiver(const std::string& name);

/// One run: random s0, s1; true iff the receiver recovered both correctly.
bool otm_both_extracted(OtmReceiver& rx, const OtmParams& params, Rng& rng);

}  // namespace tmac::apps

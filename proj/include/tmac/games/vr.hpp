#pragma once

#include <cstdint>

#include "tmac/ctmac/ctmac.hpp"
#include "tmac/games/forge.hpp"

namespace tmac::games {

/// CTMAC^eta verification that, on success, also reveals Cons_m and Miss.
VrResponse vr_oracle(const ctmac::SecretKey& k, bool m, const BitString& sigma, double eta);

/// After one successful VR query for m the adversary knows a on Cons_m and
/// can answer every later m-query itself.
class VrSimulator {
 public:
  VrSimulator(const BitString& sigma, const VrResponse& success, double eta);
  bool predict(const BitString& sigma) const;

 private:
  BitString cons_;
  BitString a_on_cons_;
  double eta_;
};

struct SimulationCheck {
  std::uint64_t queries = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t accepted = 0;  // oracle-side accepts among the follow-ups
};

/// One honest success, then `followups` perturbed signatures answered both
/// locally and by the real oracle.
SimulationCheck vr_simulation_check(std::size_t lambda, double eta, std::uint64_t followups, Rng& rng);

}  // namespace tmac::games

#include "tmac/games/sabotage.hpp"

#include "tmac/core/error.hpp"

namespace tmac::games {

bool run_sabotage_game(const lifts::TmacScheme& scheme, ForgeAdversary& adv, const OracleSet& oracles, Rng& rng) {
  Rng adv_rng = rng.split(0x5ab);
  lifts::Key key = scheme.key_gen(rng);
  ForgeContext ctx(scheme, key, oracles, rng, adv_rng);
  std::vector<Submission> subs;
  try {
    subs = adv.run(ctx);
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    return false;
  }
  for (const auto& s : subs) {
    const bool first = scheme.verify(key, s.m, s.sig);
    const bool second = scheme.verify(key, s.m, s.sig);
    if (first && !second) return true;
  }
  return false;
}

}  // namespace tmac::games

#pragma once

#include "tmac/games/forge.hpp"

namespace tmac::games {

/// The adversary plays as in the forge game; each submitted pair is verified
/// twice. True iff some pair passes the first verification and fails the second.
bool run_sabotage_game(const lifts::TmacScheme& scheme, ForgeAdversary& adv, const OracleSet& oracles, Rng& rng);

}  // namespace tmac::games

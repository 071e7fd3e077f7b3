#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tmac/lifts/lifts.hpp"

namespace tmac::fixtures {

// One small instance of every layer, bottom to top.
inline std::vector<std::pair<std::string, lifts::SchemePtr>> all_layers() {
  using namespace lifts;
  const std::size_t lam = 16, hash = 64;
  auto ot = [&] { return lift_ot(lift_otl(ctmac_scheme(lam, 0.0), lam + hash), lam, hash); };
  return {
      {"CTMAC", ctmac_scheme(32, 0.0)},
      {"CTMAC-eta", ctmac_scheme(64, 0.07)},
      {"OTL", lift_otl(ctmac_scheme(lam, 0.0), 8)},
      {"OT", ot()},
      {"TOM", lift_tom(ot(), lam)},
      {"TMS", lift_tms(lift_tom(ot(), lam), lam)},
      {"full_ctmac", full_ctmac({lam, lam, hash, 0.07})},
      {"TomJ", lift_tomj(ot(), lam, 4)},
  };
}

inline lifts::Document random_document(const lifts::TmacScheme& s, Rng& rng) {
  const lifts::Domain d = s.domain();
  const std::size_t n = d.kind == lifts::Domain::Unrestricted ? 1 + rng.below(96) : d.length;
  return BitString::random(n, rng);
}

}  // namespace tmac::fixtures

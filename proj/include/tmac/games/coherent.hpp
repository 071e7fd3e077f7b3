#pragma once

#include "tmac/bb84/statevector.hpp"
#include "tmac/ctmac/ctmac.hpp"

namespace tmac::games {

/// Maximum register for the general (statevector) branch.
inline constexpr int kCoherentMaxQubits = 12;

/// The register is read in basis m and marked with [|Miss| <= eta*lambda].
///
/// Structured branch: valid when every checked coordinate holds a pure qubit
/// already in basis m, so the predicate is deterministic and the register is
/// left as it was. Anything else raises UnsupportedQueryShape.
bool coherent_verify_structured(const ctmac::SecretKey& k, const bb84::QubitRegister& reg, bool m, double eta);

/// General branch: applies the predicate as a projective measurement on the
/// statevector and leaves the collapsed post-state in `sv`.
bool coherent_verify_statevector(const ctmac::SecretKey& k, bb84::StateVector& sv, bool m, double eta, Rng& rng);

}  // namespace tmac::games

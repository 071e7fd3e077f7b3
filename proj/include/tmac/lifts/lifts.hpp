#pragma once

#include "tmac/lifts/scheme.hpp"

namespace tmac::lifts {

/// CTMAC^eta on a one-bit domain; eta = 0 is the noise-sensitive scheme.
SchemePtr ctmac_scheme(std::size_t lambda, double eta);

/// l independent instances, one per document bit.
SchemePtr lift_otl(SchemePtr base, std::size_t ell);

/// Unrestricted documents: sign s || h_s(m). Base domain must be lambda + hash_bits.
SchemePtr lift_ot(SchemePtr base, std::size_t lambda, std::size_t hash_bits = 256);

/// Unbounded tokens under one AEAD master key; each token carries its own base key.
SchemePtr lift_tom(SchemePtr base, std::size_t lambda);

/// Signs m || rnd with fresh rnd of lambda bits.
SchemePtr lift_tms(SchemePtr base, std::size_t lambda);

/// Exactly j tokens: base keys under j-secret encryption, authenticated by a j-time MAC.
SchemePtr lift_tomj(SchemePtr base, std::size_t lambda, std::size_t j);

struct FullParams {
  std::size_t lambda = 128;      // hash / index / rnd length
  std::size_t sub_lambda = 128;  // qubits per document bit
  std::size_t hash_bits = 256;
  double eta = 0.07;

  std::size_t ell() const { return hash_bits + lambda; }
};

/// The inlined noise-tolerant scheme: l = hash_bits + lambda sub-tokens,
/// m' = h_r1(m || r2) || r1, per-bit threshold eta * sub_lambda.
SchemePtr full_ctmac(const FullParams& p);

/// OTL -> OT -> TOM -> TMS over CTMAC^eta with the same parameters as full_ctmac.
SchemePtr composed_ctmac(const FullParams& p);

}  // namespace tmac::lifts

namespace tmac::lifts {

/// Helpers for harness code that talks to a bare CTMAC instance.
ctmac::SecretKey ctmac_key_of(const Key& k, std::size_t lambda);
SchemeSignature ctmac_signature(const BitString& sigma);

}  // namespace tmac::lifts

#include "tmac/games/coherent.hpp"

#include <string>

#include "tmac/core/error.hpp"

namespace tmac::games {

bool coherent_verify_structured(const ctmac::SecretKey& k, const bb84::QubitRegister& reg, bool m, double eta) {
  if (reg.size() != k.lambda()) fail(Errc::LengthMismatch, "register length differs from lambda");
  const BitString cons = m ? k.b : ~k.b;
  const BitString basis_m(reg.size(), m);
  // Checked coordinates must be pure and already in basis m.
  if ((cons & (reg.mixed | (reg.basis ^ basis_m))).count() != 0)
    fail(Errc::UnsupportedQueryShape, "a checked coordinate is mixed or off-basis");
  const std::size_t miss = ((reg.value ^ k.a) & cons).count();
  return ctmac::within(miss, eta, k.lambda());
}

bool coherent_verify_statevector(const ctmac::SecretKey& k, bb84::StateVector& sv, bool m, double eta, Rng& rng) {
  const int n = sv.qubits();
  if (n > kCoherentMaxQubits)
    fail(Errc::OversizeRegister, std::to_string(n) + " qubits exceeds the coherent oracle cap");
  if (static_cast<std::size_t>(n) != k.lambda()) fail(Errc::LengthMismatch, "register length differs from lambda");
  std::uint64_t a = 0, cons = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - i);
    if (k.a[i]) a |= bit;
    if (k.b[i] == m) cons |= bit;
  }
  if (m)
    for (int i = 0; i < n; ++i) sv.h(i);
  const double bound = eta * n;
  const bool r = sv.measure_predicate(
      [&](std::uint64_t x) { return static_cast<double>(__builtin_popcountll((x ^ a) & cons)) <= bound; }, rng);
  if (m)
    for (int i = 0; i < n; ++i) sv.h(i);
  return r;
}

}  // namespace tmac::games

#include "tmac/lifts/scheme.hpp"

#include "tmac/core/error.hpp"

namespace tmac::lifts {

std::size_t SchemeToken::qubit_count() const {
  std::size_t n = 0;
  for (const auto& t : quantum) n += t.lambda();
  for (const auto& p : parts) n += p.qubit_count();
  return n;
}

void SchemeToken::for_each_token(const std::function<void(ctmac::Token&)>& fn) {
  for (auto& t : quantum) fn(t);
  for (auto& p : parts) p.for_each_token(fn);
}

void SchemeToken::for_each_token(const std::function<void(const ctmac::Token&)>& fn) const {
  for (const auto& t : quantum) fn(t);
  for (const auto& p : parts) p.for_each_token(fn);
}

bool is_conjugate_coding(const SchemeToken& t) {
  bool ok = true;
  t.for_each_token([&](const ctmac::Token& tok) {
    if (tok.consumed()) return;
    if (tok.qubits().mixed.count() != 0) ok = false;
  });
  return ok;
}

void apply_noise(SchemeToken& t, const bb84::NoiseSpec& spec, Rng& rng) {
  t.for_each_token([&](ctmac::Token& tok) {
    if (!tok.consumed()) bb84::apply_noise(tok.qubits_mut(), spec, rng);
  });
}

void TmacScheme::check_domain(const Document& m) const {
  if (!domain().admits(m))
    fail(Errc::DomainMismatch, name() + " takes " + std::to_string(domain().length) + "-bit documents, got " +
                                   std::to_string(m.size()));
}

}  // namespace tmac::lifts

#include "tmac/bb84/qubit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <cstdio>
#include <limits>

#include "tmac/core/error.hpp"
#include "tmac/kernels/bitops.hpp"

namespace tmac::bb84 {

std::string to_string(const QubitState& q) {
  if (q.mixed) return "I/2";
  if (q.basis == Basis::Computational) return q.bit ? "|1>" : "|0>";
  return q.bit ? "|->" : "|+>";
}

bool measure(const QubitState& q, Basis basis, Rng& rng) {
  if (!q.mixed && q.basis == basis) return q.bit;
  return rng.bit();
}

std::string to_string(NoiseMap m) {
  switch (m) {
    case NoiseMap::PauliX: return "X";
    case NoiseMap::PauliY: return "Y";
    case NoiseMap::PauliZ: return "Z";
    case NoiseMap::Depolarize: return "depolarize";
    case NoiseMap::ReplaceUniform: return "replace";
  }
  return "?";
}

std::string to_string(const NoiseSpec& s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s:%.17g", to_string(s.map).c_str(), s.p);
  return buf;
}

NoiseSpec parse_noise(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) fail(Errc::InvalidArgument, "noise spec must be kind:p, got '" + text + "'");
  std::string kind = text.substr(0, colon);
  std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char c) { return std::tolower(c); });
  NoiseSpec s;
  if (kind == "x" || kind == "paulix") s.map = NoiseMap::PauliX;
  else if (kind == "y" || kind == "pauliy") s.map = NoiseMap::PauliY;
  else if (kind == "z" || kind == "pauliz") s.map = NoiseMap::PauliZ;
  else if (kind == "depolarize" || kind == "dep") s.map = NoiseMap::Depolarize;
  else if (kind == "replace" || kind == "replaceuniform") s.map = NoiseMap::ReplaceUniform;
  else fail(Errc::InvalidArgument, "unknown noise map '" + kind + "'");
  try {
    std::size_t used = 0;
    s.p = std::stod(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(Errc::InvalidArgument, "bad noise probability in '" + text + "'");
  }
  if (!(s.p >= 0.0 && s.p <= 1.0)) fail(Errc::InvalidArgument, "noise probability outside [0,1]");
  return s;
}

QubitState corrupt(const QubitState& q, NoiseMap map, Rng& rng) {
  QubitState r = q;
  switch (map) {
    case NoiseMap::PauliY:
      if (!q.mixed) r.bit = !q.bit;
      break;
    case NoiseMap::PauliX:
      if (!q.mixed && q.basis == Basis::Computational) r.bit = !q.bit;
      break;
    case NoiseMap::PauliZ:
      if (!q.mixed && q.basis == Basis::Hadamard) r.bit = !q.bit;
      break;
    case NoiseMap::Depolarize:
      r = QubitState::maximally_mixed();
      break;
    case NoiseMap::ReplaceUniform: {
      bool bit = rng.bit();
      r = QubitState::pure(bit, basis_of(rng.bit()));
      break;
    }
  }
  return r;
}

std::vector<QubitState> apply_noise(std::vector<QubitState> token, const NoiseSpec& spec, Rng& rng) {
  QubitRegister reg = QubitRegister::from_states(token);
  apply_noise(reg, spec, rng);
  return reg.states();
}

QubitRegister QubitRegister::from_states(const std::vector<QubitState>& qs) {
  QubitRegister r(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) r.put(i, qs[i]);
  return r;
}

void QubitRegister::put(std::size_t i, const QubitState& q) {
  value.set(i, q.mixed ? false : q.bit);
  basis.set(i, !q.mixed && q.basis == Basis::Hadamard);
  mixed.set(i, q.mixed);
}

std::vector<QubitState> QubitRegister::states() const {
  std::vector<QubitState> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = at(i);
  return out;
}

BitString measure_all(const QubitRegister& reg, const BitString& bases, Rng& rng) {
  const std::size_t n = reg.size();
  if (bases.size() != n) fail(Errc::LengthMismatch, "basis string length differs from register");
  const std::size_t nw = reg.value.word_count();
  BitString coins = BitString::random(n, rng);
  BitString match(n);
  std::uint64_t* mw = match.words();
  const std::uint64_t* bw = reg.basis.words();
  const std::uint64_t* sw = bases.words();
  const std::uint64_t* xw = reg.mixed.words();
  for (std::size_t k = 0; k < nw; ++k) mw[k] = ~(bw[k] ^ sw[k]) & ~xw[k];
  match.clear_tail();
  BitString out(n);
  kernels::select(out.words(), reg.value.words(), coins.words(), match.words(), nw);
  return out;
}

BitString measure_all(const QubitRegister& reg, Basis basis, Rng& rng) {
  return measure_all(reg, BitString(reg.size(), basis == Basis::Hadamard), rng);
}

void apply_noise(QubitRegister& reg, const NoiseSpec& spec, Rng& rng) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) fail(Errc::InvalidArgument, "noise probability outside [0,1]");
  if (spec.p == 0.0) return;
  const std::size_t n = reg.size();
  std::size_t i = 0;
  while (true) {
    const std::uint64_t skip = rng.geometric(spec.p);
    if (skip >= n - i) break;
    i += static_cast<std::size_t>(skip);
    reg.put(i, corrupt(reg.at(i), spec.map, rng));
    if (++i >= n) break;
  }
}

}  // namespace tmac::bb84

namespace tmac::bb84 {

double breidbart_success() {
  const double c = std::cos(std::numbers::pi / 8);
  return c * c;
}

bool measure_breidbart(const QubitState& q, Rng& rng) {
  if (q.mixed) return rng.bit();
  return rng.bernoulli(breidbart_success()) ? q.bit : !q.bit;
}

}  // namespace tmac::bb84

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmac/core/bitstring.hpp"
#include "tmac/core/rng.hpp"

namespace tmac::bb84 {

enum class Basis : std::uint8_t { Computational = 0, Hadamard = 1 };

inline Basis basis_of(bool b) { return b ? Basis::Hadamard : Basis::Computational; }

/// One of |0>, |1>, |+>, |->, or the maximally mixed state. Phases are
/// dropped throughout: every observable downstream is a basis measurement.
struct QubitState {
  bool bit = false;
  Basis basis = Basis::Computational;
  bool mixed = false;

  static QubitState pure(bool bit, Basis basis) { return {bit, basis, false}; }
  static QubitState maximally_mixed() { return {false, Basis::Computational, true}; }

  bool operator==(const QubitState&) const = default;
};

std::string to_string(const QubitState& q);  // "|0>", "|+>", "I/2", ...

bool measure(const QubitState& q, Basis basis, Rng& rng);

enum class NoiseMap : std::uint8_t { PauliX, PauliY, PauliZ, Depolarize, ReplaceUniform };

struct NoiseSpec {
  double p = 0.0;
  NoiseMap map = NoiseMap::PauliY;
};

NoiseSpec parse_noise(const std::string& text);  // "Y:0.1", "depolarize:0.05"
std::string to_string(NoiseMap m);
std::string to_string(const NoiseSpec& s);

/// Single-qubit action of a noise map.
QubitState corrupt(const QubitState& q, NoiseMap map, Rng& rng);

std::vector<QubitState> apply_noise(std::vector<QubitState> token, const NoiseSpec& spec, Rng& rng);

/// Packed register of product BB84 states: three parallel bit planes.
struct QubitRegister {
  BitString value;
  BitString basis;  // 1 = Hadamard
  BitString mixed;

  QubitRegister() = default;
  explicit QubitRegister(std::size_t n) : value(n), basis(n), mixed(n) {}
  static QubitRegister from_states(const std::vector<QubitState>& qs);

  std::size_t size() const { return value.size(); }
  QubitState at(std::size_t i) const { return {value[i], basis_of(basis[i]), mixed[i]}; }
  void put(std::size_t i, const QubitState& q);
  std::vector<QubitState> states() const;

  bool operator==(const QubitRegister&) const = default;
};

/// Measure every qubit in the basis selected by `bases` (bit i = 1: Hadamard).
/// Matched pure qubits return their bit; everything else returns a fair coin.
BitString measure_all(const QubitRegister& reg, const BitString& bases, Rng& rng);
BitString measure_all(const QubitRegister& reg, Basis basis, Rng& rng);

/// IID corruption: each qubit is hit with probability p. Sparse rates skip
/// ahead geometrically instead of drawing once per qubit.
void apply_noise(QubitRegister& reg, const NoiseSpec& spec, Rng& rng);

}  // namespace tmac::bb84

namespace tmac::bb84 {

/// Measurement in the intermediate basis {e0, e1}, e0 = cos(pi/8)|0> + sin(pi/8)|1>.
/// Outcome b is read as "the encoded bit is b"; for every pure BB84 state the
/// outcome equals the encoded bit with probability cos^2(pi/8).
bool measure_breidbart(const QubitState& q, Rng& rng);

double breidbart_success();  // cos^2(pi/8)

}  // namespace tmac::bb84

#pragma once

#include <cstddef>
#include <string>

#include "tmac/bb84/qubit.hpp"
#include "tmac/core/bitstring.hpp"
#include "tmac/core/rng.hpp"

namespace tmac::ctmac {

/// k = (a, b): value bits and basis bits, both of length lambda.
struct SecretKey {
  BitString a;
  BitString b;

  std::size_t lambda() const { return a.size(); }
  bool operator==(const SecretKey&) const = default;
};

/// H^b|a>, single use. Signing flags it consumed; honest paths never read it after.
class Token {
 public:
  Token() = default;
  explicit Token(bb84::QubitRegister reg) : reg_(std::move(reg)) {}

  std::size_t lambda() const { return reg_.size(); }
  bool consumed() const { return consumed_; }

  // Throws TokenConsumed once signed.
  const bb84::QubitRegister& qubits() const;
  bb84::QubitRegister& qubits_mut();
  void consume() { consumed_ = true; }

 private:
  bb84::QubitRegister reg_;
  bool consumed_ = false;
};

using Signature = BitString;

struct VerifyReport {
  BitString cons;  // indicator of Cons_m = {i : b_i = m}
  BitString miss;  // indicator of {i in Cons_m : sigma_i != a_i}
  std::size_t cons_size = 0;
  std::size_t miss_size = 0;
  double threshold = 0;  // eta * lambda
  bool accepted = false;
};

SecretKey key_gen(std::size_t lambda, Rng& rng);
Token token_gen(const SecretKey& k);

/// Measure every qubit in basis m and consume the token.
Signature sign(Token& t, bool m, Rng& rng);

/// |Miss| <= eta * lambda as a real comparison.
VerifyReport verify(const SecretKey& k, bool m, const Signature& sigma, double eta);

/// Same predicate as verify() without building the index sets.
bool accepts(const SecretKey& k, bool m, const Signature& sigma, double eta);
std::size_t miss_count(const SecretKey& k, bool m, const Signature& sigma);

inline bool within(std::size_t miss, double eta, std::size_t lambda) {
  return static_cast<double>(miss) <= eta * static_cast<double>(lambda);
}

// "<lambda>:<hex a>:<hex b>" and "<lambda>:<hex sigma>"
std::string key_to_hex(const SecretKey& k);
SecretKey key_from_hex(const std::string& s);
std::string signature_to_hex(const Signature& s);
Signature signature_from_hex(const std::string& s);

/// Classical token descriptions defeat unclonability; they exist only for
/// fixtures and must be requested explicitly.
struct InsecureDebug {
  explicit InsecureDebug() = default;
};
std::string debug_token_to_string(const Token& t, InsecureDebug);
Token debug_token_from_string(const std::string& s, InsecureDebug);

}  // namespace tmac::ctmac
